#pragma once

// Umbrella header for the qfrac library.

#include "qfrac/context.hpp"
#include "qfrac/errors.hpp"
#include "qfrac/mittag.hpp"
#include "qfrac/props.hpp"
#include "qfrac/qcalc.hpp"
#include "qfrac/qcore.hpp"
#include "qfrac/qfractional.hpp"
#include "qfrac/solver.hpp"
