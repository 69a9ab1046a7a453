#pragma once

// Named, seeded property suites over the library's identities.
//
// Each suite draws its cases from a per-case key: case i of a run with
// seed S uses key S + i, so any failing case replays exactly with
// seed S + i and cases 1. Randomized suites seed an mt19937_64 from the
// key (through a splitmix64 scramble); fixed-grid suites select
// combination key mod grid-size, so a run of grid-size consecutive cases
// covers the whole grid regardless of the seed.
//
// Reports are deterministic: identical (name, seed, cases, ctx) produce
// identical bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "qfrac/context.hpp"

namespace qfrac {

struct SuiteDescriptor {
    std::string name;
    std::string description;
    double tolerance;      // pass bound on a case's error measure
    bool relative;         // whether the error measure is relative
    long default_cases;    // covers the full grid for fixed-grid suites
};

struct SuiteFailure {
    long index = 0;
    double error = 0.0;
    std::string replay;    // CLI invocation reproducing exactly this case
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long cases = 0;
    double tolerance = 0.0;
    double max_error = 0.0;
    bool passed = true;
    std::vector<SuiteFailure> failures;
};

// The fixed registry, in stable order.
const std::vector<SuiteDescriptor>& suite_registry();

// Descriptor by name; throws UnknownSuite.
const SuiteDescriptor& find_suite(const std::string& name);

// Run `cases` cases of the named suite (cases >= 1). The context carries
// the truncation policy; suites that sweep q substitute their own base
// per case via with_q.
SuiteReport run_suite(const QContext& ctx, const std::string& name, std::uint64_t seed,
                      long cases);

// The Taylor-remainder suite rerun with the classical-Gamma Caputo
// variant. Exists to show that reading the 1/Gamma(n-alpha) prefactor
// classically breaks the inversion identity; expected to fail.
SuiteReport run_taylor_suite_classical_gamma(const QContext& ctx, std::uint64_t seed, long cases);

namespace detail {

// splitmix64 finalizer; scrambles case keys into engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace detail

} // namespace qfrac
