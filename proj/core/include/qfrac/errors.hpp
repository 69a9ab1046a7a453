#pragma once

// Exception taxonomy shared by every module.
//
// DomainError      argument outside an operation's mathematical domain
// PoleError        argument at (or within 1e-12 of) a pole of Gamma_q
// NonConvergence   a truncated sum/product failed its tolerance test
//                  within the configured term budget
// Divergence       adaptive evaluation of a series whose terms grow;
//                  the sum has no finite value to report
// UnknownSuite     verification suite name not in the registry

#include <stdexcept>
#include <string>

namespace qfrac {

struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleError : DomainError {
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct Divergence : std::runtime_error {
    explicit Divergence(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSuite : std::invalid_argument {
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qfrac
