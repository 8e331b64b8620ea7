#pragma once

#include <stdexcept>
#include <string>

namespace wignerks {

// Error taxonomy shared across the library.  Every condition that callers can
// reasonably recover from gets its own type; all derive from std::runtime_error
// (or std::domain_error for precondition violations) so generic handlers work.

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct RangeError : std::domain_error {
    explicit RangeError(const std::string& what) : std::domain_error(what) {}
};

// Half-line moment integral does not converge (total power below zero).
struct DivergentIntegral : std::runtime_error {
    explicit DivergentIntegral(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnitary : std::runtime_error {
    explicit NotUnitary(const std::string& what) : std::runtime_error(what) {}
};

struct SingularPotential : std::runtime_error {
    explicit SingularPotential(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveWeight : std::runtime_error {
    explicit NonPositiveWeight(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wignerks
