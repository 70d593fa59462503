#pragma once

#include <stdexcept>
#include <string>

namespace casimir_rect {

/// Input outside the mathematical domain of an operation (x = 0 for a
/// divergent quantity, rho <= 0, unbalanced index set, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative or adaptive numerical procedure did not reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace casimir_rect
