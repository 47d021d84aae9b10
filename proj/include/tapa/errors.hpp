#pragma once

#include <stdexcept>

namespace tapa {

/// Invalid parameters or a violated precondition (caller error).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure: non-convergence, singular locus, residual gate exceeded.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tapa
