#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qvolk {

/// Base class of every error raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad modulus, even m, ...).
struct precondition_error : error {
    using error::error;
};

/// A rational function was evaluated at a root of its denominator.
struct pole_error : error {
    using error::error;
};

/// The requested number of ball representatives exceeds the configured cap.
struct budget_error : error {
    using error::error;
};

/// A p-adic q fails |q - 1|_p < p^(-1/(p-1)).
struct inadmissible_q_error : precondition_error {
    using precondition_error::precondition_error;
};

/// Riemann sums did not stabilise within the level budget.
struct non_convergence_error : error {
    non_convergence_error(const std::string& what, std::vector<long> trace)
        : error(what), trace(std::move(trace)) {}

    /// v_p(S_N - S_{N-1}) for N = 2, 3, ...
    std::vector<long> trace;
};

} // namespace qvolk
