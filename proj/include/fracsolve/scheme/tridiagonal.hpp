#pragma once

#include <cstddef>
#include <vector>

namespace fracsolve {

/// Row k reads lower[k] x[k-1] + diag[k] x[k] + upper[k] x[k+1] = rhs[k].
/// Before ghost elimination lower[0] and upper[n-1] hold the coefficients of
/// the fictitious nodes outside the domain; afterwards they are zero.
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    TridiagonalSystem() = default;
    explicit TridiagonalSystem(std::size_t n) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0) {}

    std::size_t size() const noexcept { return diag.size(); }
};

/// Thomas algorithm. Throws SolverError on a zero pivot.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

/// max_k |(A x - rhs)_k| ignoring the ghost coefficients lower[0], upper[n-1].
double residual_norm(const TridiagonalSystem& sys, const std::vector<double>& x);

}  // namespace fracsolve
