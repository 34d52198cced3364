#pragma once

#include <functional>

namespace fracsolve {

using ScalarFn = std::function<double(double)>;

/// Derivative of `f` at `x` by Ridders' extrapolated central differences.
/// `max_step` bounds the initial half-width; callers keep x - max_step inside
/// the domain of f.
double ridders_derivative(const ScalarFn& f, double x, double max_step);

/// int_0^t (t - s)^{-alpha} g(s) ds for alpha in [0, 1).
///
/// Composite 8-point Gauss-Legendre on a mesh graded geometrically (ratio 0.7)
/// towards both endpoints; the cell touching s = t is integrated with g frozen
/// at its midpoint against the exact weight integral. Refines until two
/// successive passes differ by less than `tol`, else throws ConvergenceError.
double weakly_singular_integral(const ScalarFn& g, double alpha, double t, double tol);

/// Caputo derivative of order theta in (0,1) at time t:
///   (1/Gamma(1-theta)) int_0^t (t-s)^{-theta} f'(s) ds.
///
/// f' comes from Ridders differences; f only needs to be defined on [0, inf).
/// The innermost cells at both ends use increments of f instead of f', which
/// keeps the oracle exact for f with an integrable derivative singularity at 0
/// (e.g. f = t^theta).
double caputo_oracle(const ScalarFn& f, double theta, double t, double tol);

}  // namespace fracsolve
