#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracsolve/problem/expression.hpp"

namespace fracsolve {

/// Orders of the multi-term operator: the leading order nu, the positive
/// terms nu_1 < ... < nu_M and the subtracted terms mu_1 < ... < mu_N, all
/// below nu.
struct FractionalOrders {
    double nu = 1.0;
    std::vector<double> nu_list;
    std::vector<double> mu_list;

    friend bool operator==(const FractionalOrders&, const FractionalOrders&) = default;
};

/// c_deriv * u_x + c_value * u = data(t) at one end of the interval.
struct BoundaryCondition {
    double c_deriv = 1.0;
    double c_value = 0.0;
    Expr data;

    friend bool operator==(const BoundaryCondition&, const BoundaryCondition&) = default;
};

/// Memory kernel scale * t^{-beta}; `enabled = false` drops the convolution term.
struct MemoryKernel {
    bool enabled = false;
    double beta = 0.0;
    double scale = 1.0;

    double operator()(double t) const;
    /// Antiderivative int_0^tau K(s) ds.
    double antiderivative(double tau) const;

    friend bool operator==(const MemoryKernel&, const MemoryKernel&) = default;
};

/// One-dimensional problem on [0, length] x [0, horizon]:
///
///   D^nu(rho0 u) + sum_i D^{nu_i}(rho_i u) - sum_j D^{mu_j}(gamma_j u)
///     - a u_xx + d u_x - K * (b u_xx) = f(x, t, u) + g(x, t)
///
/// with u(x, 0) = u0(x) and Robin data at both ends. Coefficients are
/// expressions in (x, t); f may also depend on u.
struct ProblemSpec {
    std::string name = "custom";
    FractionalOrders orders;

    Expr diffusion;   ///< a(x,t)
    Expr advection;   ///< d(x,t)
    Expr memory_coeff;  ///< b(x,t)
    MemoryKernel kernel;

    Expr rho0 = Expr::constant(1.0);
    std::vector<Expr> rho;    ///< one per nu_list entry
    std::vector<Expr> gamma;  ///< one per mu_list entry

    Expr nonlinearity;  ///< f(x,t,u)
    Expr source;        ///< g(x,t)
    Expr initial;       ///< u0(x)

    BoundaryCondition left;
    BoundaryCondition right;

    std::optional<Expr> exact;

    double length = 1.0;
    double horizon = 1.0;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Throws DomainError when the coefficient lists do not match the order lists
/// or the domain is degenerate. Hypothesis checks live in validate_hypotheses.
void check_structure(const ProblemSpec& problem);

}  // namespace fracsolve
