#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracsolve/problem/problem.hpp"

namespace fracsolve {

/// Manufactured test problem with exact solution u = cos(pi x) + t^nu / Gamma(1 + nu)
/// on [0,1] x [0,1], kernel t^{-1/3}, variable coefficients, homogeneous
/// Neumann data and f = x t sin(u^2). Requires 0 < nu1, mu1 < nu < 1.
ProblemSpec example_9_1(double nu, double nu1, double mu1);

enum class Example92Variant { Linear, Nonlinear };

/// Constant-coefficient variant (rho0 = 1, rho1 = gamma1 = 1/2, g = 0) with
/// nu1 = nu/3, mu1 = nu/2; f = 0 (linear) or f = x t cos(u^2). No exact solution.
ProblemSpec example_9_2(Example92Variant variant, double nu);

/// Names accepted by library_problem.
const std::vector<std::string>& library_problem_names();

/// Resolve a library problem by name ("example_9_1", "example_9_2_linear",
/// "example_9_2_nonlinear"). nu1/mu1 are used only by example_9_1.
/// Throws ConfigError for unknown names.
ProblemSpec library_problem(std::string_view name, double nu, double nu1, double mu1);

}  // namespace fracsolve
