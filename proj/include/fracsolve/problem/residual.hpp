#pragma once

#include <functional>
#include <vector>

#include "fracsolve/problem/problem.hpp"

namespace fracsolve {

using SpaceTimeFn = std::function<double(double x, double t)>;

struct SamplePoint {
    double x;
    double t;
};

/// n x n interior points x = L i/(n+1), t = T j/(n+1), i, j = 1..n.
std::vector<SamplePoint> interior_samples(const ProblemSpec& problem, int n);

/// Pointwise residual of the continuous equation for a candidate solution,
/// independent of the discrete scheme: Caputo terms by caputo_oracle, the
/// memory convolution by graded quadrature, spatial derivatives by Ridders
/// extrapolation. Each sub-term is resolved to tol/10.
double pointwise_residual(const ProblemSpec& problem, const SpaceTimeFn& candidate, SamplePoint p, double tol);

/// max over `points` of |pointwise_residual|.
double residual_oracle(const ProblemSpec& problem, const SpaceTimeFn& candidate, const std::vector<SamplePoint>& points,
                       double tol);

}  // namespace fracsolve
