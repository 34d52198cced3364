#include "fracsolve/problem/residual.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fracsolve/error.hpp"
#include "fracsolve/kernels/quadrature.hpp"

namespace fracsolve {

namespace {

// Ridders extrapolation of the central second difference (error series in h^2).
double ridders_second_derivative(const ScalarFn& f, double x, double max_step) {
    constexpr int kTable = 8;
    constexpr double kShrink = 1.4;
    constexpr double kShrink2 = kShrink * kShrink;
    std::array<std::array<double, kTable>, kTable> a{};
    const double fx = f(x);
    double h = max_step;
    auto d2 = [&](double step) { return (f(x + step) - 2.0 * fx + f(x - step)) / (step * step); };
    a[0][0] = d2(h);
    double best = a[0][0];
    double err = std::numeric_limits<double>::max();
    for (int i = 1; i < kTable; ++i) {
        h /= kShrink;
        a[0][i] = d2(h);
        double fac = kShrink2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= kShrink2;
            const double errt = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                best = a[j][i];
            }
        }
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) break;
    }
    return best;
}

double caputo_term(const ScalarFn& product, double order, double t, double tol) {
    if (order == 1.0) return ridders_derivative(product, t, 0.5 * t);
    return caputo_oracle(product, order, t, tol);
}

}  // namespace

std::vector<SamplePoint> interior_samples(const ProblemSpec& problem, int n) {
    std::vector<SamplePoint> pts;
    pts.reserve(static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pts.push_back({problem.length * i / (n + 1), problem.horizon * j / (n + 1)});
    return pts;
}

double pointwise_residual(const ProblemSpec& problem, const SpaceTimeFn& candidate, SamplePoint p, double tol) {
    const double sub_tol = tol / 10.0;
    const double x = p.x;
    const double t = p.t;
    const double dx = 0.05 * problem.length;

    double time_part = 0.0;
    auto add_caputo = [&](const Expr& coeff, double order, double sign) {
        ScalarFn product = [&](double s) { return coeff(x, s) * candidate(x, s); };
        time_part += sign * caputo_term(product, order, t, sub_tol);
    };
    add_caputo(problem.rho0, problem.orders.nu, 1.0);
    for (std::size_t i = 0; i < problem.rho.size(); ++i) add_caputo(problem.rho[i], problem.orders.nu_list[i], 1.0);
    for (std::size_t j = 0; j < problem.gamma.size(); ++j)
        add_caputo(problem.gamma[j], problem.orders.mu_list[j], -1.0);

    auto u_xx_at = [&](double s) {
        return ridders_second_derivative([&](double y) { return candidate(y, s); }, x, dx);
    };
    const double u = candidate(x, t);
    const double u_x = ridders_derivative([&](double y) { return candidate(y, t); }, x, dx);
    const double u_xx = u_xx_at(t);

    double memory = 0.0;
    if (problem.kernel.enabled) {
        ScalarFn integrand = [&](double s) { return problem.memory_coeff(x, s) * u_xx_at(s); };
        memory = problem.kernel.scale * weakly_singular_integral(integrand, problem.kernel.beta, t, sub_tol);
    }

    return time_part - problem.diffusion(x, t) * u_xx + problem.advection(x, t) * u_x - memory -
           problem.nonlinearity(x, t, u) - problem.source(x, t);
}

double residual_oracle(const ProblemSpec& problem, const SpaceTimeFn& candidate, const std::vector<SamplePoint>& points,
                       double tol) {
    double worst = 0.0;
    for (const auto& p : points) worst = std::max(worst, std::abs(pointwise_residual(problem, candidate, p, tol)));
    return worst;
}

}  // namespace fracsolve
