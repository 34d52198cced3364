#include "fracsolve/kernels/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracsolve/error.hpp"
#include "fracsolve/kernels/special_functions.hpp"

namespace fracsolve {

namespace {

// Bisection on [lo, hi] for a function with f(lo) > 0 > f(hi).
template <typename F>
double bisect_decreasing(F&& f, double lo, double hi, double tolerance) {
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void check_orders(double theta1, double theta2, const char* who) {
    if (!(theta2 > 0.0 && theta2 < theta1 && theta1 <= 1.0))
        throw DomainError(std::string(who) + ": requires 0 < theta2 < theta1 <= 1");
}

}  // namespace

double kernel_N(double t, double theta1, double theta2) {
    if (!(theta2 > 0.0 && theta2 <= theta1 && theta1 < 1.0))
        throw DomainError("kernel_N: requires 0 < theta2 <= theta1 < 1");
    return omega(1.0 - theta1, t) - omega(1.0 - theta2, t);
}

double nu_star(double t_star, double ratio, double tolerance) {
    if (!(t_star > 0.0)) throw DomainError("nu_star: t_star must be positive");
    if (!(ratio > 0.0 && ratio < 1.0)) throw DomainError("nu_star: ratio must lie in (0, 1)");

    constexpr double kEps = 1e-6;
    auto n_at_horizon = [&](double nu) { return kernel_N(t_star, nu, ratio * nu); };
    const double lo = kEps;
    const double hi = 1.0 - kEps;
    if (!(n_at_horizon(lo) > 0.0 && n_at_horizon(hi) < 0.0))
        throw ConvergenceError("nu_star: kernel does not change sign on (eps, 1-eps) for t_star = " +
                               std::to_string(t_star));
    return bisect_decreasing(n_at_horizon, lo, hi, tolerance);
}

double nu_hat_gamma(double t_star, double tolerance) {
    const double t_gamma = std::exp(-kEulerGamma);
    if (!(t_star > 0.0)) throw DomainError("nu_hat_gamma: t_star must be positive");
    if (std::abs(t_star - t_gamma) <= 1e-12 * t_gamma) return 0.0;
    if (t_star > t_gamma)
        throw DomainError("nu_hat_gamma: t_star must be below e^{-gamma}, got " + std::to_string(t_star));

    // d/dnu ln omega_{1-nu}(t) = psi(1-nu) - ln t, positive at nu = 0 and decreasing in nu.
    const double log_t = std::log(t_star);
    auto slope = [&](double nu) { return digamma_fn(1.0 - nu) - log_t; };
    constexpr double kHi = 1.0 - 1e-12;
    if (!(slope(kHi) < 0.0)) throw ConvergenceError("nu_hat_gamma: root not bracketed");
    return bisect_decreasing(slope, 0.0, kHi, tolerance);
}

double threshold_T1(double theta1, double theta2, double T) {
    check_orders(theta1, theta2, "threshold_T1");
    if (!(T > 0.0)) throw DomainError("threshold_T1: T must be positive");
    const double base = theta1 * gamma_fn(1.0 + theta1 - theta2) / theta2;
    return std::min(T, std::pow(base, 1.0 / (theta1 - theta2)));
}

double threshold_T2(double theta1, double theta2, double theta, double T) {
    check_orders(theta1, theta2, "threshold_T2");
    if (!(theta >= theta1 && theta <= 1.0)) throw DomainError("threshold_T2: requires theta1 <= theta <= 1");
    if (!(T > 0.0)) throw DomainError("threshold_T2: T must be positive");
    const double base =
        theta1 * gamma_fn(1.0 + theta - theta2) / (theta2 * gamma_fn(1.0 + theta - theta1));
    return std::min(T, std::pow(base, 1.0 / (theta1 - theta2)));
}

PositivityReport positivity_report(double t_star, std::span<const double> ratios,
                                   std::optional<SampleRequest> samples) {
    PositivityReport report;
    report.t_star = t_star;
    report.nu_hat_gamma = nu_hat_gamma(t_star);
    for (double r : ratios) report.nu_star_by_ratio[r] = nu_star(t_star, r);

    if (samples) {
        if (samples->count < 1) throw DomainError("positivity_report: sample count must be positive");
        const double nu = samples->nu;
        report.sample_nu = nu;
        report.samples.reserve(static_cast<std::size_t>(samples->count));
        for (int i = 1; i <= samples->count; ++i) {
            KernelSample s;
            s.t = t_star * i / samples->count;
            s.omega = omega(1.0 - nu, s.t);
            for (double r : ratios) s.kernel_values.push_back(kernel_N(s.t, nu, r * nu));
            report.samples.push_back(std::move(s));
        }
    }
    return report;
}

}  // namespace fracsolve
