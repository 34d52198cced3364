#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace fracsolve {

/// Difference kernel N(t; theta1, theta2) = omega_{1-theta1}(t) - omega_{1-theta2}(t)
/// for 0 < theta2 <= theta1 < 1 and t > 0.
double kernel_N(double t, double theta1, double theta2);

inline constexpr double kRootTolerance = 1e-6;

/// Largest nu in (0,1) with N(t; nu, ratio*nu) >= 0 on (0, t_star].
///
/// t^{(ratio-1) nu} is decreasing in t, so the condition binds at t = t_star and
/// the threshold is the root in nu of N(t_star; nu, ratio*nu). Found by bisection.
/// Throws ConvergenceError when no sign change is bracketed on (eps, 1 - eps).
double nu_star(double t_star, double ratio, double tolerance = kRootTolerance);

/// Threshold below which omega_{1-nu}(t) increases in nu for every t in (0, t_star]:
/// the root of psi(1 - nu) = ln(t_star). Returns 0 at t_star = e^{-gamma} and throws
/// DomainError beyond it.
double nu_hat_gamma(double t_star, double tolerance = kRootTolerance);

/// min{T, (theta1 Gamma(1+theta1-theta2) / theta2)^{1/(theta1-theta2)}}.
double threshold_T1(double theta1, double theta2, double T);

/// min{T, (theta1 Gamma(1+theta-theta2) / (theta2 Gamma(1+theta-theta1)))^{1/(theta1-theta2)}}.
double threshold_T2(double theta1, double theta2, double theta, double T);

struct KernelSample {
    double t = 0.0;
    double omega = 0.0;                 ///< omega_{1-nu}(t)
    std::vector<double> kernel_values;  ///< N(t; nu, ratio*nu), one per ratio
};

struct PositivityReport {
    double t_star = 0.0;
    double nu_hat_gamma = 0.0;
    std::map<double, double> nu_star_by_ratio;
    std::optional<double> sample_nu;
    std::vector<KernelSample> samples;
};

struct SampleRequest {
    double nu = 0.5;
    int count = 200;
};

/// Thresholds for one horizon and a set of ratios, optionally with curves of
/// omega_{1-nu} and N(t; nu, ratio*nu) on an even grid over (0, t_star].
PositivityReport positivity_report(double t_star, std::span<const double> ratios,
                                   std::optional<SampleRequest> samples = std::nullopt);

}  // namespace fracsolve
