#pragma once

namespace fracsolve {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Euler Gamma function. Lanczos approximation with reflection below 1/2;
/// relative error below 1e-13 on [0.05, 50]. Throws DomainError at 0 and the
/// negative integers.
double gamma_fn(double x);

/// ln|Gamma(x)| for x > 0.
double log_gamma_fn(double x);

/// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma_fn(double x);

/// Riemann-Liouville kernel omega_theta(t) = t^(theta-1) / Gamma(theta).
double omega(double theta, double t);

/// One-parameter Mittag-Leffler function E_theta(z) by direct power series.
///
/// Intended for moderate arguments (|z| <= 50). Large negative z loses digits
/// to cancellation in the alternating series; no asymptotic fallback is used.
double mittag_leffler(double theta, double z);

}  // namespace fracsolve
