#include "fracsolve/kernels/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fracsolve/error.hpp"

namespace fracsolve {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993227684700473478,   676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,  771.3234287776530788486528258894,
    -176.61502916214059906584551354,      12.507343278686904814458936853,
    -0.13857109526572011689554707,        9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * kPi);

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos series sum for argument x >= 0.5 (shifted by one internally).
double lanczos_sum(double x) {
    x -= 1.0;
    double a = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) a += kLanczosCoeffs[i] / (x + static_cast<double>(i));
    return a;
}

double gamma_positive(double x) {
    const double t = x - 0.5 + kLanczosG;
    // Split the power to delay overflow for large x.
    const double half_power = std::pow(t, 0.5 * (x - 0.5));
    return std::sqrt(2.0 * kPi) * half_power * (half_power * std::exp(-t)) * lanczos_sum(x);
}

}  // namespace

double gamma_fn(double x) {
    if (std::isnan(x)) return x;
    if (is_nonpositive_integer(x)) throw DomainError("gamma_fn: pole at x = " + std::to_string(x));
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
    }
    if (x > 171.7) return std::numeric_limits<double>::infinity();
    return gamma_positive(x);
}

double log_gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma_fn: requires x > 0, got " + std::to_string(x));
    if (x < 0.5) return std::log(kPi / std::abs(std::sin(kPi * x))) - log_gamma_fn(1.0 - x);
    const double t = x - 0.5 + kLanczosG;
    return kLogSqrtTwoPi + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

double digamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("digamma_fn: requires x > 0, got " + std::to_string(x));
    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    // Asymptotic expansion with Bernoulli numbers B_2 .. B_14.
    const double series =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 -
                                        inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    return shift + std::log(x) - 0.5 / x - series;
}

double omega(double theta, double t) {
    if (!(theta > 0.0)) throw DomainError("omega: requires theta > 0");
    if (t < 0.0 || (t == 0.0 && theta < 1.0)) throw DomainError("omega: singular at t = " + std::to_string(t));
    return std::pow(t, theta - 1.0) / gamma_fn(theta);
}

double mittag_leffler(double theta, double z) {
    if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("mittag_leffler: requires theta in (0, 1]");
    if (z == 0.0) return 1.0;

    constexpr int kMaxTerms = 100000;
    const double log_abs_z = std::log(std::abs(z));
    const bool alternating = z < 0.0;

    // Neumaier-compensated summation.
    double sum = 1.0;
    double compensation = 0.0;
    for (int m = 1; m < kMaxTerms; ++m) {
        const double magnitude = std::exp(m * log_abs_z - log_gamma_fn(1.0 + m * theta));
        const double term = (alternating && (m % 2 == 1)) ? -magnitude : magnitude;
        const double next = sum + term;
        compensation += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
        sum = next;
        if (!std::isfinite(sum)) throw ConvergenceError("mittag_leffler: series overflow");
        if (magnitude < 1e-16 * (1.0 + std::abs(sum + compensation))) return sum + compensation;
    }
    throw ConvergenceError("mittag_leffler: term cap reached");
}

}  // namespace fracsolve
