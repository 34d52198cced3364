#include "fracsolve/kernels/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fracsolve/error.hpp"
#include "fracsolve/kernels/special_functions.hpp"

namespace fracsolve {

namespace {

constexpr std::array<double, 8> kGaussNodes = {
    -0.96028985649753623168, -0.79666647741362673959, -0.52553240991632898582, -0.18343464249564980494,
    0.18343464249564980494,  0.52553240991632898582,  0.79666647741362673959,  0.96028985649753623168,
};
constexpr std::array<double, 8> kGaussWeights = {
    0.10122853629037625915, 0.22238103445337447054, 0.31370664587788728734, 0.36268378337836198297,
    0.36268378337836198297, 0.31370664587788728734, 0.22238103445337447054, 0.10122853629037625915,
};

constexpr double kGrading = 0.7;
constexpr int kMaxRefinements = 12;

template <typename F>
double gauss_cell(F&& integrand, double a, double b, int subdivisions) {
    const double width = (b - a) / subdivisions;
    double total = 0.0;
    for (int s = 0; s < subdivisions; ++s) {
        const double lo = a + s * width;
        const double half = 0.5 * width;
        const double mid = lo + half;
        double cell = 0.0;
        for (std::size_t i = 0; i < kGaussNodes.size(); ++i) cell += kGaussWeights[i] * integrand(mid + half * kGaussNodes[i]);
        total += half * cell;
    }
    return total;
}

// One pass over [0, t]: `levels` geometric cells towards each endpoint, each
// split into `subdivisions` Gauss panels, plus caller-supplied tail terms for
// [0, a] and [t - w, t].
template <typename F, typename LeftTail, typename RightTail>
double graded_pass(F&& integrand, LeftTail&& left_tail, RightTail&& right_tail, double t, int levels,
                   int subdivisions) {
    const double half = 0.5 * t;
    double total = 0.0;
    double outer = half;
    for (int i = 0; i < levels; ++i) {
        const double inner = outer * kGrading;
        total += gauss_cell(integrand, inner, outer, subdivisions);          // towards 0
        total += gauss_cell(integrand, t - outer, t - inner, subdivisions);  // towards t
        outer = inner;
    }
    return total + left_tail(outer) + right_tail(outer);
}

template <typename F, typename LeftTail, typename RightTail>
double refine_until(F&& integrand, LeftTail&& left_tail, RightTail&& right_tail, double t, double tol,
                    const char* who) {
    double previous = std::numeric_limits<double>::quiet_NaN();
    for (int r = 0; r <= kMaxRefinements; ++r) {
        const double current = graded_pass(integrand, left_tail, right_tail, t, 16 + 16 * r, 1 + r);
        if (!std::isfinite(current)) throw ConvergenceError(std::string(who) + ": non-finite integrand");
        if (r > 0 && std::abs(current - previous) < tol) return current;
        previous = current;
    }
    throw ConvergenceError(std::string(who) + ": tolerance not reached");
}

}  // namespace

double ridders_derivative(const ScalarFn& f, double x, double max_step) {
    constexpr int kTable = 10;
    constexpr double kShrink = 1.4;
    constexpr double kShrink2 = kShrink * kShrink;
    constexpr double kSafe = 2.0;

    std::array<std::array<double, kTable>, kTable> a{};
    double step = max_step;
    double best = 0.0;
    double err = std::numeric_limits<double>::max();
    a[0][0] = (f(x + step) - f(x - step)) / (2.0 * step);
    best = a[0][0];
    for (int i = 1; i < kTable; ++i) {
        step /= kShrink;
        a[0][i] = (f(x + step) - f(x - step)) / (2.0 * step);
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
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= kSafe * err) break;
    }
    return best;
}

double weakly_singular_integral(const ScalarFn& g, double alpha, double t, double tol) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("weakly_singular_integral: alpha must lie in [0, 1)");
    if (!(t >= 0.0)) throw DomainError("weakly_singular_integral: t must be nonnegative");
    if (t == 0.0) return 0.0;

    auto integrand = [&](double s) { return std::pow(t - s, -alpha) * g(s); };
    auto left_tail = [&](double a) { return gauss_cell(integrand, 0.0, a, 1); };
    auto right_tail = [&](double w) { return g(t - 0.5 * w) * std::pow(w, 1.0 - alpha) / (1.0 - alpha); };
    return refine_until(integrand, left_tail, right_tail, t, tol, "weakly_singular_integral");
}

double caputo_oracle(const ScalarFn& f, double theta, double t, double tol) {
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError("caputo_oracle: theta must lie in (0, 1)");
    if (!(t > 0.0)) throw DomainError("caputo_oracle: t must be positive");

    auto derivative = [&](double s) { return ridders_derivative(f, s, std::min(0.5 * s, 0.05 * (1.0 + s))); };
    auto integrand = [&](double s) { return std::pow(t - s, -theta) * derivative(s); };
    auto left_tail = [&](double a) { return std::pow(t - 0.5 * a, -theta) * (f(a) - f(0.0)); };
    auto right_tail = [&](double w) {
        const double slope = (f(t) - f(t - w)) / w;
        return slope * std::pow(w, 1.0 - theta) / (1.0 - theta);
    };
    const double integral = refine_until(integrand, left_tail, right_tail, t, tol * gamma_fn(1.0 - theta),
                                         "caputo_oracle");
    return integral / gamma_fn(1.0 - theta);
}

}  // namespace fracsolve
