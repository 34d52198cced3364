#include "fracsolve/problem/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracsolve/kernels/quadrature.hpp"
#include "fracsolve/kernels/special_functions.hpp"

namespace fracsolve {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i])) return false;
    return true;
}

struct Sampler {
    const ProblemSpec& problem;
    int n;

    double x(int i) const { return problem.length * i / (n - 1); }
    double t(int j) const { return problem.horizon * j / (n - 1); }

    double min_over_grid(const Expr& e) const {
        double lo = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) lo = std::min(lo, e(x(i), t(j)));
        return lo;
    }

    // Smallest forward-difference slope in t.
    template <typename F>
    double min_time_slope(F&& fn) const {
        double lo = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j + 1 < n; ++j) lo = std::min(lo, (fn(x(i), t(j + 1)) - fn(x(i), t(j))) / (t(j + 1) - t(j)));
        return lo;
    }
};

}  // namespace

CheckStatus ValidationReport::overall() const {
    for (const auto& e : entries)
        if (e.status == CheckStatus::Warn) return CheckStatus::Warn;
    return CheckStatus::Pass;
}

bool ValidationReport::has_warning(std::string_view hypothesis) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const ValidationEntry& e) { return e.status == CheckStatus::Warn && e.hypothesis == hypothesis; });
}

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Warn: return "warn";
        case CheckStatus::Info: return "info";
    }
    return "?";
}

ValidationReport validate_hypotheses(const ProblemSpec& problem, int samples_per_axis) {
    ValidationReport report;
    auto add = [&](std::string h, CheckStatus s, std::string msg) {
        report.entries.push_back({std::move(h), s, std::move(msg)});
    };
    const Sampler grid{problem, std::max(samples_per_axis, 2)};
    const auto& ord = problem.orders;

    // h1
    {
        bool ok = ord.nu > 0.0 && ord.nu <= 1.0;
        ok = ok && strictly_increasing(ord.nu_list) && strictly_increasing(ord.mu_list);
        for (double v : ord.nu_list) ok = ok && v > 0.0 && v < ord.nu;
        for (double v : ord.mu_list) ok = ok && v > 0.0 && v < ord.nu;
        for (double a : ord.nu_list)
            for (double b : ord.mu_list) ok = ok && a != b;
        add("h1", ok ? CheckStatus::Pass : CheckStatus::Warn,
            ok ? "order chain satisfied" : "orders violate 0 < nu_i, mu_j < nu (increasing, pairwise distinct)");

        const double bound = ord.nu / 2.0;
        double largest = 0.0;
        for (double v : ord.nu_list) largest = std::max(largest, v);
        for (double v : ord.mu_list) largest = std::max(largest, v);
        add("h1", CheckStatus::Info,
            "reference bound nu(2-alpha)/2 at alpha = 1 is " + fmt(bound) + "; largest lower order is " + fmt(largest));

        if (ord.nu < 1.0) {
            for (double mu : ord.mu_list) {
                if (!(mu > 0.0 && mu < ord.nu)) continue;
                // N(t; nu, mu) >= 0 iff t <= (Gamma(1-mu)/Gamma(1-nu))^{1/(nu-mu)}
                const double t_star = std::pow(gamma_fn(1.0 - mu) / gamma_fn(1.0 - ord.nu), 1.0 / (ord.nu - mu));
                add("h1", CheckStatus::Info,
                    "N(t; nu, " + fmt(mu) + ") is nonnegative for t <= " + fmt(t_star));
            }
        }
        add("h1", CheckStatus::Info, "alpha and the thresholds nu*, T* are not fixed by the problem data");
    }

    // h2
    {
        const double a_min = grid.min_over_grid(problem.diffusion);
        add("h2", a_min > 0.0 ? CheckStatus::Pass : CheckStatus::Warn, "min a = " + fmt(a_min) + " (delta_0)");
        const double r0 = grid.min_over_grid(problem.rho0);
        add("h2", r0 > 0.0 ? CheckStatus::Pass : CheckStatus::Warn, "min rho0 = " + fmt(r0) + " (delta_1)");
        for (std::size_t i = 0; i < problem.rho.size(); ++i) {
            const double m = grid.min_over_grid(problem.rho[i]);
            add("h2", m > 0.0 ? CheckStatus::Pass : CheckStatus::Warn,
                "min rho_" + std::to_string(i + 1) + " = " + fmt(m) + " (delta_2)");
        }
        for (std::size_t j = 0; j < problem.gamma.size(); ++j) {
            const double m = grid.min_over_grid(problem.gamma[j]);
            add("h2", m > 0.0 ? CheckStatus::Pass : CheckStatus::Warn,
                "min gamma_" + std::to_string(j + 1) + " = " + fmt(m) + " (delta_3)");
        }
    }

    // h3
    {
        constexpr double kSlopeTol = -1e-12;
        auto monotone = [&](const std::string& label, const Expr& e) {
            const double s = grid.min_time_slope([&](double x, double t) { return e(x, t); });
            add("h3", s >= kSlopeTol ? CheckStatus::Pass : CheckStatus::Warn,
                label + " nondecreasing in t (min slope " + fmt(s) + ")");
        };
        monotone("rho0", problem.rho0);
        for (std::size_t i = 0; i < problem.rho.size(); ++i) monotone("rho_" + std::to_string(i + 1), problem.rho[i]);
        for (std::size_t j = 0; j < problem.gamma.size(); ++j)
            monotone("gamma_" + std::to_string(j + 1), problem.gamma[j]);

        if (!problem.gamma.empty()) {
            auto remainder = [&](double x, double t) {
                double r = problem.rho0(x, t);
                for (const auto& g : problem.gamma) r -= g(x, t);
                return r;
            };
            double lo = std::numeric_limits<double>::infinity();
            for (int i = 0; i < grid.n; ++i)
                for (int j = 0; j < grid.n; ++j) lo = std::min(lo, remainder(grid.x(i), grid.t(j)));
            const double slope = grid.min_time_slope(remainder);
            const bool ok = lo > 0.0 && slope >= kSlopeTol;
            add("h3", ok ? CheckStatus::Pass : CheckStatus::Warn,
                "rho0 - sum gamma_j: min " + fmt(lo) + ", min slope " + fmt(slope));
        }
    }

    // h4
    if (problem.kernel.enabled) {
        const double beta = problem.kernel.beta;
        const bool ok = beta >= 0.0 && beta <= 1.0 - ord.nu;
        add("h4", ok ? CheckStatus::Pass : CheckStatus::Warn,
            "kernel exponent beta = " + fmt(beta) + (ok ? " <= " : " > ") + "1 - nu = " + fmt(1.0 - ord.nu));
    } else {
        add("h4", CheckStatus::Pass, "no memory term");
    }

    // h6
    add("h6", CheckStatus::Info,
        "growth conditions on f (constants L, L_1..L_4, r) are not checked for user expressions");

    // h7
    {
        auto check_side = [&](const BoundaryCondition& bc, double x, const char* side) {
            const double slope = ridders_derivative([&](double s) { return problem.initial(s, 0.0); }, x,
                                                    0.05 * problem.length);
            const double lhs = bc.c_deriv * slope + bc.c_value * problem.initial(x, 0.0);
            const double mismatch = std::abs(lhs - bc.data(x, 0.0));
            add("h7", mismatch <= 1e-6 ? CheckStatus::Pass : CheckStatus::Warn,
                std::string("boundary data at ") + side + " vs u0 mismatch " + fmt(mismatch));
        };
        check_side(problem.left, 0.0, "x = 0");
        check_side(problem.right, problem.length, "x = L");
    }

    if (problem.exact) {
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double x = problem.length * i / 100.0;
            worst = std::max(worst, std::abs((*problem.exact)(x, 0.0) - problem.initial(x, 0.0)));
        }
        add("exact", worst <= 1e-12 ? CheckStatus::Pass : CheckStatus::Warn,
            "max |exact(x,0) - u0(x)| = " + fmt(worst));
    }
    return report;
}

}  // namespace fracsolve
