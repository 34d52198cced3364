#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <utility>

namespace fracsolve::oracle {

std::vector<double> dense_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t q = c; q < n; ++q) a[r][q] -= f * a[c][q];
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t q = i + 1; q < n; ++q) s -= a[i][q] * x[q];
        x[i] = s / a[i][i];
    }
    return x;
}

std::vector<double> scheme_step_oracle(const ProblemSpec& p, const SolutionField& u, int j) {
    const Grid& g = u.grid();
    const int K = g.K;
    const double h = g.h;
    const double tn = g.t(j + 1);

    struct Term {
        const Expr* c;
        double theta;
        double sign;
    };
    std::vector<Term> terms = {{&p.rho0, p.orders.nu, 1.0}};
    for (std::size_t i = 0; i < p.rho.size(); ++i) terms.push_back({&p.rho[i], p.orders.nu_list[i], 1.0});
    for (std::size_t i = 0; i < p.gamma.size(); ++i) terms.push_back({&p.gamma[i], p.orders.mu_list[i], -1.0});

    // (-1)^m binom(theta, m); Gamma(m - theta) has poles only for integer theta.
    auto rho = [](double theta, int m) {
        if (theta == 1.0) return m == 0 ? 1.0 : (m == 1 ? -1.0 : 0.0);
        return std::tgamma(m - theta) / (std::tgamma(-theta) * std::tgamma(m + 1.0));
    };
    const double beta = p.kernel.beta;
    auto kw = [&](int m) {
        if (!p.kernel.enabled) return 0.0;
        return p.kernel.scale *
               (std::pow(tn - g.t(m), 1.0 - beta) - std::pow(tn - g.t(m + 1), 1.0 - beta)) / (1.0 - beta);
    };
    // Past values with ghosts from the boundary condition at that level.
    auto u_at = [&](int l, int k) {
        const double t = g.t(l);
        if (k == -1) return u(l, 1) - 2.0 * h / p.left.c_deriv * (p.left.data(0.0, t) - p.left.c_value * u(l, 0));
        if (k == K + 1)
            return u(l, K - 1) + 2.0 * h / p.right.c_deriv * (p.right.data(0.0, t) - p.right.c_value * u(l, K));
        return u(l, k);
    };

    const int n = K + 3;  // unknown i holds u_{i-1}
    Matrix a(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    std::vector<double> b(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k <= K; ++k) {
        const auto r = static_cast<std::size_t>(k + 1);
        const bool dirichlet_row = (k == 0 && p.left.c_deriv == 0.0) || (k == K && p.right.c_deriv == 0.0);
        if (dirichlet_row) {
            const BoundaryCondition& bc = k == 0 ? p.left : p.right;
            a[r][r] = bc.c_value;
            b[r] = bc.data(0.0, tn);
            continue;
        }
        const double x = g.x(k);
        for (const auto& term : terms) {
            const double scale = term.sign * std::pow(g.sigma, -term.theta);
            const double p0 = (*term.c)(x, 0.0) * u(0, k);
            a[r][r] += scale * rho(term.theta, 0) * (*term.c)(x, tn);
            b[r] += scale * rho(term.theta, 0) * p0;
            for (int m = 1; m <= j + 1; ++m) {
                const int l = j + 1 - m;
                b[r] -= scale * rho(term.theta, m) * ((*term.c)(x, g.t(l)) * u(l, k) - p0);
            }
        }
        const double ac = p.diffusion(x, tn) / (h * h);
        const double dc = p.advection(x, tn) / (2.0 * h);
        a[r][r - 1] += -ac - dc;
        a[r][r] += 2.0 * ac;
        a[r][r + 1] += -ac + dc;
        auto B = [&](int l) {
            return p.memory_coeff(x, g.t(l)) * (u_at(l, k - 1) - 2.0 * u_at(l, k) + u_at(l, k + 1)) / (h * h);
        };
        for (int m = 0; m <= j; ++m) {
            b[r] += 0.5 * kw(m) * B(m);
            if (m + 1 <= j) b[r] += 0.5 * kw(m) * B(m + 1);
        }
        const double bn = p.kernel.enabled ? 0.5 * kw(j) * p.memory_coeff(x, tn) / (h * h) : 0.0;
        a[r][r - 1] -= bn;
        a[r][r] += 2.0 * bn;
        a[r][r + 1] -= bn;
        b[r] += p.nonlinearity(x, g.t(j), u(j, k)) + p.source(x, tn);
    }
    // Ghost rows: the boundary condition itself, or u_ghost = 0 when unused.
    const auto last = static_cast<std::size_t>(n - 1);
    if (p.left.c_deriv != 0.0) {
        a[0][2] = p.left.c_deriv / (2.0 * h);
        a[0][0] = -p.left.c_deriv / (2.0 * h);
        a[0][1] = p.left.c_value;
        b[0] = p.left.data(0.0, tn);
    } else {
        a[0][0] = 1.0;
        a[1][0] = 0.0;
    }
    if (p.right.c_deriv != 0.0) {
        a[last][last] = p.right.c_deriv / (2.0 * h);
        a[last][last - 2] = -p.right.c_deriv / (2.0 * h);
        a[last][last - 1] = p.right.c_value;
        b[last] = p.right.data(0.0, tn);
    } else {
        a[last][last] = 1.0;
        a[last - 1][last] = 0.0;
    }
    const auto sol = dense_solve(std::move(a), std::move(b));
    return {sol.begin() + 1, sol.end() - 1};
}

double semigroup_convolution(double th1, double th2, double t) {
    static constexpr double x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                    0.9061798459386640};
    static constexpr double w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                                    0.2369268850561891};
    auto composite = [&](const std::function<double(double)>& g, double a, double b) {
        constexpr int kPanels = 400;
        const double hw = 0.5 * (b - a) / kPanels;
        double acc = 0.0;
        for (int p = 0; p < kPanels; ++p) {
            const double mid = a + (2 * p + 1) * hw;
            for (int i = 0; i < 5; ++i) acc += w[i] * hw * g(mid + hw * x[i]);
        }
        return acc;
    };
    const double g1 = std::tgamma(th1), g2 = std::tgamma(th2);
    const double half = 0.5 * t;
    // s = v^{1/th2} on [0, t/2]
    auto left = [&](double v) {
        const double s = std::pow(v, 1.0 / th2);
        return std::pow(t - s, th1 - 1.0) / g1 / (th2 * g2);
    };
    // t - s = v^{1/th1} on [t/2, t]
    auto right = [&](double v) {
        const double s = t - std::pow(v, 1.0 / th1);
        return std::pow(s, th2 - 1.0) / g2 / (th1 * g1);
    };
    return composite(left, 0.0, std::pow(half, th2)) + composite(right, 0.0, std::pow(half, th1));
}

}  // namespace fracsolve::oracle
