#include "fracsolve/scheme/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracsolve/error.hpp"

namespace fracsolve {

namespace {

// u_{-1} for the left end, u_{K+1} for the right, from the centred difference
// c_deriv (u_{+} - u_{-}) / 2h + c_value u_edge = data.
double left_ghost(const BoundaryRow& bc, double u0, double u1, double h) {
    return u1 - 2.0 * h / bc.c_deriv * (bc.data - bc.c_value * u0);
}

double right_ghost(const BoundaryRow& bc, double uK, double uKm1, double h) {
    return uKm1 + 2.0 * h / bc.c_deriv * (bc.data - bc.c_value * uK);
}

void require_nondegenerate(const BoundaryRow& bc, const char* side) {
    if (bc.c_deriv == 0.0 && bc.c_value == 0.0)
        throw DomainError(std::string("degenerate boundary condition at the ") + side + " end");
}

void require_finite(double v, const char* what, int k, int level) {
    if (!std::isfinite(v)) throw SolverError(std::string("non-finite ") + what + " at node " + std::to_string(k), level);
}

}  // namespace

BoundaryRow boundary_row(const BoundaryCondition& bc, double t) { return {bc.c_deriv, bc.c_value, bc.data(0.0, t)}; }

TridiagonalSystem eliminate_ghosts(TridiagonalSystem sys, const BoundaryRow& left, const BoundaryRow& right,
                                   double h) {
    require_nondegenerate(left, "left");
    require_nondegenerate(right, "right");
    const std::size_t n = sys.size();
    if (n < 2) throw DomainError("eliminate_ghosts: system too small");
    const std::size_t last = n - 1;

    if (left.c_deriv == 0.0) {
        sys.diag[0] = left.c_value;
        sys.upper[0] = 0.0;
        sys.rhs[0] = left.data;
    } else {
        const double g = sys.lower[0];
        sys.diag[0] += g * 2.0 * h * left.c_value / left.c_deriv;
        sys.upper[0] += g;
        sys.rhs[0] += g * 2.0 * h / left.c_deriv * left.data;
    }
    sys.lower[0] = 0.0;

    if (right.c_deriv == 0.0) {
        sys.diag[last] = right.c_value;
        sys.lower[last] = 0.0;
        sys.rhs[last] = right.data;
    } else {
        const double g = sys.upper[last];
        sys.diag[last] -= g * 2.0 * h * right.c_value / right.c_deriv;
        sys.lower[last] += g;
        sys.rhs[last] -= g * 2.0 * h / right.c_deriv * right.data;
    }
    sys.upper[last] = 0.0;
    return sys;
}

SchemeState::SchemeState(const ProblemSpec& problem, const Grid& grid)
    : problem_(problem), grid_(grid), field_(grid) {
    check_structure(problem_);
    if (std::abs(grid.L - problem.length) > 1e-12 * problem.length ||
        std::abs(grid.T - problem.horizon) > 1e-12 * problem.horizon)
        throw DomainError("grid does not cover the problem domain");

    const auto nodes = grid.nodes();
    const auto cap = grid.levels();
    const auto J = static_cast<std::size_t>(grid.J);
    terms_.push_back({problem_.rho0, 1.0, gl_weights(problem_.orders.nu, J), HistoryBuffer(nodes, cap)});
    for (std::size_t i = 0; i < problem_.rho.size(); ++i)
        terms_.push_back(
            {problem_.rho[i], 1.0, gl_weights(problem_.orders.nu_list[i], J), HistoryBuffer(nodes, cap)});
    for (std::size_t i = 0; i < problem_.gamma.size(); ++i)
        terms_.push_back(
            {problem_.gamma[i], -1.0, gl_weights(problem_.orders.mu_list[i], J), HistoryBuffer(nodes, cap)});

    if (problem_.kernel.enabled) {
        weights_ = ConvolutionWeights::power(problem_.kernel.beta, grid_, problem_.kernel.scale);
        memory_ = HistoryBuffer(nodes, cap);
    }

    std::vector<double> u0(nodes);
    for (int k = 0; k <= grid_.K; ++k) u0[static_cast<std::size_t>(k)] = problem_.initial(grid_.x(k), 0.0);
    commit(u0);
}

void SchemeState::commit(std::span<const double> u) {
    if (levels_ >= static_cast<int>(grid_.levels())) throw SolverError("commit past the final level");
    const int l = levels_;
    const double t = grid_.t(l);
    const int K = grid_.K;
    std::copy(u.begin(), u.end(), field_.level(l).begin());

    std::vector<double> buf(grid_.nodes());
    for (auto& term : terms_) {
        for (int k = 0; k <= K; ++k) buf[static_cast<std::size_t>(k)] = term.coeff(grid_.x(k), t) * u[k];
        term.history.append(buf);
    }

    if (problem_.kernel.enabled) {
        const double h = grid_.h;
        const BoundaryRow lb = boundary_row(problem_.left, t);
        const BoundaryRow rb = boundary_row(problem_.right, t);
        for (int k = 0; k <= K; ++k) {
            double lap = 0.0;
            if (k > 0 && k < K) {
                lap = u[k - 1] - 2.0 * u[k] + u[k + 1];
            } else if (k == 0 && lb.c_deriv != 0.0) {
                lap = left_ghost(lb, u[0], u[1], h) - 2.0 * u[0] + u[1];
            } else if (k == K && rb.c_deriv != 0.0) {
                lap = u[K - 1] - 2.0 * u[K] + right_ghost(rb, u[K], u[K - 1], h);
            }
            buf[static_cast<std::size_t>(k)] = problem_.memory_coeff(grid_.x(k), t) * lap / (h * h);
        }
        memory_.append(buf);
    }
    ++levels_;
}

TridiagonalSystem SchemeState::assemble_step(int j) const {
    if (j < 0 || j >= grid_.J || levels_ != j + 1)
        throw SolverError("assemble_step: history does not end at level " + std::to_string(j), j + 1);
    const int level = j + 1;
    const int K = grid_.K;
    const double h = grid_.h;
    const double h2 = h * h;
    const double tn = grid_.t(level);
    const double tj = grid_.t(j);
    const bool memory = problem_.kernel.enabled;

    // Trapezoid weights of the explicit memory part: w_l multiplies B^l, l = 0..j.
    std::vector<double> w;
    double w_implicit = 0.0;
    if (memory) {
        const auto& lag = weights_.by_lag();
        w.resize(static_cast<std::size_t>(j) + 1);
        for (int l = 0; l <= j; ++l) {
            double v = lag[static_cast<std::size_t>(j - l)];
            if (l >= 1) v += lag[static_cast<std::size_t>(j - l + 1)];
            w[static_cast<std::size_t>(l)] = 0.5 * v;
        }
        w_implicit = 0.5 * lag[0];
    }

    TridiagonalSystem sys(grid_.nodes());
    const auto u_prev = field_.level(j);
    for (int k = 0; k <= K; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        const double x = grid_.x(k);

        double implicit = 0.0;
        double lag = 0.0;
        for (const auto& term : terms_) {
            const CaputoSplit s = caputo_history_sum(term.history, kk, term.coeff(x, tn), term.gl, grid_.sigma, j);
            implicit += term.sign * s.implicit_coeff;
            lag += term.sign * s.lag;
        }

        double A = problem_.diffusion(x, tn) / h2;
        double conv = 0.0;
        if (memory) {
            A += w_implicit * problem_.memory_coeff(x, tn) / h2;
            const auto b = memory_.series(kk);
            for (std::size_t l = 0; l <= static_cast<std::size_t>(j); ++l) conv += b[l] * w[l];
        }
        const double D = problem_.advection(x, tn) / (2.0 * h);

        sys.lower[kk] = -A - D;
        sys.diag[kk] = implicit + 2.0 * A;
        sys.upper[kk] = -A + D;
        sys.rhs[kk] = -lag + conv + problem_.nonlinearity(x, tj, u_prev[kk]) + problem_.source(x, tn);

        require_finite(sys.lower[kk], "coefficient", k, level);
        require_finite(sys.upper[kk], "coefficient", k, level);
        require_finite(sys.diag[kk], "coefficient", k, level);
        require_finite(sys.rhs[kk], "right-hand side", k, level);
        if (sys.diag[kk] == 0.0) throw SolverError("singular diagonal at node " + std::to_string(k), level);
    }
    return sys;
}

void advance(SchemeState& state) {
    const int j = state.levels() - 1;
    const int level = j + 1;
    const Grid& g = state.grid();
    try {
        const double tn = g.t(level);
        TridiagonalSystem sys = state.assemble_step(j);
        sys = eliminate_ghosts(std::move(sys), boundary_row(state.problem().left, tn),
                               boundary_row(state.problem().right, tn), g.h);
        const std::vector<double> u = thomas_solve(sys);
        for (std::size_t k = 0; k < u.size(); ++k)
            require_finite(u[k], "solution", static_cast<int>(k), level);
        state.commit(u);
    } catch (const SolverError& e) {
        if (e.level() >= 0) throw;
        throw SolverError(e.what(), level);
    } catch (const DomainError& e) {
        throw SolverError(e.what(), level);
    }
}

SolutionField solve(const ProblemSpec& problem, const Grid& grid) {
    SchemeState state(problem, grid);
    for (int j = 0; j < grid.J; ++j) advance(state);
    return state.take_field();
}

SolutionField solve(const ProblemSpec& problem, int K, int J) {
    return solve(problem, build_grid(K, J, problem.length, problem.horizon));
}

SolutionField richardson(const SolutionField& coarse, const SolutionField& fine, int p) {
    const Grid& c = coarse.grid();
    const Grid& f = fine.grid();
    if (c.K != f.K || f.J != 2 * c.J || c.L != f.L || c.T != f.T)
        throw DomainError("richardson: fine grid must halve the time step of the coarse grid");
    if (p < 1) throw DomainError("richardson: order must be positive");
    const double q = std::ldexp(1.0, p);
    SolutionField out(c);
    for (int j = 0; j <= c.J; ++j)
        for (int k = 0; k <= c.K; ++k) out(j, k) = (q * fine(2 * j, k) - coarse(j, k)) / (q - 1.0);
    return out;
}

double max_abs_error(const SolutionField& field, const ExactFn& exact) {
    const Grid& g = field.grid();
    double worst = 0.0;
    for (int j = 0; j <= g.J; ++j)
        for (int k = 0; k <= g.K; ++k) worst = std::max(worst, std::abs(field(j, k) - exact(g.x(k), g.t(j))));
    return worst;
}

}  // namespace fracsolve
