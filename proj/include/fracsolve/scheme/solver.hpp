#pragma once

#include <functional>
#include <vector>

#include "fracsolve/problem/problem.hpp"
#include "fracsolve/scheme/convolution.hpp"
#include "fracsolve/scheme/grid.hpp"
#include "fracsolve/scheme/history.hpp"
#include "fracsolve/scheme/tridiagonal.hpp"

namespace fracsolve {

/// Boundary condition c_deriv u_x + c_value u = data, with data already
/// evaluated at the new time level.
struct BoundaryRow {
    double c_deriv = 1.0;
    double c_value = 0.0;
    double data = 0.0;
};

BoundaryRow boundary_row(const BoundaryCondition& bc, double t);

/// Folds the fictitious nodes u_{-1}, u_{K+1} into rows 0 and K using the
/// centred boundary difference. A zero derivative coefficient turns the row
/// into a Dirichlet row. Throws DomainError when both coefficients vanish.
TridiagonalSystem eliminate_ghosts(TridiagonalSystem sys, const BoundaryRow& left, const BoundaryRow& right,
                                   double h);

/// Time-marching state: the solution computed so far plus the per-term
/// histories needed by the Grünwald-Letnikov sums and the memory quadrature.
class SchemeState {
public:
    /// Fills level 0 from the initial condition.
    SchemeState(const ProblemSpec& problem, const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }
    const ProblemSpec& problem() const noexcept { return problem_; }
    const SolutionField& field() const noexcept { return field_; }
    SolutionField take_field() { return std::move(field_); }

    /// Number of levels stored so far.
    int levels() const noexcept { return levels_; }

    /// System for level j+1 before ghost elimination. Needs levels 0..j.
    TridiagonalSystem assemble_step(int j) const;

    /// Stores level `levels()` and extends the histories.
    void commit(std::span<const double> u);

    const ConvolutionWeights& convolution() const noexcept { return weights_; }

private:
    struct Term {
        Expr coeff;
        double sign;
        GLWeights gl;
        HistoryBuffer history;
    };

    ProblemSpec problem_;
    Grid grid_;
    SolutionField field_;
    std::vector<Term> terms_;
    ConvolutionWeights weights_;
    HistoryBuffer memory_;
    int levels_ = 0;
};

/// Assembles, eliminates ghosts and solves for level j+1, then commits it.
void advance(SchemeState& state);

/// Full run over the grid. Failures surface as SolverError carrying the level.
SolutionField solve(const ProblemSpec& problem, const Grid& grid);
SolutionField solve(const ProblemSpec& problem, int K, int J);

/// Temporal extrapolation (2^p u_fine - u_coarse) / (2^p - 1) on the coarse
/// levels. `fine` must share K, L and T with `coarse` and have twice the levels.
SolutionField richardson(const SolutionField& coarse, const SolutionField& fine, int p = 1);

using ExactFn = std::function<double(double x, double t)>;

/// max over all grid nodes of |u_k^j - exact(x_k, t_j)|.
double max_abs_error(const SolutionField& field, const ExactFn& exact);

}  // namespace fracsolve
