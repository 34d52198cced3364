#pragma once

#include <functional>
#include <ostream>
#include <vector>

#include "fracsolve/cli/run_spec.hpp"
#include "fracsolve/scheme/solver.hpp"

namespace fracsolve {

struct ConvergeRow {
    double nu = 0.0;
    int K = 0;
    int J = 0;
    double gimel = 0.0;
};

/// Replaces the reference solution used for the error of a computed field.
/// Intended for tests; the default uses the problem's exact solution.
using ExactProvider = std::function<ExactFn(const ProblemSpec& problem, const SolutionField& computed)>;

/// Worker count: FRACSOLVE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int worker_count();

/// Max-norm error on every (nu, grid) pair, in sweep order. Throws
/// ConfigError when the problem has no exact solution.
std::vector<ConvergeRow> converge_table(const RunSpec& spec, const ExactProvider& exact = {});

/// CSV `nu,K,J,gimel`.
void cmd_converge(const RunSpec& spec, std::ostream& out, const ExactProvider& exact = {});

/// CSV `t_star,nu_hat,nu_star_1,nu_star_2,nu_star_3` for ratios 1/2, 1/3, 1/4.
/// With `samples`, also CSV `t_star,t,omega,N_1,N_2,N_3` at the sample order.
void cmd_nu_star(const RunSpec& spec, std::ostream& out, std::ostream* samples = nullptr);

/// Time levels written by cmd_solve.
std::vector<int> snapshot_levels(const RunSpec& spec, const Grid& grid);

/// CSV `t,x,u` on the snapshot levels. Hypothesis warnings go to `diagnostics`.
void cmd_solve(const RunSpec& spec, std::ostream& out, std::ostream& diagnostics);

/// CSV `nu,x,t,residual`: continuous residual of the exact solution.
void cmd_residual_check(const RunSpec& spec, std::ostream& out);

}  // namespace fracsolve
