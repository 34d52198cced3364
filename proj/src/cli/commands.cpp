#include "fracsolve/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "fracsolve/error.hpp"
#include "fracsolve/kernels/positivity.hpp"
#include "fracsolve/problem/residual.hpp"
#include "fracsolve/problem/validation.hpp"

namespace fracsolve {

namespace {

constexpr double kRatios[] = {1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0};

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first exception
// in index order is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn fn) {
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto extra = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(workers, 1))) - 1;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < extra; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

SolutionField run_field(const ProblemSpec& problem, GridSize g, bool richardson, int order) {
    SolutionField coarse = solve(problem, g.K, g.J);
    if (!richardson) return coarse;
    return fracsolve::richardson(coarse, solve(problem, g.K, 2 * g.J), order);
}

ExactFn exact_of(const ProblemSpec& problem) {
    if (!problem.exact) throw ConfigError("problem '" + problem.name + "' has no exact solution", 0, "problem.exact");
    const Expr e = *problem.exact;
    return [e](double x, double t) { return e(x, t); };
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("FRACSOLVE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ConvergeRow> converge_table(const RunSpec& spec, const ExactProvider& exact) {
    std::vector<ConvergeRow> rows;
    std::vector<ProblemSpec> problems;
    for (double nu : spec.nu) {
        problems.push_back(resolve_problem(spec, nu));
        if (!exact) exact_of(problems.back());  // fail before any work starts
        for (const auto& g : spec.grids) rows.push_back({nu, g.K, g.J, 0.0});
    }
    const std::size_t per_nu = spec.grids.size();
    parallel_for(rows.size(), worker_count(), [&](std::size_t i) {
        const ProblemSpec& problem = problems[i / per_nu];
        const GridSize g = spec.grids[i % per_nu];
        const SolutionField field = run_field(problem, g, spec.richardson, spec.richardson_order);
        const ExactFn ref = exact ? exact(problem, field) : exact_of(problem);
        rows[i].gimel = max_abs_error(field, ref);
    });
    return rows;
}

void cmd_converge(const RunSpec& spec, std::ostream& out, const ExactProvider& exact) {
    const auto rows = converge_table(spec, exact);
    out << "nu,K,J,gimel\n";
    for (const auto& r : rows)
        out << format_number(r.nu) << ',' << r.K << ',' << r.J << ',' << format_number(r.gimel) << '\n';
}

void cmd_nu_star(const RunSpec& spec, std::ostream& out, std::ostream* samples) {
    std::vector<PositivityReport> reports;
    std::optional<SampleRequest> request;
    if (samples) request = SampleRequest{spec.sample_nu, spec.sample_count};
    for (double t : spec.t_star) reports.push_back(positivity_report(t, kRatios, request));

    out << "t_star,nu_hat,nu_star_1,nu_star_2,nu_star_3\n";
    for (const auto& r : reports) {
        out << format_number(r.t_star) << ',' << format_number(r.nu_hat_gamma);
        for (double ratio : kRatios) out << ',' << format_number(r.nu_star_by_ratio.at(ratio));
        out << '\n';
    }
    if (!samples) return;
    *samples << "t_star,t,omega,N_1,N_2,N_3\n";
    for (const auto& r : reports)
        for (const auto& s : r.samples) {
            *samples << format_number(r.t_star) << ',' << format_number(s.t) << ',' << format_number(s.omega);
            for (double v : s.kernel_values) *samples << ',' << format_number(v);
            *samples << '\n';
        }
}

std::vector<int> snapshot_levels(const RunSpec& spec, const Grid& grid) {
    std::vector<int> levels;
    if (!spec.snapshot_times.empty()) {
        for (double t : spec.snapshot_times) {
            if (!(t >= 0.0 && t <= grid.T * (1.0 + 1e-12)))
                throw ConfigError("snapshot time " + format_number(t) + " lies outside [0, T]", 0, "output.times");
            levels.push_back(std::clamp(static_cast<int>(std::lround(t / grid.sigma)), 0, grid.J));
        }
    } else if (spec.snapshots == 1) {
        levels.push_back(grid.J);
    } else {
        const int n = spec.snapshots;
        for (int i = 0; i < n; ++i)
            levels.push_back(static_cast<int>(std::lround(static_cast<double>(grid.J) * i / (n - 1))));
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

void cmd_solve(const RunSpec& spec, std::ostream& out, std::ostream& diagnostics) {
    const ProblemSpec problem = resolve_problem(spec, spec.nu.front());
    for (const auto& e : validate_hypotheses(problem).entries)
        if (e.status == CheckStatus::Warn) diagnostics << "warning: " << e.hypothesis << ": " << e.message << '\n';

    const SolutionField field = run_field(problem, spec.grids.front(), spec.richardson, spec.richardson_order);
    const Grid& g = field.grid();
    const auto levels = snapshot_levels(spec, g);
    out << "t,x,u\n";
    for (int j : levels)
        for (int k = 0; k <= g.K; ++k)
            out << format_number(g.t(j)) << ',' << format_number(g.x(k)) << ',' << format_number(field(j, k)) << '\n';
}

void cmd_residual_check(const RunSpec& spec, std::ostream& out) {
    out << "nu,x,t,residual\n";
    for (double nu : spec.nu) {
        const ProblemSpec problem = resolve_problem(spec, nu);
        const ExactFn exact = exact_of(problem);
        for (const auto& p : interior_samples(problem, spec.residual_samples)) {
            const double r = pointwise_residual(problem, exact, p, spec.residual_tolerance);
            out << format_number(nu) << ',' << format_number(p.x) << ',' << format_number(p.t) << ','
                << format_number(r) << '\n';
        }
    }
}

}  // namespace fracsolve
