#include "fracsolve/problem/problem.hpp"

#include <cmath>

#include "fracsolve/error.hpp"

namespace fracsolve {

double MemoryKernel::operator()(double t) const {
    if (!enabled) return 0.0;
    return scale * std::pow(t, -beta);
}

double MemoryKernel::antiderivative(double tau) const {
    if (!enabled) return 0.0;
    return scale * std::pow(tau, 1.0 - beta) / (1.0 - beta);
}

void check_structure(const ProblemSpec& problem) {
    if (problem.rho.size() != problem.orders.nu_list.size())
        throw DomainError("problem '" + problem.name + "': one rho coefficient is required per nu_i");
    if (problem.gamma.size() != problem.orders.mu_list.size())
        throw DomainError("problem '" + problem.name + "': one gamma coefficient is required per mu_j");
    if (!(problem.length > 0.0) || !(problem.horizon > 0.0))
        throw DomainError("problem '" + problem.name + "': domain length and horizon must be positive");
    if (problem.kernel.enabled && !(problem.kernel.beta >= 0.0 && problem.kernel.beta < 1.0))
        throw DomainError("problem '" + problem.name + "': kernel exponent must lie in [0, 1)");
    auto check_order = [&](double v) {
        if (!(v > 0.0 && v <= 1.0)) throw DomainError("problem '" + problem.name + "': orders must lie in (0, 1]");
    };
    check_order(problem.orders.nu);
    for (double v : problem.orders.nu_list) check_order(v);
    for (double v : problem.orders.mu_list) check_order(v);
    if (problem.left.c_deriv == 0.0 && problem.left.c_value == 0.0)
        throw DomainError("problem '" + problem.name + "': degenerate boundary condition at x = 0");
    if (problem.right.c_deriv == 0.0 && problem.right.c_value == 0.0)
        throw DomainError("problem '" + problem.name + "': degenerate boundary condition at x = L");
}

}  // namespace fracsolve
