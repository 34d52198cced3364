#include "fracsolve/scheme/tridiagonal.hpp"

#include <algorithm>
#include <cmath>

#include "fracsolve/error.hpp"

namespace fracsolve {

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t n = sys.size();
    if (n == 0) return {};
    std::vector<double> c(n), d(n);
    double pivot = sys.diag[0];
    if (pivot == 0.0) throw SolverError("thomas_solve: zero pivot in row 0");
    c[0] = sys.upper[0] / pivot;
    d[0] = sys.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.lower[i] * c[i - 1];
        if (pivot == 0.0 || !std::isfinite(pivot))
            throw SolverError("thomas_solve: zero pivot in row " + std::to_string(i));
        c[i] = i + 1 < n ? sys.upper[i] / pivot : 0.0;
        d[i] = (sys.rhs[i] - sys.lower[i] * d[i - 1]) / pivot;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

double residual_norm(const TridiagonalSystem& sys, const std::vector<double>& x) {
    const std::size_t n = sys.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = sys.diag[i] * x[i] - sys.rhs[i];
        if (i > 0) r += sys.lower[i] * x[i - 1];
        if (i + 1 < n) r += sys.upper[i] * x[i + 1];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace fracsolve
