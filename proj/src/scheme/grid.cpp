#include "fracsolve/scheme/grid.hpp"

#include <string>

#include "fracsolve/error.hpp"

namespace fracsolve {

Grid build_grid(int K, int J, double L, double T) {
    if (K < 2) throw DomainError("grid: need K >= 2 spatial intervals, got " + std::to_string(K));
    if (J < 1) throw DomainError("grid: need J >= 1 time levels, got " + std::to_string(J));
    if (!(L > 0.0) || !(T > 0.0)) throw DomainError("grid: length and horizon must be positive");
    return Grid{K, J, L, T, L / K, T / J};
}

SolutionField::SolutionField(const Grid& grid) : grid_(grid), values_(grid.levels() * grid.nodes(), 0.0) {}

}  // namespace fracsolve
