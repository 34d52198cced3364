#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracsolve {

/// Uniform space-time mesh x_k = k h (k = 0..K), t_j = j sigma (j = 0..J).
struct Grid {
    int K = 0;
    int J = 0;
    double L = 1.0;
    double T = 1.0;
    double h = 0.0;
    double sigma = 0.0;

    double x(int k) const noexcept { return k * h; }
    double t(int j) const noexcept { return j * sigma; }
    std::size_t nodes() const noexcept { return static_cast<std::size_t>(K) + 1; }
    std::size_t levels() const noexcept { return static_cast<std::size_t>(J) + 1; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Requires K >= 2, J >= 1, L > 0, T > 0; throws DomainError otherwise.
Grid build_grid(int K, int J, double L, double T);

/// Nodal values u_k^j stored level by level.
class SolutionField {
public:
    SolutionField() = default;
    explicit SolutionField(const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }

    double& operator()(int j, int k) { return values_[index(j, k)]; }
    double operator()(int j, int k) const { return values_[index(j, k)]; }

    std::span<double> level(int j) { return {values_.data() + index(j, 0), grid_.nodes()}; }
    std::span<const double> level(int j) const { return {values_.data() + index(j, 0), grid_.nodes()}; }

    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const SolutionField&, const SolutionField&) = default;

private:
    std::size_t index(int j, int k) const noexcept {
        return static_cast<std::size_t>(j) * grid_.nodes() + static_cast<std::size_t>(k);
    }

    Grid grid_;
    std::vector<double> values_;
};

}  // namespace fracsolve
