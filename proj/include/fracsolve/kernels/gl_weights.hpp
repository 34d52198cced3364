#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracsolve {

/// Grünwald-Letnikov weights rho_m = (-1)^m binom(order, m), m = 0..n, and
/// their running partial sums.
///
/// rho_0 = 1; for order in (0,1) every rho_m with m >= 1 is negative and the
/// partial sums decrease towards zero while staying positive. For order = 1
/// the weights collapse to {1, -1, 0, 0, ...}.
class GLWeights {
public:
    GLWeights() = default;
    GLWeights(double order, std::size_t n);

    double order() const noexcept { return order_; }
    std::size_t size() const noexcept { return weights_.size(); }

    double operator[](std::size_t m) const { return weights_[m]; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// sum_{m=0}^{n} rho_m, evaluated as prod_{m=1}^{n} (1 - order/m).
    double partial_sum(std::size_t n) const { return partial_sums_[n]; }
    std::span<const double> partial_sums() const noexcept { return partial_sums_; }

private:
    double order_ = 1.0;
    std::vector<double> weights_;
    std::vector<double> partial_sums_;
};

/// Weights rho_0..rho_n for `theta` in (0, 1]. Throws DomainError otherwise.
GLWeights gl_weights(double theta, std::size_t n);

}  // namespace fracsolve
