#pragma once

#include <functional>
#include <vector>

#include "fracsolve/scheme/grid.hpp"

namespace fracsolve {

/// Weights K_{m,j} = int_{t_m}^{t_{m+1}} K(t_{j+1} - s) ds, 0 <= m <= j <= J-1.
///
/// On a uniform grid the weight depends only on the lag j - m, so one value
/// per lag is stored.
class ConvolutionWeights {
public:
    ConvolutionWeights() = default;

    /// K(t) = scale * t^{-beta}, beta in [0, 1). Throws DomainError for beta >= 1.
    static ConvolutionWeights power(double beta, const Grid& grid, double scale = 1.0);

    /// General kernel given its antiderivative F(tau) = int_0^tau K(s) ds.
    static ConvolutionWeights from_antiderivative(const std::function<double(double)>& antiderivative,
                                                  const Grid& grid);

    double beta() const noexcept { return beta_; }
    double operator()(int m, int j) const { return by_lag_[static_cast<std::size_t>(j - m)]; }
    const std::vector<double>& by_lag() const noexcept { return by_lag_; }

private:
    double beta_ = 0.0;
    std::vector<double> by_lag_;
};

/// Power-kernel weights with unit scale.
ConvolutionWeights convolution_weights(double beta, const Grid& grid);

}  // namespace fracsolve
