#include "fracsolve/scheme/convolution.hpp"

#include <cmath>
#include <string>

#include "fracsolve/error.hpp"

namespace fracsolve {

ConvolutionWeights ConvolutionWeights::power(double beta, const Grid& grid, double scale) {
    if (!(beta >= 0.0 && beta < 1.0))
        throw DomainError("convolution weights: beta must lie in [0, 1), got " + std::to_string(beta));
    const double e = 1.0 - beta;
    const double unit = scale * std::pow(grid.sigma, e) / e;
    ConvolutionWeights w;
    w.beta_ = beta;
    w.by_lag_.resize(static_cast<std::size_t>(grid.J));
    // (n+1)^e - n^e written as n^e * expm1(e * log1p(1/n)) to avoid cancellation.
    for (std::size_t n = 0; n < w.by_lag_.size(); ++n) {
        const double dn = static_cast<double>(n);
        w.by_lag_[n] = n == 0 ? unit : unit * std::pow(dn, e) * std::expm1(e * std::log1p(1.0 / dn));
    }
    return w;
}

ConvolutionWeights ConvolutionWeights::from_antiderivative(const std::function<double(double)>& antiderivative,
                                                           const Grid& grid) {
    ConvolutionWeights w;
    w.by_lag_.resize(static_cast<std::size_t>(grid.J));
    double prev = antiderivative(0.0);
    for (std::size_t n = 0; n < w.by_lag_.size(); ++n) {
        const double next = antiderivative(static_cast<double>(n + 1) * grid.sigma);
        w.by_lag_[n] = next - prev;
        prev = next;
    }
    return w;
}

ConvolutionWeights convolution_weights(double beta, const Grid& grid) {
    return ConvolutionWeights::power(beta, grid, 1.0);
}

}  // namespace fracsolve
