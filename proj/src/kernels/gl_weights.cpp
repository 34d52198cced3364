#include "fracsolve/kernels/gl_weights.hpp"

#include <string>

#include "fracsolve/error.hpp"

namespace fracsolve {

GLWeights::GLWeights(double order, std::size_t n) : order_(order), weights_(n + 1), partial_sums_(n + 1) {
    if (!(order > 0.0 && order <= 1.0))
        throw DomainError("gl_weights: order must lie in (0, 1], got " + std::to_string(order));
    weights_[0] = 1.0;
    partial_sums_[0] = 1.0;
    for (std::size_t m = 1; m <= n; ++m) {
        const double dm = static_cast<double>(m);
        weights_[m] = weights_[m - 1] * (1.0 - (1.0 + order) / dm);
        partial_sums_[m] = partial_sums_[m - 1] * (1.0 - order / dm);
    }
}

GLWeights gl_weights(double theta, std::size_t n) { return GLWeights(theta, n); }

}  // namespace fracsolve
