#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracsolve/kernels/gl_weights.hpp"

namespace fracsolve {

/// Past level values of one nodal quantity (e.g. rho0 * u), stored node-major
/// so the sum over levels for a fixed node walks contiguous memory.
class HistoryBuffer {
public:
    HistoryBuffer() = default;
    HistoryBuffer(std::size_t nodes, std::size_t capacity_levels);

    std::size_t nodes() const noexcept { return nodes_; }
    std::size_t levels() const noexcept { return levels_; }

    void append(std::span<const double> level);

    double value(std::size_t k, std::size_t level) const { return data_[k * capacity_ + level]; }

    /// Levels 0..levels()-1 at node k.
    std::span<const double> series(std::size_t k) const { return {data_.data() + k * capacity_, levels_}; }

private:
    std::size_t nodes_ = 0;
    std::size_t capacity_ = 0;
    std::size_t levels_ = 0;
    std::vector<double> data_;
};

/// Split of the Grünwald-Letnikov approximation of D^theta(c u) at level j+1,
/// node k, into the coefficient of the unknown u_k^{j+1} and the known part:
///
///   sigma^{-theta} sum_{m=0}^{j+1} (P^{j+1-m} - P^0) rho_m
///     = implicit_coeff * u_k^{j+1} + lag,    P^l = c^l u^l
struct CaputoSplit {
    double implicit_coeff = 0.0;
    double lag = 0.0;
};

/// `history` must hold levels 0..j and `gl` weights 0..j+1; otherwise SolverError.
CaputoSplit caputo_history_sum(const HistoryBuffer& history, std::size_t k, double coeff_next, const GLWeights& gl,
                               double sigma, int j);

}  // namespace fracsolve
