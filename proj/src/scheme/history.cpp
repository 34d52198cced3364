#include "fracsolve/scheme/history.hpp"

#include <cmath>
#include <string>

#include "fracsolve/error.hpp"

namespace fracsolve {

HistoryBuffer::HistoryBuffer(std::size_t nodes, std::size_t capacity_levels)
    : nodes_(nodes), capacity_(capacity_levels), data_(nodes * capacity_levels, 0.0) {}

void HistoryBuffer::append(std::span<const double> level) {
    if (level.size() != nodes_) throw SolverError("history: level has the wrong number of nodes");
    if (levels_ == capacity_) throw SolverError("history: capacity exhausted");
    for (std::size_t k = 0; k < nodes_; ++k) data_[k * capacity_ + levels_] = level[k];
    ++levels_;
}

CaputoSplit caputo_history_sum(const HistoryBuffer& history, std::size_t k, double coeff_next, const GLWeights& gl,
                               double sigma, int j) {
    const auto need = static_cast<std::size_t>(j) + 1;
    if (j < 0 || history.levels() != need || gl.size() < need + 1)
        throw SolverError("caputo_history_sum: history holds " + std::to_string(history.levels()) +
                          " levels, expected " + std::to_string(need));
    const double scale = std::pow(sigma, -gl.order());
    const auto p = history.series(k);
    // sum_{l=0}^{j} P^l rho_{j+1-l}
    double s = 0.0;
    for (std::size_t l = 0; l < need; ++l) s += p[l] * gl[need - l];
    return {scale * gl[0] * coeff_next, scale * (s - p[0] * gl.partial_sum(need))};
}

}  // namespace fracsolve
