#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "mocha/errors.hpp"
#include "mocha/metrics.hpp"

namespace mocha {

// Nonnegative weights summing to 1 (a point on the simplex).
class WeightVector {
public:
    WeightVector() = default;

    explicit WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
        double sum = 0.0;
        for (double w : weights_) {
            if (!(w >= 0.0)) throw contract_error("weights must be nonnegative");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw contract_error("weights must sum to 1");
    }

    WeightVector(std::initializer_list<double> weights)
        : WeightVector(std::vector<double>(weights)) {}

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& values() const { return weights_; }

private:
    std::vector<double> weights_;
};

// Worst-case weighted gap to the ideal point (1,...,1). Lower is better; a
// zero weight deactivates its coordinate.
inline double chebyshev(const MetricVector& m, const WeightVector& w) {
    if (m.size() != w.size()) throw contract_error("chebyshev: length mismatch");
    double worst = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j)
        worst = std::max(worst, w[j] * std::abs(m[j] - 1.0));
    return worst;
}

// Weighted sum of objectives; higher is better. Used by tests and by the
// baseline composite machinery, never by the annealed acceptance path.
inline double linear(const MetricVector& m, const WeightVector& w) {
    if (m.size() != w.size()) throw contract_error("linear: length mismatch");
    double sum = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) sum += w[j] * m[j];
    return sum;
}

// Uniform sample on the simplex via normalized unit-rate exponentials
// (equivalently Dirichlet with all concentration parameters 1).
template <class Rng>
WeightVector sample_weight(Rng& rng, std::size_t m) {
    if (m < 2) throw contract_error("sample_weight: need M >= 2");
    std::vector<double> draws(m);
    double sum = 0.0;
    for (double& d : draws) {
        d = rng.exponential();
        sum += d;
    }
    for (double& d : draws) d /= sum;
    return WeightVector(std::move(draws));
}

// Chebyshev scores within this distance are treated as tied for argmin
// purposes, so platform-level rounding cannot reorder selections.
inline constexpr double kArgminTieTolerance = 1e-12;

// Index of a pool member attaining the minimum Chebyshev score under w;
// ties are broken uniformly at random from the caller's stream.
template <class Rng>
std::size_t select_parent(const std::vector<MetricVector>& pool, const WeightVector& w,
                          Rng& ties) {
    if (pool.empty()) throw contract_error("select_parent: empty pool");
    double best = chebyshev(pool[0], w);
    std::vector<std::size_t> tied{0};
    for (std::size_t i = 1; i < pool.size(); ++i) {
        const double s = chebyshev(pool[i], w);
        if (s < best - kArgminTieTolerance) {
            best = s;
            tied.assign(1, i);
        } else if (s <= best + kArgminTieTolerance) {
            best = std::min(best, s);
            tied.push_back(i);
        }
    }
    if (tied.size() == 1) return tied[0];
    return tied[static_cast<std::size_t>(ties.below(tied.size()))];
}

}  // namespace mocha
