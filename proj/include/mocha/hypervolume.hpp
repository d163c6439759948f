#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mocha/errors.hpp"
#include "mocha/metrics.hpp"
#include "mocha/rng.hpp"

namespace mocha {

namespace detail {

// Area of the union of axis-aligned rectangles [0,x] x [0,y]: keep the
// staircase of non-dominated corners and sum its steps.
inline double staircase_area(std::vector<std::pair<double, double>> pts) {
    if (pts.empty()) return 0.0;
    // x descending, then y descending so dominated corners fall behind.
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second > b.second;
    });
    double area = 0.0;
    double prev_y = 0.0;
    for (const auto& [x, y] : pts) {
        if (y > prev_y) {
            area += x * (y - prev_y);
            prev_y = y;
        }
    }
    return area;
}

}  // namespace detail

// Exact volume of objective space dominated by `points` with the origin as
// reference point. M = 3 sweeps the third coordinate descending, integrating
// the 2D staircase slab by slab (O(n^2 log n)); M = 2 is one staircase and
// M = 1 the max coordinate. Dominated and duplicate points add nothing.
inline double hv_exact(const std::vector<MetricVector>& points) {
    if (points.empty()) return 0.0;
    const std::size_t m = points[0].size();
    for (const auto& p : points)
        if (p.size() != m) throw contract_error("hv_exact: mixed dimensions");
    if (m > 3) throw unsupported_dimension(m);
    if (m == 0) return 0.0;

    if (m == 1) {
        double best = 0.0;
        for (const auto& p : points) best = std::max(best, p[0]);
        return best;
    }
    if (m == 2) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(points.size());
        for (const auto& p : points) pts.emplace_back(p[0], p[1]);
        return detail::staircase_area(std::move(pts));
    }

    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a][2] > points[b][2];
    });

    double volume = 0.0;
    std::vector<std::pair<double, double>> active;
    for (std::size_t k = 0; k < order.size(); ++k) {
        active.emplace_back(points[order[k]][0], points[order[k]][1]);
        const double z_top = points[order[k]][2];
        const double z_bottom = (k + 1 < order.size()) ? points[order[k + 1]][2] : 0.0;
        if (z_top > z_bottom)
            volume += detail::staircase_area(active) * (z_top - z_bottom);
    }
    return volume;
}

// Exclusive volume `candidate` adds to `points`. Exactly 0 whenever the
// candidate is weakly dominated by a member (including exact duplicates),
// checked before any arithmetic so no rounding dust leaks through.
inline double hvc(const MetricVector& candidate, const std::vector<MetricVector>& points) {
    for (const auto& p : points)
        if (weakly_dominates(p, candidate)) return 0.0;
    const double base = hv_exact(points);
    std::vector<MetricVector> extended = points;
    extended.push_back(candidate);
    return std::max(0.0, hv_exact(extended) - base);
}

struct MonteCarloEstimate {
    double estimate = 0.0;
    double half_width = 0.0;  // 99% normal-approximation half-width
};

// Fraction of uniform samples in [0,1]^M covered by some point's box.
// Works for any M; serves as the independent oracle for hv_exact.
inline MonteCarloEstimate hv_monte_carlo(const std::vector<MetricVector>& points,
                                         std::size_t samples, rng::Stream& stream) {
    if (samples < 1) throw contract_error("hv_monte_carlo: samples must be >= 1");
    const std::size_t m = points.empty() ? 0 : points[0].size();
    std::size_t hits = 0;
    std::vector<double> u(m);
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < m; ++j) u[j] = stream.uniform01();
        for (const auto& p : points) {
            bool inside = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (u[j] > p[j]) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                ++hits;
                break;
            }
        }
    }
    const double n = static_cast<double>(samples);
    const double p_hat = static_cast<double>(hits) / n;
    constexpr double z99 = 2.5758293035489004;  // Phi^-1(0.995)
    return {p_hat, z99 * std::sqrt(p_hat * (1.0 - p_hat) / n)};
}

}  // namespace mocha
