#pragma once

// Independent oracles for the test suite. These stay deliberately naive and
// separate from the library's computation paths.

#include <vector>

#include "mocha/metrics.hpp"
#include "mocha/rng.hpp"

namespace oracles {

// Union volume of the boxes [0, p] by inclusion-exclusion over all point
// subsets. Exponential in |points|; exact for the small sets tests use.
inline double hv_inclusion_exclusion(const std::vector<mocha::MetricVector>& points) {
    const std::size_t n = points.size();
    if (n == 0) return 0.0;
    const std::size_t m = points[0].size();
    double total = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        double vol = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            double low = 2.0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) low = std::min(low, points[i][j]);
            vol *= low;
        }
        total += __builtin_popcountll(mask) % 2 == 1 ? vol : -vol;
    }
    return total;
}

// Quadratic-scan non-dominated filter, kept independent of the library's.
inline std::vector<std::size_t> brute_force_front(const std::vector<mocha::MetricVector>& pts) {
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j) continue;
            bool ge = true, gt = false;
            for (std::size_t k = 0; k < pts[i].size(); ++k) {
                if (pts[j][k] < pts[i][k]) ge = false;
                if (pts[j][k] > pts[i][k]) gt = true;
            }
            dominated = ge && gt;
        }
        if (!dominated) front.push_back(i);
    }
    return front;
}

inline mocha::MetricVector random_point(mocha::rng::Stream& s, std::size_t m) {
    std::vector<double> v(m);
    for (double& x : v) x = s.uniform01();
    return mocha::MetricVector(std::move(v));
}

inline std::vector<mocha::MetricVector> random_points(mocha::rng::Stream& s, std::size_t n,
                                                      std::size_t m) {
    std::vector<mocha::MetricVector> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(s, m));
    return pts;
}

}  // namespace oracles
