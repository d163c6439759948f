#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <vector>

#include "mocha/errors.hpp"

namespace mocha {

// Point in [0,1]^M objective space, higher is better on every axis.
// Components arriving outside [0,1] (or non-finite) are clamped with a
// warning instead of rejected, so noisy user evaluators cannot abort a run.
class MetricVector {
public:
    MetricVector() = default;

    explicit MetricVector(std::vector<double> values) : values_(std::move(values)) {
        for (double& v : values_) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                std::fprintf(stderr, "mocha: metric component %g outside [0,1], clamping\n", v);
                v = std::isfinite(v) ? std::clamp(v, 0.0, 1.0) : 0.0;
            }
        }
    }

    MetricVector(std::initializer_list<double> values)
        : MetricVector(std::vector<double>(values)) {}

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const MetricVector& other) const { return values_ == other.values_; }

private:
    std::vector<double> values_;
};

// Character budgets for the two constrained SKILL.md fields.
struct ComplianceLimits {
    long description_limit = 1024;
    long body_limit = 5000;

    void validate() const {
        if (description_limit <= 0 || body_limit <= 0)
            throw contract_error("compliance limits must be strictly positive");
    }
};

// compliance(l) = max(0, 1 - l/L). Empty field scores 1, at the limit 0,
// past the limit clamps to 0.
inline double compliance_score(long length, long limit) {
    if (limit <= 0) throw contract_error("compliance limit must be > 0");
    if (length < 0) throw contract_error("length must be >= 0");
    return std::max(0.0, 1.0 - static_cast<double>(length) / static_cast<double>(limit));
}

// a dominates b: a >= b componentwise with at least one strict coordinate.
inline bool dominates(const MetricVector& a, const MetricVector& b) {
    if (a.size() != b.size())
        throw contract_error("dominates: length mismatch");
    bool strict = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return false;
        if (a[j] > b[j]) strict = true;
    }
    return strict;
}

inline bool weakly_dominates(const MetricVector& a, const MetricVector& b) {
    if (a.size() != b.size())
        throw contract_error("weakly_dominates: length mismatch");
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] < b[j]) return false;
    return true;
}

// Indices of the non-dominated members of `points`. Duplicates of a front
// point are all retained: distinct candidates may tie in objective space.
inline std::vector<std::size_t> pareto_front_indices(const std::vector<MetricVector>& points) {
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i && dominates(points[j], points[i])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(i);
    }
    return front;
}

inline std::vector<MetricVector> pareto_front(const std::vector<MetricVector>& points) {
    std::vector<MetricVector> front;
    for (std::size_t i : pareto_front_indices(points)) front.push_back(points[i]);
    return front;
}

// Unweighted mean of the objectives; the single-objective reduction used by
// the baseline selectors.
inline double composite_score(const MetricVector& m) {
    if (m.size() == 0) throw contract_error("composite_score: empty vector");
    double sum = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) sum += m[j];
    return sum / static_cast<double>(m.size());
}

}  // namespace mocha
