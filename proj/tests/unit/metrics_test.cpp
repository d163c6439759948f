#include <catch2/catch_amalgamated.hpp>

#include "mocha/metrics.hpp"
#include "mocha/rng.hpp"
#include "oracles.hpp"

using namespace mocha;

TEST_CASE("dominates follows the strict-inequality clause") {
    REQUIRE(dominates({1, 1, 1}, {0.5, 0.5, 0.5}));
    REQUIRE_FALSE(dominates({0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}));  // irreflexive
    REQUIRE_FALSE(dominates({0.9, 0.2, 0.9}, {0.8, 0.3, 0.9}));  // incomparable
    REQUIRE_FALSE(dominates({0.8, 0.3, 0.9}, {0.9, 0.2, 0.9}));
    REQUIRE(dominates({0.5, 0.5, 0.6}, {0.5, 0.5, 0.5}));
    REQUIRE_THROWS_AS(dominates({1, 1}, {1, 1, 1}), contract_error);
}

TEST_CASE("dominates is irreflexive and transitive on random triples") {
    rng::Stream s(101);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = oracles::random_point(s, 3);
        const auto b = oracles::random_point(s, 3);
        const auto c = oracles::random_point(s, 3);
        REQUIRE_FALSE(dominates(a, a));
        if (dominates(a, b) && dominates(b, c)) REQUIRE(dominates(a, c));
        // antisymmetry
        if (dominates(a, b)) REQUIRE_FALSE(dominates(b, a));
    }
}

TEST_CASE("compliance_score formula") {
    REQUIRE(compliance_score(0, 1024) == 1.0);
    REQUIRE(compliance_score(38, 1024) == Catch::Approx(0.9629).margin(5e-5));
    REQUIRE(compliance_score(38, 1024) == 1.0 - 38.0 / 1024.0);
    REQUIRE(compliance_score(6412, 5000) == 0.0);
    REQUIRE(compliance_score(1024, 1024) == 0.0);
    REQUIRE_THROWS_AS(compliance_score(1, 0), contract_error);
    REQUIRE_THROWS_AS(compliance_score(-1, 10), contract_error);
}

TEST_CASE("compliance_score is non-increasing in length") {
    double prev = 2.0;
    for (long l = 0; l <= 1200; l += 7) {
        const double c = compliance_score(l, 1024);
        REQUIRE(c <= prev);
        prev = c;
    }
}

TEST_CASE("pareto_front basics") {
    REQUIRE(pareto_front({}).empty());

    const std::vector<MetricVector> axes{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    REQUIRE(pareto_front(axes).size() == 3);

    const std::vector<MetricVector> chain{{0.5, 0.5, 0.5}, {0.6, 0.6, 0.6}};
    const auto front = pareto_front(chain);
    REQUIRE(front.size() == 1);
    REQUIRE(front[0] == MetricVector{0.6, 0.6, 0.6});
}

TEST_CASE("pareto_front keeps duplicates of front points") {
    const std::vector<MetricVector> pts{{0.7, 0.3, 0.5}, {0.7, 0.3, 0.5}, {0.1, 0.1, 0.1}};
    REQUIRE(pareto_front(pts).size() == 2);
}

TEST_CASE("pareto_front matches brute force and its removal property") {
    rng::Stream s(202);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pts = oracles::random_points(s, 1 + s.below(12), 3);
        const auto idx = pareto_front_indices(pts);
        REQUIRE(idx == oracles::brute_force_front(pts));
        // no member dominates another
        for (auto i : idx)
            for (auto j : idx)
                if (i != j) REQUIRE_FALSE(dominates(pts[i], pts[j]));
        // every removed point is dominated by some retained point
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
            bool covered = false;
            for (auto j : idx) covered = covered || dominates(pts[j], pts[i]);
            REQUIRE(covered);
        }
    }
}

TEST_CASE("out-of-range metric components clamp") {
    const MetricVector m{-0.5, 1.7, 0.3};
    REQUIRE(m[0] == 0.0);
    REQUIRE(m[1] == 1.0);
    REQUIRE(m[2] == 0.3);
}

TEST_CASE("composite is the unweighted mean") {
    REQUIRE(composite_score({0.63, 0.96, 0.99}) == Catch::Approx(0.86));
    REQUIRE(composite_score({1, 1, 1}) == 1.0);
}
