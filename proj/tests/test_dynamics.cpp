#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rulerlab/dynamics.hpp"

using namespace rulerlab;

namespace {

// independent O(L^2) oracle: every candidate partner examined, no shortcuts
std::vector<int> oracle_degrees(const std::vector<double>& s, std::size_t begin,
                                std::size_t end) {
    std::vector<int> out;
    for (std::size_t i = begin; i < end; ++i) {
        int d = 0;
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (m < std::min(s[i], s[j]))
                ++d;
            m = std::max(m, s[j]);
        }
        out.push_back(d);
    }
    return out;
}

} // namespace

TEST_CASE("logistic iteration") {
    const auto fixed = iterate({2.0, 0.5}, 10);
    for (double x : fixed)
        CHECK(x == 0.5);
    const auto edge = iterate({4.0, 0.5}, 4);
    CHECK(edge[1] == 1.0);
    CHECK(edge[2] == 0.0);
    const auto tail = iterate({3.2, 0.3}, 10000);
    const double a = tail[9998], b = tail[9999];
    CHECK(std::abs(a - b) > 1e-3); // period 2: alternating
    CHECK(std::abs(tail[9996] - a) < 1e-9);
    CHECK(std::abs(tail[9997] - b) < 1e-9);
    CHECK_THROWS_AS(iterate({0.5, 0.5}, 3), std::domain_error);
    CHECK_THROWS_AS(iterate({2.0, 0.0}, 3), std::domain_error);
    CHECK_THROWS_AS(iterate({2.0, 0.5}, 0), std::domain_error);
}

TEST_CASE("superstable parameters") {
    CHECK(superstable_r(0) == 2.0);
    CHECK(std::abs(superstable_r(1) - (1.0 + std::sqrt(5.0))) < 1e-10);
    const double r5 = superstable_r(5);
    CHECK(r5 > 3.568);
    CHECK(r5 < 3.5699);
    const auto rs = superstable_sequence(7);
    REQUIRE(rs.size() == 8);
    for (std::size_t i = 1; i < rs.size(); ++i)
        CHECK(rs[i] > rs[i - 1]);
    CHECK_THROWS_AS(superstable_r(8), std::domain_error);
    CHECK_THROWS_AS(superstable_r(-1), std::domain_error);
}

TEST_CASE("stationary orbits") {
    const Orbit fixed = stationary_orbit(2.0, 4);
    CHECK(fixed.period == 1);
    CHECK(std::abs(fixed.points[0] - 0.5) < 1e-12);

    const Orbit two = stationary_orbit(3.2, 8);
    CHECK(two.period == 2);

    const Orbit eight = stationary_orbit(superstable_r(3), 16);
    CHECK(eight.period == 8);
    CHECK(std::abs(eight.points.front() - 0.5) < 1e-6);

    CHECK_THROWS_AS(stationary_orbit(superstable_r(3), 4), std::runtime_error);
}

TEST_CASE("forward visibility on explicit series") {
    // monotone series: each point sees only its successor
    CHECK(forward_visibility({1.0, 2.0, 3.0}, 0, 2).degrees == std::vector<int>{1, 1});
    // the final point has no future partner >= it: window must exclude it
    CHECK_THROWS_AS(forward_visibility({1.0, 2.0, 3.0}, 0, 3), std::runtime_error);

    // period-2 (low, high) repeating
    const std::vector<double> p2{0.5, 0.8, 0.5, 0.8, 0.5, 0.8, 0.5, 0.8};
    CHECK(forward_visibility(p2, 2, 4).degrees == std::vector<int>{1, 2});

    // equal intermediate blocks visibility
    const std::vector<double> eq{0.5, 0.3, 0.3, 0.6};
    CHECK(forward_visibility(eq, 0, 1).degrees == std::vector<int>{2});

    CHECK_THROWS_AS(forward_visibility(p2, 3, 9), std::domain_error);
}

TEST_CASE("walk equals the exhaustive oracle on random series") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> len(8, 500);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> s(len(rng));
        for (double& x : s)
            x = val(rng);
        s.push_back(1.5); // terminator for every window point
        const std::size_t end = s.size() - 1;
        REQUIRE(forward_visibility(s, 0, end).degrees == oracle_degrees(s, 0, end));
    }
}

TEST_CASE("degrees are invariant under monotone transforms") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> val(0.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        std::vector<double> s(200);
        for (double& x : s)
            x = val(rng);
        s.push_back(2.0);
        const std::size_t end = s.size() - 1;
        const auto base = forward_visibility(s, 0, end).degrees;
        auto mapped = s;
        for (double& x : mapped)
            x = std::exp(3.0 * x) - 0.5;
        REQUIRE(forward_visibility(mapped, 0, end).degrees == base);
    }
}

TEST_CASE("one-period patterns of superstable orbits") {
    // period 8: multiset of degrees = multiset of block 3 plus the closing 4
    const Orbit eight = stationary_orbit(superstable_r(3), 8);
    auto degrees = orbit_visibility_pattern(eight).degrees;
    auto expected = ruler_block(3);
    expected.push_back(4);
    std::sort(degrees.begin(), degrees.end());
    std::sort(expected.begin(), expected.end());
    CHECK(degrees == expected);

    for (int n = 1; n <= 6; ++n) {
        const PatternComparison cmp = compare_pattern(n);
        REQUIRE(cmp.measured.size() == std::size_t{1} << n);
        CHECK(cmp.matches_ruler_prefix);          // rotation after max = ruler prefix
        CHECK(cmp.literal_is_doubled_rotation);   // published recurrence = doubled rotation
        CHECK_FALSE(cmp.measured_is_doubled_ruler);
    }
}

TEST_CASE("literal recurrence reading") {
    CHECK(pattern_recurrence(1).degrees == std::vector<int>{4, 2});
    CHECK(pattern_recurrence(2).degrees == std::vector<int>{6, 2, 4, 2});
    CHECK(pattern_recurrence(3).degrees == std::vector<int>{8, 2, 4, 2, 6, 2, 4, 2});
    CHECK(pattern_recurrence(4).degrees.size() == 16);
}

TEST_CASE("accumulation point extrapolation") {
    // geometric gaps with ratio 1/2 from 0: 1, 1.5, 1.75 -> limit 2 exactly
    CHECK(feigenbaum_accumulation({0.0, 1.0, 1.5, 1.75}) == 2.0);
    CHECK_THROWS_AS(feigenbaum_accumulation({0.0, 1.0, 0.5, 1.75}), std::domain_error);
    CHECK_THROWS_AS(feigenbaum_accumulation({0.0, 1.0, 1.5}), std::domain_error);

    const auto rs = superstable_sequence(7);
    const double acc = feigenbaum_accumulation(rs);
    CHECK(acc > 3.5699);
    CHECK(acc < 3.5700);
    // extrapolant settles to 4 decimals once n reaches 6
    const double acc6 = feigenbaum_accumulation({rs.begin(), rs.begin() + 7});
    CHECK(std::abs(acc - acc6) < 1e-4);
    // from n = 0..5 only, still inside the published bracket
    const double acc5 = feigenbaum_accumulation({rs.begin(), rs.begin() + 6});
    CHECK(acc5 > 3.5699);
    CHECK(acc5 < 3.5700);

    const auto deltas = delta_estimates(rs);
    REQUIRE(deltas.size() == 6);
    for (std::size_t i = 2; i < deltas.size(); ++i)
        CHECK(std::abs(deltas[i] - 4.67) < 0.05 * 4.67);
}
