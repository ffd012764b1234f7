#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rulerlab/automaton.hpp"
#include "rulerlab/demography.hpp"

using namespace rulerlab;

TEST_CASE("population recurrences hit the published seeds") {
    CHECK(population_linear(1) == 1);
    CHECK(population_linear(2) == 3);
    CHECK(population_linear(5) == 31);
    CHECK(population_duplication(2) == 3);
    CHECK(population_duplication(3) == 7);
    CHECK(population_duplication(10) == 1023);
    CHECK(hanoi_moves(1) == 1);
    CHECK(hanoi_moves(3) == 7);
    CHECK(hanoi_moves(8) == 255);
}

TEST_CASE("three recurrences, one closed form, up to the 64-bit cap") {
    for (int n = 1; n <= 62; ++n) {
        const std::int64_t expect = (std::int64_t{1} << n) - 1;
        REQUIRE(population_linear(n) == expect);
        REQUIRE(population_duplication(n) == expect);
        REQUIRE(hanoi_moves(n) == expect);
    }
    CHECK_THROWS_AS(population_linear(63), std::domain_error);
    CHECK_THROWS_AS(population_linear(0), std::domain_error);
}

TEST_CASE("newborns are the population difference") {
    CHECK(newborns(1) == 2);
    CHECK(newborns(4) == 16);
    CHECK(newborns(10) == 1024);
    for (int n = 1; n <= 61; ++n)
        REQUIRE(newborns(n) == population_linear(n + 1) - population_linear(n));
}

TEST_CASE("mortal model closed form") {
    CHECK(population_with_death(1) == 1);
    CHECK(population_with_death(2) == 3);
    CHECK(population_with_death(3) == 7);
    CHECK(population_with_death(4) == 14);
    CHECK(population_with_death(5) == 28);
    CHECK(population_with_death(6) == 56);
    for (int n = 3; n <= 61; ++n)
        REQUIRE(population_with_death(n + 1) == 2 * population_with_death(n));
}

TEST_CASE("closed-form census, simulated census, automaton tally") {
    const AgeCensus c1 = census(1);
    CHECK(c1.counts == std::vector<std::int64_t>{1});
    const AgeCensus c3 = census(3);
    CHECK(c3.counts == std::vector<std::int64_t>{4, 2, 1});
    CHECK(c3.total == 7);

    for (int n = 1; n <= 24; ++n) {
        const AgeCensus closed = census(n);
        const AgeCensus sim = census_simulated(n);
        REQUIRE(closed.counts == sim.counts);
        REQUIRE(closed.total == population_linear(n));
    }
    for (int n = 1; n <= 14; ++n) {
        const Partition p = run({0.0, 1.0}, 0.5, n);
        std::vector<std::int64_t> tally(n, 0);
        for (const auto& q : p.points)
            ++tally[age_of(p, q) - 1];
        REQUIRE(tally == census(n).counts);
    }
    // proportion of age-2 individuals at n = 20 approaches 1/4
    const AgeCensus c20 = census(20);
    const double share = static_cast<double>(c20.counts[1]) / c20.total;
    CHECK(std::abs(share - 0.25) < std::ldexp(1.0, -19));
    // reported proportions are the exact limit shares 2^-k
    for (int k = 1; k <= 20; ++k)
        REQUIRE(c20.proportions[k - 1] == std::ldexp(1.0, -k));
}

TEST_CASE("census with death tracks the closed form at lifespan 3") {
    CHECK(census_with_death(2).total == 3);
    CHECK(census_with_death(4).total == 14);
    for (int n = 1; n <= 24; ++n)
        REQUIRE(census_with_death(n, 3).total == population_with_death(n));
    const AgeCensus c5 = census_with_death(5, 3);
    CHECK(c5.counts.size() <= 3); // lifespan bound on the age classes
    CHECK(c5.counts == std::vector<std::int64_t>{16, 8, 4});
    CHECK(c5.proportions[0] == 16.0 / 28.0); // mortal shares are of the live total
    CHECK_THROWS_AS(census_with_death(4, 0), std::domain_error);
}

TEST_CASE("other lifespans still bound the age classes") {
    for (int lifespan : {1, 2, 5}) {
        const AgeCensus c = census_with_death(12, lifespan);
        CHECK(static_cast<int>(c.counts.size()) <= lifespan);
    }
    // immortal limit: lifespan beyond the step count changes nothing
    CHECK(census_with_death(10, 100).counts == census(10).counts);
}
