#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>

#include "rulerlab/ruler.hpp"

using namespace rulerlab;

namespace {

// naive cubic square finder; trustworthy oracle for small inputs
std::optional<SquareOccurrence> naive_square(const IndexSequence& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t l = 1; i + 2 * l <= s.size(); ++l) {
            bool eq = true;
            for (std::size_t k = 0; k < l && eq; ++k)
                eq = s[i + k] == s[i + l + k];
            if (eq)
                return SquareOccurrence{i, l};
        }
    return std::nullopt;
}

} // namespace

TEST_CASE("term values from the definition") {
    CHECK(ruler_term(1) == 1);
    CHECK(ruler_term(8) == 4);
    CHECK(ruler_term(12) == 3);
    // first terms as published: 1,2,1,3,1,2,1,4,1,2,1,3,1,2,1
    const IndexSequence expect{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1};
    CHECK(ruler_stream(15) == expect);
    CHECK(ruler_term(std::uint64_t{1} << 62) == 63);
    CHECK_THROWS_AS(ruler_term(0), std::domain_error);
    CHECK_THROWS_AS(ruler_term((std::uint64_t{1} << 62) + 1), std::domain_error);
}

TEST_CASE("recursive route agrees with the bit route") {
    CHECK(ruler_term_recursive(3) == 1);
    CHECK(ruler_term_recursive(4) == 3);
    CHECK(ruler_term_recursive(std::uint64_t{1} << 20) == 21); // g(2^n) = n + 1
    for (std::uint64_t n = 1; n <= (1u << 15); ++n)
        REQUIRE(ruler_term(n) == ruler_term_recursive(n));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, kMaxPosition);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = dist(rng);
        REQUIRE(ruler_term(n) == ruler_term_recursive(n));
    }
    CHECK_THROWS_AS(ruler_term_recursive(0), std::domain_error);
}

TEST_CASE("blocks grow by the doubling rule") {
    CHECK(ruler_block(1) == IndexSequence{1});
    CHECK(ruler_block(3) == IndexSequence{1, 2, 1, 3, 1, 2, 1});
    CHECK(ruler_block(4) == IndexSequence{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1});
    CHECK(ruler_block(10).size() == (1u << 10) - 1);
    CHECK_THROWS_AS(ruler_block(0), std::domain_error);
    CHECK_THROWS_AS(ruler_block(25), std::domain_error);
}

TEST_CASE("stream equals the block prefix") {
    CHECK(ruler_stream(0).empty());
    CHECK(ruler_stream(7) == IndexSequence{1, 2, 1, 3, 1, 2, 1});
    CHECK(ruler_stream(15) == ruler_block(4));
    for (int n = 1; n <= 16; ++n)
        REQUIRE(ruler_stream((std::uint64_t{1} << n) - 1) == ruler_block(n));
}

TEST_CASE("self-similarity of the infinite sequence") {
    for (std::uint64_t n = 1; n <= 200000; ++n) {
        REQUIRE(ruler_term(2 * n) == ruler_term(n) + 1);
        REQUIRE(ruler_term(2 * n - 1) == 1);
    }
}

TEST_CASE("Gray reflection around powers of two") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 20; ++n) {
        CHECK(ruler_term(std::uint64_t{1} << n) == n + 1);
        std::uniform_int_distribution<std::uint64_t> kdist(1, (std::uint64_t{1} << n) - 1);
        for (int i = 0; i < 600; ++i) {
            const std::uint64_t k = kdist(rng);
            REQUIRE(ruler_term((std::uint64_t{1} << n) + k) ==
                    ruler_term((std::uint64_t{1} << n) - k));
        }
    }
}

TEST_CASE("half construction") {
    CHECK(half_block(1) == IndexSequence{1});
    CHECK(half_block(2) == IndexSequence{1, 2});
    CHECK(half_block(3) == IndexSequence{1, 2, 1, 3});
    CHECK(half_block(4) == IndexSequence{1, 2, 1, 3, 1, 2, 1, 4});
    for (int n = 1; n <= 16; ++n) {
        const IndexSequence h = half_block(n);
        REQUIRE(h.size() == std::size_t{1} << (n - 1));
        CHECK(h.back() == n);
        CHECK(h == ruler_stream(h.size()));
    }
    CHECK_THROWS_AS(half_block(0), std::domain_error);
}

TEST_CASE("Thomae restriction and its shift") {
    CHECK(thomae_exponents(1) == std::vector<int>{-1});
    CHECK(thomae_exponent_sequence(1) == IndexSequence{1});
    // published listing for n = 4
    const std::vector<int> raw{-4, -3, -4, -2, -4, -3, -4, -1, -4, -3, -4, -2, -4, -3, -4};
    CHECK(thomae_exponents(4) == raw);
    CHECK(thomae_exponent_sequence(4) ==
          IndexSequence{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1});
    for (int n = 1; n <= 14; ++n)
        REQUIRE(thomae_exponent_sequence(n) == ruler_block(n));

    const auto points = dyadic_rationals(3);
    REQUIRE(points.size() == 7);
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(points[i].odd_numerator % 2 == 1);
        if (i > 0) {
            const auto &a = points[i - 1], &b = points[i];
            // strictly increasing values a.p/2^a.k < b.p/2^b.k
            CHECK(a.odd_numerator * (1u << (3 - a.exponent)) <
                  b.odd_numerator * (1u << (3 - b.exponent)));
        }
    }
}

TEST_CASE("block stats: sums, length, ratio") {
    CHECK(block_term_sum(1) == 1);
    CHECK(block_term_sum(2) == 4);
    CHECK(block_term_sum(3) == 11);
    const BlockStats st = block_stats(3);
    CHECK(st.length == 7);
    CHECK(st.max_term == 3);
    CHECK(st.ratio == 3.0 / 7.0);
    // recurrence vs direct summation up to the block cap
    for (int n = 1; n <= 24; ++n) {
        const IndexSequence b = ruler_block(n);
        const std::int64_t direct = std::accumulate(b.begin(), b.end(), std::int64_t{0});
        REQUIRE(direct == block_term_sum(n));
    }
    // unrolled expansion vs recurrence across the full sum cap
    for (int n = 1; n <= kMaxSumOrder; ++n)
        REQUIRE(block_term_sum(n) == block_term_sum_expanded(n));
    CHECK(block_term_sum(56) == (std::int64_t{1} << 57) - 58); // closed form 2^(n+1) - (n+2)
    CHECK_THROWS_AS(block_stats(57), std::domain_error);
    CHECK_THROWS_AS(block_stats(0), std::domain_error);
}

TEST_CASE("frequency counts are the exact geometric law") {
    const auto c1 = frequency_counts(1);
    CHECK(c1.size() == 1);
    CHECK(c1.at(1) == 1);
    const auto c3 = frequency_counts(3);
    CHECK(c3.at(1) == 4);
    CHECK(c3.at(2) == 2);
    CHECK(c3.at(3) == 1);
    // brute-force tally over the materialized block
    for (int n = 1; n <= 12; ++n) {
        std::map<int, std::int64_t> tally;
        for (int t : ruler_block(n))
            ++tally[t];
        REQUIRE(tally == frequency_counts(n));
    }
    CHECK(frequency_counts(10).at(1) == 512);
    for (int n = 1; n <= 20; ++n) {
        const auto counts = frequency_counts(n);
        double freq_sum = 0.0;
        for (int k = 1; k <= n; ++k) {
            REQUIRE(counts.at(k) == std::int64_t{1} << (n - k));
            freq_sum += std::ldexp(1.0, -k);
        }
        CHECK(freq_sum + std::ldexp(1.0, -n) == 1.0); // exact in binary
    }
}

TEST_CASE("square detection") {
    CHECK(is_squarefree(IndexSequence{1, 2, 1}));
    CHECK(find_square(IndexSequence{}) == std::nullopt);
    CHECK(find_square(IndexSequence{5}) == std::nullopt);

    const auto planted = find_square(IndexSequence{1, 2, 1, 2});
    REQUIRE(planted.has_value());
    CHECK(planted->start == 0);
    CHECK(planted->block_length == 2);

    const auto twin = find_square(IndexSequence{3, 7, 7, 1});
    REQUIRE(twin.has_value());
    CHECK(twin->start == 1);
    CHECK(twin->block_length == 1);

    // agree with the naive cubic scan on random small sequences
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> val(1, 3), len(2, 40);
    for (int t = 0; t < 400; ++t) {
        IndexSequence s(len(rng));
        for (int& x : s)
            x = val(rng);
        const auto fast = find_square(s);
        const auto slow = naive_square(s);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->start == slow->start);
            CHECK(fast->block_length == slow->block_length);
        }
    }
}

TEST_CASE("ruler prefix is squarefree at the scan budget") {
    const SquarefreeScan scan = check_squarefree(kMaxSquarefreeLength);
    CHECK(scan.squarefree);
    CHECK_FALSE(scan.violation.has_value());
    CHECK_THROWS_AS(check_squarefree(kMaxSquarefreeLength + 1), std::domain_error);
}

TEST_CASE("dropping 1s and decrementing reproduces the previous block") {
    for (int n = 2; n <= 16; ++n)
        REQUIRE(collapse_ones(ruler_block(n)) == ruler_block(n - 1));
}

TEST_CASE("delete-first-occurrence diagnostic reports, does not assert") {
    const auto rep = delete_first_occurrences(IndexSequence{1, 2, 1, 3, 1, 2, 1});
    CHECK(rep.result == IndexSequence{1, 1, 2, 1});
    CHECK_FALSE(rep.equals_ruler_prefix); // the claim fails on finite prefixes
}
