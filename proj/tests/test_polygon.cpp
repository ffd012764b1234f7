#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rulerlab/polygon.hpp"

using namespace rulerlab;

TEST_CASE("vertex indices from the valuation") {
    CHECK(vertex_index({8, 4}) == 4);  // northernmost k = 2^(n-1)
    CHECK(vertex_index({0, 4}) == 4);  // southernmost belongs to every generation
    CHECK(vertex_index({5, 4}) == 1);  // odd k: newest generation
    CHECK(vertex_index({6, 4}) == 2);
    CHECK(vertex_index({12, 4}) == 3);
}

TEST_CASE("generation layout") {
    const PolygonGeneration g = generation(4);
    REQUIRE(g.vertices.size() == 15);
    CHECK(g.vertices.front().k == 1);
    CHECK(g.vertices.back().k == 15);
    CHECK(vertex_index_sequence(g) ==
          IndexSequence{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1});
    CHECK_THROWS_AS(generation(0), std::domain_error);
    CHECK_THROWS_AS(generation(21), std::domain_error);
}

TEST_CASE("valuation route equals membership route equals block") {
    CHECK(vertex_index_sequence(generation(1)) == IndexSequence{1});
    CHECK(vertex_index_sequence(generation(3)) == IndexSequence{1, 2, 1, 3, 1, 2, 1});
    for (int n = 1; n <= 14; ++n) {
        const PolygonGeneration g = generation(n);
        const IndexSequence by_val = vertex_index_sequence_valuation(g);
        REQUIRE(by_val == vertex_index_sequence_membership(g));
        REQUIRE(by_val == ruler_block(n));
    }
}

TEST_CASE("index is ordinal: jittered angles give the same sequence") {
    for (std::uint64_t seed : {1ull, 17ull, 987654321ull})
        for (int n = 1; n <= 12; ++n)
            REQUIRE(jittered_vertex_index_sequence(n, seed) == ruler_block(n));
    const JitteredPolygon jp = jittered_generation(8, 5);
    REQUIRE(jp.angle_fractions.size() == jp.indices.size());
    for (std::size_t i = 1; i < jp.angle_fractions.size(); ++i)
        REQUIRE(jp.angle_fractions[i - 1] < jp.angle_fractions[i]);
}
