#pragma once

#include <cstdint>

#include "rulerlab/ruler.hpp"

namespace rulerlab {

inline constexpr int kMaxPolygonGeneration = 20;

// Vertex of the 2^n-gon at angle fraction k/2^n, measured clockwise from the
// southernmost vertex (k = 0).
struct VertexFraction {
    std::uint32_t k = 0;
    int generation = 1; // n
};

// Number of nested 2^m-gons (m <= n) containing the vertex: v2(k) + 1 for
// k != 0, n for the southernmost vertex.
int vertex_index(const VertexFraction& v);

// The 2^n-gon's vertices k = 1 .. 2^n - 1 in traversal order (southernmost
// excluded), so the index sequence lines up with the ruler block.
struct PolygonGeneration {
    int n = 1;
    std::vector<VertexFraction> vertices;
};

PolygonGeneration generation(int n);

// Valuation route, v2(k) + 1 per vertex.
IndexSequence vertex_index_sequence_valuation(const PolygonGeneration& g);

// Membership route: count of m <= n with 2^(n-m) dividing k, by exact
// integer divisibility.
IndexSequence vertex_index_sequence_membership(const PolygonGeneration& g);

// Both routes; throws std::logic_error if they disagree.
IndexSequence vertex_index_sequence(const PolygonGeneration& g);

// Ordinal variant: grow the polygon by inserting one vertex at a random
// interior angle of every arc and track insertion generations. Placement
// independence check for the index sequence.
struct JitteredPolygon {
    std::vector<double> angle_fractions; // clockwise from the south anchor, in (0, 1)
    IndexSequence indices;
};

JitteredPolygon jittered_generation(int n, std::uint64_t rng_seed);

IndexSequence jittered_vertex_index_sequence(int n, std::uint64_t rng_seed);

} // namespace rulerlab
