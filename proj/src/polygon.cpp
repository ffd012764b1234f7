#include "rulerlab/polygon.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace rulerlab {

namespace {

void require_generation(int n, const char* what) {
    if (n < 1 || n > kMaxPolygonGeneration)
        throw std::domain_error(std::string(what) + ": generation outside [1, 20]");
}

} // namespace

int vertex_index(const VertexFraction& v) {
    if (v.k == 0)
        return v.generation; // southernmost: present since the first generation
    return std::countr_zero(v.k) + 1;
}

PolygonGeneration generation(int n) {
    require_generation(n, "polygon generation");
    PolygonGeneration g;
    g.n = n;
    const std::uint32_t count = (std::uint32_t{1} << n) - 1;
    g.vertices.reserve(count);
    for (std::uint32_t k = 1; k <= count; ++k)
        g.vertices.push_back({k, n});
    return g;
}

IndexSequence vertex_index_sequence_valuation(const PolygonGeneration& g) {
    IndexSequence out;
    out.reserve(g.vertices.size());
    for (const VertexFraction& v : g.vertices)
        out.push_back(vertex_index(v));
    return out;
}

IndexSequence vertex_index_sequence_membership(const PolygonGeneration& g) {
    IndexSequence out;
    out.reserve(g.vertices.size());
    for (const VertexFraction& v : g.vertices) {
        int members = 0;
        for (int m = 1; m <= g.n; ++m) {
            const std::uint32_t spacing = std::uint32_t{1} << (g.n - m);
            if (v.k % spacing == 0)
                ++members; // vertex sits on the 2^m-gon's lattice
        }
        out.push_back(members);
    }
    return out;
}

IndexSequence vertex_index_sequence(const PolygonGeneration& g) {
    IndexSequence by_valuation = vertex_index_sequence_valuation(g);
    if (by_valuation != vertex_index_sequence_membership(g))
        throw std::logic_error("vertex_index_sequence: valuation and membership routes disagree");
    return by_valuation;
}

JitteredPolygon jittered_generation(int n, std::uint64_t rng_seed) {
    require_generation(n, "jittered_generation");
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> dist(0.05, 0.95);

    // Angle fractions clockwise from the south anchor; anchor itself is the
    // implicit 0/1 wrap-around arc endpoint.
    struct V {
        double angle;
        int birth;
    };
    std::vector<V> vs; // generation 1: the single non-anchor vertex
    vs.push_back({dist(rng), 1});
    for (int s = 2; s <= n; ++s) {
        std::vector<V> next;
        next.reserve(2 * vs.size() + 1);
        double left = 0.0;
        for (const V& v : vs) {
            next.push_back({left + dist(rng) * (v.angle - left), s});
            next.push_back(v);
            left = v.angle;
        }
        next.push_back({left + dist(rng) * (1.0 - left), s});
        for (std::size_t i = 1; i < next.size(); ++i)
            if (!(next[i - 1].angle < next[i].angle))
                throw std::runtime_error("jittered polygon: angles collided");
        vs = std::move(next);
    }
    JitteredPolygon out;
    out.angle_fractions.reserve(vs.size());
    out.indices.reserve(vs.size());
    for (const V& v : vs) {
        out.angle_fractions.push_back(v.angle);
        out.indices.push_back(n - v.birth + 1);
    }
    return out;
}

IndexSequence jittered_vertex_index_sequence(int n, std::uint64_t rng_seed) {
    return jittered_generation(n, rng_seed).indices;
}

} // namespace rulerlab
