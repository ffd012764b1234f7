#include "rulerlab/automaton.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rulerlab {

namespace {

// Position for the child dropped into the gap (lo, hi), either side possibly
// an infinite ambient bound. `unit` in (0,1) picks the interior spot.
double place_in_gap(double lo, double hi, double unit) {
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    if (lo_inf && hi_inf)
        throw std::logic_error("automaton: gap with two infinite ends");
    if (lo_inf)
        return hi - 0.5 - unit; // parent - 1 at the midpoint setting (unit = 1/2)
    if (hi_inf)
        return lo + 0.5 + unit;
    return lo + unit * (hi - lo);
}

Partition step_impl(const Partition& p, std::mt19937_64* rng) {
    if (p.step < 1 || p.points.empty())
        throw std::domain_error("automaton step: partition not initialized");
    if (p.step + 1 > kMaxAutomatonSteps)
        throw std::domain_error("automaton step: step cap exceeded");

    std::uniform_real_distribution<double> dist(0.05, 0.95);
    const auto unit = [&] { return rng ? dist(*rng) : 0.5; };

    // With ages alternating 1, >1, 1, ... every gap (bounds included) is
    // adjacent to exactly one age-1 point, so each gap receives one child.
    Partition next;
    next.step = p.step + 1;
    next.ambient = p.ambient;
    next.points.reserve(2 * p.points.size() + 1);
    double left = p.ambient.lo;
    for (const PartitionPoint& q : p.points) {
        next.points.push_back({place_in_gap(left, q.position, unit()), next.step});
        next.points.push_back(q);
        left = q.position;
    }
    next.points.push_back({place_in_gap(left, p.ambient.hi, unit()), next.step});

    for (std::size_t i = 1; i < next.points.size(); ++i)
        if (!(next.points[i - 1].position < next.points[i].position))
            throw std::runtime_error("automaton step: positions collided at machine precision");
    return next;
}

} // namespace

Partition init(Interval ambient, double seed_point) {
    if (!(ambient.lo < ambient.hi))
        throw std::domain_error("automaton init: empty ambient interval");
    if (!(seed_point > ambient.lo) || !(seed_point < ambient.hi))
        throw std::domain_error("automaton init: seed point must be strictly interior");
    if (!std::isfinite(seed_point))
        throw std::domain_error("automaton init: seed point must be finite");
    Partition p;
    p.step = 1;
    p.ambient = ambient;
    p.points = {{seed_point, 1}};
    return p;
}

Partition step(const Partition& p) {
    return step_impl(p, nullptr);
}

Partition step(const Partition& p, std::mt19937_64& rng) {
    return step_impl(p, &rng);
}

IndexSequence age_sequence(const Partition& p) {
    IndexSequence ages;
    ages.reserve(p.points.size());
    for (const PartitionPoint& q : p.points)
        ages.push_back(age_of(p, q));
    return ages;
}

Partition run(Interval ambient, double seed_point, int steps) {
    if (steps < 1 || steps > kMaxAutomatonSteps)
        throw std::domain_error("automaton run: steps outside [1, 24]");
    Partition p = init(ambient, seed_point);
    while (p.step < steps)
        p = step(p);
    return p;
}

Partition run_jittered(Interval ambient, double seed_point, int steps, std::uint64_t rng_seed) {
    if (steps < 1 || steps > kMaxAutomatonSteps)
        throw std::domain_error("automaton run: steps outside [1, 24]");
    std::mt19937_64 rng(rng_seed);
    Partition p = init(ambient, seed_point);
    while (p.step < steps)
        p = step(p, rng);
    return p;
}

} // namespace rulerlab
