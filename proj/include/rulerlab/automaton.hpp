#pragma once

#include <random>
#include <vector>

#include "rulerlab/ruler.hpp"

namespace rulerlab {

inline constexpr int kMaxAutomatonSteps = 24;

// Ambient interval; lo/hi may be -inf/+inf.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

struct PartitionPoint {
    double position = 0.0;
    int birth_step = 1;
};

// Ordered partition after `step` duplication rounds. Points born at the
// current step have age 1; the age sequence read left to right is the
// ruler block of the same order.
struct Partition {
    int step = 0;
    Interval ambient;
    std::vector<PartitionPoint> points;
};

inline int age_of(const Partition& p, const PartitionPoint& q) {
    return p.step - q.birth_step + 1;
}

// Step-1 partition holding a single interior point.
Partition init(Interval ambient, double seed_point);

// One duplication round: every age-1 point spawns a neighbor on each side,
// placed at the midpoint of the adjacent gap (parent +- 1 toward an
// infinite bound). Older points survive with age incremented.
Partition step(const Partition& p);

// Same round with the new points placed at a random interior position of
// their gap. Only the ordering matters for the index sequence.
Partition step(const Partition& p, std::mt19937_64& rng);

IndexSequence age_sequence(const Partition& p);

Partition run(Interval ambient, double seed_point, int steps);
Partition run_jittered(Interval ambient, double seed_point, int steps, std::uint64_t rng_seed);

} // namespace rulerlab
