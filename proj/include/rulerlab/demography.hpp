#pragma once

#include <cstdint>
#include <vector>

namespace rulerlab {

inline constexpr int kMaxPopulationStep = 62;
inline constexpr int kMaxCensusStep = 24;

// Population counts per age class at one step; counts[k-1] holds age k.
// For the immortal model proportions are the exact limit shares
// count / 2^n = 2^-k; the mortal model reports shares of the live total.
struct AgeCensus {
    int step = 0;
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
    std::vector<double> proportions;
};

// Horadam form N(n+2) = 3 N(n+1) - 2 N(n), N(1) = 1, N(2) = 3.
std::int64_t population_linear(int n);

// Duplication form N(n+2) = 2 (N(n+1) - N(n)) + N(n), same seeds.
std::int64_t population_duplication(int n);

// Tower-of-Hanoi move count N(n+1) = 2 N(n) + 1, N(1) = 1.
std::int64_t hanoi_moves(int n);

// Individuals born entering step n + 1: N(n+1) - N(n) = 2^n.
std::int64_t newborns(int n);

// Mortal model (lifespan 3): 2^n - 1 for n = 1, 2; 7 * 2^(n-3) for n >= 3.
std::int64_t population_with_death(int n);

// Closed-form census of the immortal model: counts[k] = 2^(n-k).
AgeCensus census(int n);

// Same census via step-by-step aging/birth bookkeeping.
AgeCensus census_simulated(int n);

// Mortal model simulation: individuals reproduce once, the step after
// birth; everyone ages; then ages beyond `lifespan` are removed.
AgeCensus census_with_death(int n, int lifespan = 3);

} // namespace rulerlab
