#include "rulerlab/demography.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rulerlab {

namespace {

void require_step(int n, int cap, const char* what) {
    if (n < 1 || n > cap)
        throw std::domain_error(std::string(what) + ": step " + std::to_string(n) +
                                " outside [1, " + std::to_string(cap) + "]");
}

AgeCensus finish(int n, std::vector<std::int64_t> counts, bool limit_shares) {
    AgeCensus c;
    c.step = n;
    c.counts = std::move(counts);
    c.total = std::accumulate(c.counts.begin(), c.counts.end(), std::int64_t{0});
    c.proportions.reserve(c.counts.size());
    for (std::int64_t count : c.counts) {
        const double denom =
            limit_shares ? std::ldexp(1.0, n) : static_cast<double>(c.total);
        c.proportions.push_back(c.total > 0 ? count / denom : 0.0);
    }
    return c;
}

} // namespace

std::int64_t population_linear(int n) {
    require_step(n, kMaxPopulationStep, "population_linear");
    std::int64_t a = 1, b = 3; // N(1), N(2)
    if (n == 1)
        return a;
    for (int k = 2; k < n; ++k) {
        const std::int64_t next = 3 * b - 2 * a;
        a = b;
        b = next;
    }
    return b;
}

std::int64_t population_duplication(int n) {
    require_step(n, kMaxPopulationStep, "population_duplication");
    std::int64_t a = 1, b = 3;
    if (n == 1)
        return a;
    for (int k = 2; k < n; ++k) {
        const std::int64_t next = 2 * (b - a) + b;
        a = b;
        b = next;
    }
    return b;
}

std::int64_t hanoi_moves(int n) {
    require_step(n, kMaxPopulationStep, "hanoi_moves");
    std::int64_t m = 1;
    for (int k = 1; k < n; ++k)
        m = 2 * m + 1;
    return m;
}

std::int64_t newborns(int n) {
    require_step(n, kMaxPopulationStep, "newborns");
    return std::int64_t{1} << n;
}

std::int64_t population_with_death(int n) {
    require_step(n, kMaxPopulationStep, "population_with_death");
    if (n <= 2)
        return (std::int64_t{1} << n) - 1;
    return 7 * (std::int64_t{1} << (n - 3));
}

AgeCensus census(int n) {
    require_step(n, kMaxCensusStep, "census");
    std::vector<std::int64_t> counts(n);
    for (int k = 1; k <= n; ++k)
        counts[k - 1] = std::int64_t{1} << (n - k);
    return finish(n, std::move(counts), true);
}

AgeCensus census_simulated(int n) {
    require_step(n, kMaxCensusStep, "census_simulated");
    std::vector<std::int64_t> counts{1}; // step 1: one newborn
    for (int s = 2; s <= n; ++s) {
        const std::int64_t births = 2 * counts[0];
        counts.insert(counts.begin(), births);
    }
    return finish(n, std::move(counts), true);
}

AgeCensus census_with_death(int n, int lifespan) {
    require_step(n, kMaxPopulationStep, "census_with_death");
    if (lifespan < 1)
        throw std::domain_error("census_with_death: lifespan must be >= 1");
    std::vector<std::int64_t> counts{1};
    for (int s = 2; s <= n; ++s) {
        const std::int64_t births = 2 * counts[0];
        counts.insert(counts.begin(), births); // existing entries shift one age up
        if (static_cast<int>(counts.size()) > lifespan)
            counts.resize(lifespan); // deaths applied at the end of the step
    }
    return finish(n, std::move(counts), false);
}

} // namespace rulerlab
