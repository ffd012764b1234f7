#pragma once

#include <cstdint>

#include "rulerlab/report.hpp"

namespace rulerlab {

inline constexpr int kMaxVerifyOrder = 16;

// Cross-oracle identity suite over all modules. max_n bounds the block
// orders exercised (1..16); the seed drives the jittered placement modes
// and the sampled property checks. The returned report carries one verdict
// per identity plus non-asserted REPORT notes for the observational claims.
Report run_verification(int max_n, std::uint64_t seed);

// True iff every verdict passed.
bool all_passed(const Report& report);

} // namespace rulerlab
