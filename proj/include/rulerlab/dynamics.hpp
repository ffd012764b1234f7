#pragma once

#include <cstdint>
#include <vector>

#include "rulerlab/ruler.hpp"

namespace rulerlab {

inline constexpr int kMaxSuperstableOrder = 7; // period 2^7

struct LogisticParams {
    double r = 2.0;  // growth rate in [1, 4]
    double x0 = 0.5; // initial condition in (0, 1)
};

// Tunables of the cascade searches. Explicit so runs are reproducible.
struct CascadeConfig {
    int transient_steps = 10000;     // discarded before period detection
    double period_tolerance = 1e-9;  // |x(t+p) - x(t)| bound over the window
    double root_tolerance = 1e-12;   // bisection bracket width
    int max_bisect_iterations = 200;
};

// One period of a stationary cycle, in temporal order starting from the
// point nearest 1/2.
struct Orbit {
    double r = 0.0;
    int period = 0;
    std::vector<double> points;
};

// Forward horizontal visibility counts, one per window point.
struct VisibilityPattern {
    std::vector<int> degrees;
};

// Trajectory x0, x1, ..., of the given length under x -> r x (1 - x).
std::vector<double> iterate(const LogisticParams& params, int steps);

// Parameter of the superstable period-2^n cycle (the cycle through 1/2),
// by bisection on f^(2^n)(1/2) - 1/2 inside brackets seeded from the
// previous superstable value.
double superstable_r(int n, const CascadeConfig& cfg = {});

// Superstable parameters for n = 0 .. max_n.
std::vector<double> superstable_sequence(int max_n, const CascadeConfig& cfg = {});

// Detect the minimal period <= max_period after discarding the transient.
Orbit stationary_orbit(double r, int max_period, const CascadeConfig& cfg = {});

// Degree of point i: the number of j > i with every intermediate value
// strictly below min(x_i, x_j). Every window point must have a future
// value >= it inside the series, otherwise the count could still grow
// under extension and a runtime error is thrown.
VisibilityPattern forward_visibility(const std::vector<double>& series,
                                     std::size_t window_begin, std::size_t window_end);

// Pattern of one interior period (series tiled 4x, window = second period),
// re-checked against a 5x tiling for stabilization.
VisibilityPattern orbit_visibility_pattern(const Orbit& orbit);

// The literal reading of the published recurrence
//   P_n = 2(n+1) {2} P_1 P_2 ... P_{n-1}
// for comparison against measured patterns.
VisibilityPattern pattern_recurrence(int n);

// Gap-ratio estimates delta_n = (r_{n-1} - r_{n-2}) / (r_n - r_{n-1}),
// one per n >= 2.
std::vector<double> delta_estimates(const std::vector<double>& superstable_values);

// Accumulation point via geometric acceleration of the last three values:
// r_inf ~ r_n + (r_n - r_{n-1}) / (delta_n - 1). Needs >= 4 strictly
// increasing values.
double feigenbaum_accumulation(const std::vector<double>& superstable_values);

// Machine-checked comparison of a measured pattern against the published
// claims. Rotations are cyclic shifts of the one-period pattern.
struct PatternComparison {
    int n = 0;
    int period = 0;
    std::vector<int> measured;           // temporal order from the point nearest 1/2
    std::vector<int> rotated_after_max;  // cyclic, starting just after the max degree
    std::vector<int> ruler_prefix;       // first 2^n ruler terms
    std::vector<int> literal_recurrence; // pattern_recurrence(n)
    bool matches_ruler_prefix = false;   // rotated_after_max == ruler_prefix
    bool literal_is_doubled_rotation = false; // literal == 2 * (cyclic from max)
    bool measured_is_doubled_ruler = false;   // measured == 2 * ruler_prefix
};

PatternComparison compare_pattern(int n, const CascadeConfig& cfg = {});

} // namespace rulerlab
