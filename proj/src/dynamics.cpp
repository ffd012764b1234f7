#include "rulerlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rulerlab {

namespace {

double logistic(double r, double x) {
    return r * x * (1.0 - x);
}

// f^(2^n)(1/2) - 1/2; zero exactly at parameters where the critical point
// is periodic with period dividing 2^n.
double critical_residual(double r, int n) {
    double x = 0.5;
    const std::uint64_t reps = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < reps; ++i)
        x = logistic(r, x);
    return x - 0.5;
}

double bisect_residual(double lo, double hi, int n, const CascadeConfig& cfg) {
    double flo = critical_residual(lo, n);
    double fhi = critical_residual(hi, n);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo < 0.0) == (fhi < 0.0)) {
        std::ostringstream msg;
        msg << "superstable_r: no sign change in bracket for n=" << n << " [" << lo << ", " << hi
            << "], residuals " << flo << " / " << fhi;
        throw std::runtime_error(msg.str());
    }
    for (int it = 0; it < cfg.max_bisect_iterations && hi - lo > cfg.root_tolerance; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = critical_residual(mid, n);
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> iterate(const LogisticParams& params, int steps) {
    if (params.r < 1.0 || params.r > 4.0)
        throw std::domain_error("iterate: growth rate outside [1, 4]");
    if (!(params.x0 > 0.0) || !(params.x0 < 1.0))
        throw std::domain_error("iterate: initial condition outside (0, 1)");
    if (steps < 1)
        throw std::domain_error("iterate: steps must be >= 1");
    std::vector<double> xs;
    xs.reserve(steps);
    double x = params.x0;
    for (int i = 0; i < steps; ++i) {
        xs.push_back(x);
        x = logistic(params.r, x);
        if (!std::isfinite(x))
            throw std::runtime_error("iterate: trajectory left the unit interval");
    }
    return xs;
}

std::vector<double> superstable_sequence(int max_n, const CascadeConfig& cfg) {
    if (max_n < 0 || max_n > kMaxSuperstableOrder)
        throw std::domain_error("superstable_sequence: n outside [0, 7]");
    std::vector<double> rs;
    for (int n = 0; n <= max_n; ++n) {
        if (n == 0) {
            // F is linear here (r/4 - 1/2); the bracket midpoint lands on 2.
            rs.push_back(bisect_residual(1.5, 2.5, 0, cfg));
        } else if (n == 1) {
            rs.push_back(bisect_residual(2.5, 3.5, 1, cfg));
        } else {
            // Seed the bracket from the previous gap, shrunk by the measured
            // ratio (4.669 before two gaps exist). The window must stay left
            // of the accumulation point, where the only remaining zero of
            // the residual is the wanted superstable parameter.
            const double prev_gap = rs[n - 1] - rs[n - 2];
            const double ratio = n == 2 ? 4.669 : (rs[n - 2] - rs[n - 3]) / prev_gap;
            const double gap = prev_gap / ratio;
            rs.push_back(bisect_residual(rs[n - 1] + 0.6 * gap, rs[n - 1] + 1.1 * gap, n, cfg));
        }
    }
    return rs;
}

double superstable_r(int n, const CascadeConfig& cfg) {
    return superstable_sequence(n, cfg).back();
}

Orbit stationary_orbit(double r, int max_period, const CascadeConfig& cfg) {
    if (max_period < 1)
        throw std::domain_error("stationary_orbit: max_period must be >= 1");
    double x = 0.5;
    for (int i = 0; i < cfg.transient_steps; ++i)
        x = logistic(r, x);
    const int window = 4 * max_period;
    std::vector<double> w;
    w.reserve(window);
    for (int i = 0; i < window; ++i) {
        w.push_back(x);
        x = logistic(r, x);
    }
    for (int p = 1; p <= max_period; ++p) {
        bool periodic = true;
        for (int i = 0; i + p < window; ++i) {
            if (std::abs(w[i + p] - w[i]) >= cfg.period_tolerance) {
                periodic = false;
                break;
            }
        }
        if (!periodic)
            continue;
        Orbit orbit;
        orbit.r = r;
        orbit.period = p;
        int start = 0;
        for (int i = 1; i < p; ++i)
            if (std::abs(w[i] - 0.5) < std::abs(w[start] - 0.5))
                start = i;
        orbit.points.assign(w.begin() + start, w.begin() + start + p);
        return orbit;
    }
    std::ostringstream msg;
    msg << "stationary_orbit: no period <= " << max_period << " detected at r=" << r;
    throw std::runtime_error(msg.str());
}

VisibilityPattern forward_visibility(const std::vector<double>& series,
                                     std::size_t window_begin, std::size_t window_end) {
    if (window_end > series.size() || window_begin > window_end)
        throw std::domain_error("forward_visibility: window outside the series");
    VisibilityPattern pattern;
    pattern.degrees.reserve(window_end - window_begin);
    for (std::size_t i = window_begin; i < window_end; ++i) {
        const double xi = series[i];
        double blocker = -std::numeric_limits<double>::infinity();
        int degree = 0;
        bool terminated = false;
        for (std::size_t j = i + 1; j < series.size(); ++j) {
            const double xj = series[j];
            if (blocker < xj && blocker < xi)
                ++degree;
            if (xj >= xi) {
                // any later partner is blocked by this value, so the count
                // can no longer change under extension of the series
                terminated = true;
                break;
            }
            blocker = std::max(blocker, xj);
        }
        if (!terminated)
            throw std::runtime_error(
                "forward_visibility: window too close to the series end (no future value >= "
                "window point)");
        pattern.degrees.push_back(degree);
    }
    return pattern;
}

VisibilityPattern orbit_visibility_pattern(const Orbit& orbit) {
    if (orbit.period < 1 || orbit.points.empty())
        throw std::domain_error("orbit_visibility_pattern: empty orbit");
    const auto tiled = [&](int copies) {
        std::vector<double> s;
        s.reserve(copies * orbit.points.size());
        for (int c = 0; c < copies; ++c)
            s.insert(s.end(), orbit.points.begin(), orbit.points.end());
        return s;
    };
    const std::size_t p = orbit.points.size();
    VisibilityPattern pattern = forward_visibility(tiled(4), p, 2 * p);
    if (pattern.degrees != forward_visibility(tiled(5), p, 2 * p).degrees)
        throw std::runtime_error("orbit_visibility_pattern: pattern not stabilized");
    return pattern;
}

VisibilityPattern pattern_recurrence(int n) {
    if (n < 1)
        throw std::domain_error("pattern_recurrence: n must be >= 1");
    // P_n = [2(n+1), 2] then P_1 .. P_{n-1} concatenated.
    std::vector<std::vector<int>> memo;
    for (int m = 1; m <= n; ++m) {
        std::vector<int> pm{2 * (m + 1), 2};
        for (int k = 1; k < m; ++k)
            pm.insert(pm.end(), memo[k - 1].begin(), memo[k - 1].end());
        memo.push_back(std::move(pm));
    }
    return {memo.back()};
}

std::vector<double> delta_estimates(const std::vector<double>& superstable_values) {
    if (superstable_values.size() < 3)
        throw std::domain_error("delta_estimates: need at least 3 values");
    std::vector<double> deltas;
    for (std::size_t n = 2; n < superstable_values.size(); ++n)
        deltas.push_back((superstable_values[n - 1] - superstable_values[n - 2]) /
                         (superstable_values[n] - superstable_values[n - 1]));
    return deltas;
}

double feigenbaum_accumulation(const std::vector<double>& superstable_values) {
    if (superstable_values.size() < 4)
        throw std::domain_error("feigenbaum_accumulation: need at least 4 values");
    for (std::size_t i = 1; i < superstable_values.size(); ++i)
        if (!(superstable_values[i] > superstable_values[i - 1]))
            throw std::domain_error("feigenbaum_accumulation: values must be strictly increasing");
    const auto& rs = superstable_values;
    const std::size_t n = rs.size() - 1;
    const double gap = rs[n] - rs[n - 1];
    const double delta = (rs[n - 1] - rs[n - 2]) / gap;
    if (!(delta > 1.0))
        throw std::domain_error("feigenbaum_accumulation: gaps are not contracting");
    return rs[n] + gap / (delta - 1.0);
}

PatternComparison compare_pattern(int n, const CascadeConfig& cfg) {
    if (n < 1 || n > kMaxSuperstableOrder)
        throw std::domain_error("compare_pattern: n outside [1, 7]");
    PatternComparison cmp;
    cmp.n = n;
    cmp.period = 1 << n;
    const Orbit orbit = stationary_orbit(superstable_r(n, cfg), cmp.period, cfg);
    cmp.measured = orbit_visibility_pattern(orbit).degrees;

    const auto rotate_from = [&](std::size_t s) {
        std::vector<int> out(cmp.measured.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = cmp.measured[(s + i) % cmp.measured.size()];
        return out;
    };
    const std::size_t max_at =
        std::max_element(cmp.measured.begin(), cmp.measured.end()) - cmp.measured.begin();
    cmp.rotated_after_max = rotate_from(max_at + 1);
    cmp.ruler_prefix = half_block(n + 1); // first 2^n ruler terms
    cmp.literal_recurrence = pattern_recurrence(n).degrees;

    std::vector<int> doubled_from_max = rotate_from(max_at);
    for (int& d : doubled_from_max)
        d *= 2;
    std::vector<int> doubled_ruler = cmp.ruler_prefix;
    for (int& d : doubled_ruler)
        d *= 2;

    cmp.matches_ruler_prefix = cmp.rotated_after_max == cmp.ruler_prefix;
    cmp.literal_is_doubled_rotation = cmp.literal_recurrence == doubled_from_max;
    cmp.measured_is_doubled_ruler = cmp.measured == doubled_ruler;
    return cmp;
}

} // namespace rulerlab
