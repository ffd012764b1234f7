#include "rulerlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rulerlab/automaton.hpp"
#include "rulerlab/cantor.hpp"
#include "rulerlab/demography.hpp"
#include "rulerlab/dynamics.hpp"
#include "rulerlab/polygon.hpp"
#include "rulerlab/ruler.hpp"

namespace rulerlab {

namespace {

class Suite {
  public:
    explicit Suite(Report& report) : report_(report) {}

    template <class Fn>
    void check(const std::string& identity, Fn&& fn) {
        Verdict v;
        v.identity = identity;
        try {
            std::string detail;
            v.pass = fn(detail);
            v.detail = detail;
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        report_.verdicts.push_back(std::move(v));
    }

  private:
    Report& report_;
};

std::string join(const std::vector<int>& xs, std::size_t limit = 40) {
    std::string out;
    for (std::size_t i = 0; i < xs.size() && i < limit; ++i) {
        if (i)
            out += ' ';
        out += std::to_string(xs[i]);
    }
    if (xs.size() > limit)
        out += " ...";
    return out;
}

// Independent O(L^2) forward-visibility count: every candidate partner is
// examined, no early termination shortcut.
std::vector<int> visibility_oracle(const std::vector<double>& series, std::size_t begin,
                                   std::size_t end) {
    std::vector<int> degrees;
    for (std::size_t i = begin; i < end; ++i) {
        int d = 0;
        double running_max = -std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < series.size(); ++j) {
            if (running_max < std::min(series[i], series[j]))
                ++d;
            running_max = std::max(running_max, series[j]);
        }
        degrees.push_back(d);
    }
    return degrees;
}

} // namespace

Report run_verification(int max_n, std::uint64_t seed) {
    if (max_n < 1 || max_n > kMaxVerifyOrder)
        throw std::domain_error("run_verification: max_n outside [1, 16]");
    Report report;
    report.config.emplace_back("max_n", std::to_string(max_n));
    report.config.emplace_back("seed", std::to_string(seed));
    Suite suite(report);
    std::mt19937_64 rng(seed);

    const int census_n = std::min(max_n, kMaxCensusStep);
    std::vector<IndexSequence> blocks(max_n + 1);
    for (int n = 1; n <= max_n; ++n)
        blocks[n] = ruler_block(n);

    suite.check("a(n): bit route = recursive route, n <= 2^16 and 10^4 sampled up to 2^62",
                [&](std::string&) {
                    for (std::uint64_t i = 1; i <= (1u << 16); ++i)
                        if (ruler_term(i) != ruler_term_recursive(i))
                            return false;
                    std::uniform_int_distribution<std::uint64_t> dist(1, kMaxPosition);
                    for (int i = 0; i < 10000; ++i) {
                        const std::uint64_t p = dist(rng);
                        if (ruler_term(p) != ruler_term_recursive(p))
                            return false;
                    }
                    return true;
                });

    suite.check("self-similarity: a(2n) = a(n) + 1 and a(2n-1) = 1, n <= 2^16", [&](std::string&) {
        for (std::uint64_t i = 1; i <= (1u << 16); ++i)
            if (ruler_term(2 * i) != ruler_term(i) + 1 || ruler_term(2 * i - 1) != 1)
                return false;
        return true;
    });

    suite.check("Gray reflection: a(2^n + k) = a(2^n - k), 10^4 sampled pairs, n <= 20; a(2^n) = n+1",
                [&](std::string&) {
                    for (int n = 1; n <= 20; ++n)
                        if (ruler_term(std::uint64_t{1} << n) != n + 1)
                            return false;
                    if (ruler_term(std::uint64_t{1} << 62) != 63)
                        return false;
                    std::uniform_int_distribution<int> ndist(1, 20);
                    for (int i = 0; i < 10000; ++i) {
                        const int n = ndist(rng);
                        std::uniform_int_distribution<std::uint64_t> kdist(
                            1, (std::uint64_t{1} << n) - 1);
                        const std::uint64_t k = kdist(rng);
                        if (ruler_term((std::uint64_t{1} << n) + k) !=
                            ruler_term((std::uint64_t{1} << n) - k))
                            return false;
                    }
                    return true;
                });

    suite.check("block = stream = Thomae shift, n <= " + std::to_string(max_n),
                [&](std::string&) {
                    for (int n = 1; n <= max_n; ++n) {
                        const auto& block = blocks[n];
                        if (ruler_stream(block.size()) != block)
                            return false;
                        if (thomae_exponent_sequence(n) != block)
                            return false;
                    }
                    return true;
                });

    suite.check("half block h_n = ruler prefix of length 2^(n-1) ending in n, n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    for (int n = 1; n <= max_n; ++n) {
                        const IndexSequence h = half_block(n);
                        if (h.size() != std::size_t{1} << (n - 1))
                            return false;
                        if (h != ruler_stream(h.size()) || h.back() != n)
                            return false;
                    }
                    return true;
                });

    suite.check("frequency counts: count(k) = 2^(n-k) summing to 2^n - 1, n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    for (int n = 1; n <= max_n; ++n) {
                        const auto counts = frequency_counts(n);
                        std::int64_t total = 0;
                        for (int k = 1; k <= n; ++k) {
                            const auto it = counts.find(k);
                            if (it == counts.end() || it->second != std::int64_t{1} << (n - k))
                                return false;
                            total += it->second;
                        }
                        if (static_cast<std::size_t>(counts.size()) != static_cast<std::size_t>(n))
                            return false;
                        if (total != (std::int64_t{1} << n) - 1)
                            return false;
                    }
                    return true;
                });

    suite.check("term sums: recurrence = direct summation (n <= " + std::to_string(max_n) +
                    ") and = unrolled expansion (n <= 56)",
                [&](std::string&) {
                    for (int n = 1; n <= max_n; ++n) {
                        std::int64_t direct = 0;
                        for (int t : blocks[n])
                            direct += t;
                        if (direct != block_term_sum(n))
                            return false;
                    }
                    for (int n = 1; n <= kMaxSumOrder; ++n)
                        if (block_term_sum(n) != block_term_sum_expanded(n))
                            return false;
                    return true;
                });

    suite.check("squarefree: exhaustive scan of the 2^13 prefix finds no square",
                [&](std::string& detail) {
                    const SquarefreeScan scan = check_squarefree(kMaxSquarefreeLength);
                    if (!scan.squarefree && scan.violation)
                        detail = "square at " + std::to_string(scan.violation->start) +
                                 " length " + std::to_string(scan.violation->block_length);
                    return scan.squarefree;
                });

    suite.check("self-containing: dropping 1s and decrementing maps block n to block n-1, n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    for (int n = 2; n <= max_n; ++n)
                        if (collapse_ones(blocks[n]) != blocks[n - 1])
                            return false;
                    return true;
                });

    suite.check("automaton ages = block (midpoint and jittered placement), n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    Partition mid = init({0.0, 1.0}, 0.5);
                    std::mt19937_64 jrng(seed + 1);
                    std::uniform_real_distribution<double> sdist(0.1, 0.9);
                    Partition jit = init({0.0, 1.0}, sdist(jrng));
                    for (int n = 1; n <= max_n; ++n) {
                        if (age_sequence(mid) != blocks[n] || age_sequence(jit) != blocks[n])
                            return false;
                        if (n < max_n) {
                            mid = step(mid);
                            jit = step(jit, jrng);
                        }
                    }
                    return true;
                });

    suite.check("automaton census: 2^(n-k) points of age k at step n = " + std::to_string(max_n),
                [&](std::string&) {
                    const Partition p = run({0.0, 1.0}, 0.5, max_n);
                    std::vector<std::int64_t> counts(max_n, 0);
                    for (const auto& q : p.points)
                        ++counts[age_of(p, q) - 1];
                    for (int k = 1; k <= max_n; ++k)
                        if (counts[k - 1] != std::int64_t{1} << (max_n - k))
                            return false;
                    return true;
                });

    suite.check("populations: linear = duplication = Hanoi = 2^n - 1, n <= 62", [&](std::string&) {
        for (int n = 1; n <= kMaxPopulationStep; ++n) {
            const std::int64_t expect = (std::int64_t{1} << n) - 1;
            if (population_linear(n) != expect || population_duplication(n) != expect ||
                hanoi_moves(n) != expect)
                return false;
        }
        return true;
    });

    suite.check("newborns: N(n+1) - N(n) = 2^n, n <= 61", [&](std::string&) {
        for (int n = 1; n <= kMaxPopulationStep - 1; ++n)
            if (newborns(n) != population_linear(n + 1) - population_linear(n) ||
                newborns(n) != std::int64_t{1} << n)
                return false;
        return true;
    });

    suite.check("mortal model: simulated totals match the closed form and double, n <= 24",
                [&](std::string&) {
                    for (int n = 1; n <= 24; ++n)
                        if (census_with_death(n, 3).total != population_with_death(n))
                            return false;
                    for (int n = 3; n < 24; ++n)
                        if (population_with_death(n + 1) != 2 * population_with_death(n))
                            return false;
                    return true;
                });

    suite.check("census: closed form = aging simulation = automaton tally, n <= " +
                    std::to_string(census_n),
                [&](std::string&) {
                    for (int n = 1; n <= census_n; ++n) {
                        const AgeCensus closed = census(n);
                        const AgeCensus sim = census_simulated(n);
                        if (closed.counts != sim.counts || closed.total != sim.total)
                            return false;
                        if (closed.total != population_linear(n))
                            return false;
                        const Partition p = run({0.0, 1.0}, 0.5, n);
                        std::vector<std::int64_t> tally(n, 0);
                        for (const auto& q : p.points)
                            ++tally[age_of(p, q) - 1];
                        if (tally != closed.counts)
                            return false;
                    }
                    return true;
                });

    suite.check("Cantor: interval indices = block, n <= " + std::to_string(max_n),
                [&](std::string&) {
                    for (int n = 1; n <= max_n; ++n)
                        if (index_sequence(cantor_level(n)) != blocks[n])
                            return false;
                    return true;
                });

    suite.check("Cantor removed length: formula = geometry and 1 - L_n = (2/3)^n, n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    BigInt p2 = 2, p3 = 3;
                    for (int n = 1; n <= max_n; ++n) {
                        const TernaryRational L = removed_length(n); // dual route inside
                        if (!(L == make_ternary(p3 - p2, n)))
                            return false;
                        p2 *= 2;
                        p3 *= 3;
                    }
                    return true;
                });

    suite.check("Cantor widths: 2^(b-1) intervals of width 3^-b at level n = " +
                    std::to_string(std::min(max_n, 14)),
                [&](std::string&) {
                    const int n = std::min(max_n, 14);
                    const CantorLevel lvl = cantor_level(n);
                    std::vector<std::int64_t> per_birth(n + 1, 0);
                    for (const MiddleInterval& iv : lvl.intervals) {
                        const TernaryRational w = ternary_sub(iv.hi, iv.lo);
                        if (!(w == TernaryRational{1, iv.birth_step}))
                            return false;
                        ++per_birth[iv.birth_step];
                    }
                    for (int b = 1; b <= n; ++b)
                        if (per_birth[b] != std::int64_t{1} << (b - 1))
                            return false;
                    return true;
                });

    suite.check("polygon: valuation route = membership route = block, n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    for (int n = 1; n <= max_n; ++n)
                        if (vertex_index_sequence(generation(n)) != blocks[n])
                            return false;
                    return true;
                });

    suite.check("polygon: jittered-angle insertion gives the same indices, n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    for (int n = 1; n <= max_n; ++n)
                        if (jittered_vertex_index_sequence(n, seed + n) != blocks[n])
                            return false;
                    return true;
                });

    suite.check("six generators, one sequence: block = stream = Thomae = ages = Cantor = polygon, n <= " +
                    std::to_string(max_n),
                [&](std::string&) {
                    Partition p = init({0.0, 1.0}, 0.5);
                    for (int n = 1; n <= max_n; ++n) {
                        const auto& b = blocks[n];
                        if (ruler_stream(b.size()) != b || thomae_exponent_sequence(n) != b ||
                            age_sequence(p) != b || index_sequence(cantor_level(n)) != b ||
                            vertex_index_sequence(generation(n)) != b)
                            return false;
                        if (n < max_n)
                            p = step(p);
                    }
                    return true;
                });

    // dynamics
    const CascadeConfig cfg;
    std::vector<double> rs;
    suite.check("cascade: superstable r_0 = 2 exactly and r_1 = 1 + sqrt(5) to 1e-10",
                [&](std::string& detail) {
                    rs = superstable_sequence(kMaxSuperstableOrder);
                    std::ostringstream os;
                    os << "r_1 err " << std::abs(rs[1] - (1.0 + std::sqrt(5.0)));
                    detail = os.str();
                    return rs[0] == 2.0 && std::abs(rs[1] - (1.0 + std::sqrt(5.0))) < 1e-10;
                });

    suite.check("cascade: superstable values strictly increasing, below the extrapolated "
                "accumulation point in (3.5699, 3.5700)",
                [&](std::string& detail) {
                    if (rs.empty())
                        return false;
                    for (std::size_t i = 1; i < rs.size(); ++i)
                        if (!(rs[i] > rs[i - 1]))
                            return false;
                    const double acc = feigenbaum_accumulation(rs);
                    detail = "r_inf ~ " + format_real(acc);
                    if (!(acc > 3.5699 && acc < 3.5700))
                        return false;
                    return rs.back() < acc;
                });

    suite.check("cascade: delta estimates within 5% of a constant for n = 4..7",
                [&](std::string& detail) {
                    if (rs.size() < 8)
                        return false;
                    const std::vector<double> deltas = delta_estimates(rs); // n = 2..7
                    const auto [lo, hi] = std::minmax_element(deltas.begin() + 2, deltas.end());
                    detail = "range " + format_real(*lo) + " .. " + format_real(*hi);
                    return *hi / *lo < 1.05;
                });

    suite.check("orbits: superstable period-2^n cycle contains a point within 1e-6 of 1/2, n <= 6",
                [&](std::string&) {
                    if (rs.size() < 7)
                        return false;
                    for (int n = 0; n <= 6; ++n) {
                        const Orbit orbit = stationary_orbit(rs[n], 1 << n, cfg);
                        if (orbit.period != 1 << n)
                            return false;
                        if (std::abs(orbit.points.front() - 0.5) > 1e-6)
                            return false;
                    }
                    return true;
                });

    suite.check("visibility: early-termination walk = exhaustive O(L^2) oracle on 200 random series",
                [&](std::string&) {
                    std::uniform_int_distribution<std::size_t> len_dist(8, 500);
                    std::uniform_real_distribution<double> val(0.0, 1.0);
                    for (int t = 0; t < 200; ++t) {
                        std::vector<double> series(len_dist(rng));
                        for (double& x : series)
                            x = val(rng);
                        series.push_back(2.0); // guarantees termination for every window point
                        const std::size_t end = series.size() - 1;
                        if (forward_visibility(series, 0, end).degrees !=
                            visibility_oracle(series, 0, end))
                            return false;
                    }
                    return true;
                });

    suite.check("visibility: degrees invariant under strictly monotone value transforms",
                [&](std::string&) {
                    std::uniform_real_distribution<double> val(0.0, 1.0);
                    for (int t = 0; t < 50; ++t) {
                        std::vector<double> series(257);
                        for (double& x : series)
                            x = val(rng);
                        series.push_back(2.0);
                        const std::size_t end = series.size() - 1;
                        const auto base = forward_visibility(series, 0, end).degrees;
                        std::vector<double> cubed(series.size()), affine(series.size());
                        for (std::size_t i = 0; i < series.size(); ++i) {
                            cubed[i] = series[i] * series[i] * series[i];
                            affine[i] = 3.0 * series[i] + 7.0;
                        }
                        if (forward_visibility(cubed, 0, end).degrees != base)
                            return false;
                        if (forward_visibility(affine, 0, end).degrees != base)
                            return false;
                    }
                    return true;
                });

    suite.check("visibility pattern: one-period degrees stabilize and the rotation after the "
                "maximum equals the first 2^n ruler terms, n <= 6",
                [&](std::string&) {
                    for (int n = 1; n <= 6; ++n)
                        if (!compare_pattern(n, cfg).matches_ruler_prefix)
                            return false;
                    return true;
                });

    // reported observations (not verdicts)
    {
        const auto rep = delete_first_occurrences(blocks[std::min(max_n, 4)]);
        std::ostringstream os;
        os << "deleting the first occurrence of each value from block "
           << std::min(max_n, 4) << " leaves [" << join(rep.result)
           << "], ruler prefix again: " << (rep.equals_ruler_prefix ? "yes" : "no");
        report.notes.push_back(os.str());
    }
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        const PatternComparison cmp = compare_pattern(n, cfg);
        std::ostringstream os;
        os << "period " << cmp.period << " forward visibility [" << join(cmp.measured)
           << "]; rotated-after-max == first 2^n ruler terms: "
           << (cmp.matches_ruler_prefix ? "yes" : "no")
           << "; published recurrence == doubled rotation at max: "
           << (cmp.literal_is_doubled_rotation ? "yes" : "no")
           << "; measured == doubled ruler terms: "
           << (cmp.measured_is_doubled_ruler ? "yes" : "no");
        report.notes.push_back(os.str());
    }

    return report;
}

bool all_passed(const Report& report) {
    return std::all_of(report.verdicts.begin(), report.verdicts.end(),
                       [](const Verdict& v) { return v.pass; });
}

} // namespace rulerlab
