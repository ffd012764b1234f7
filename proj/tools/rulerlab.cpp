#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rulerlab/automaton.hpp"
#include "rulerlab/cantor.hpp"
#include "rulerlab/demography.hpp"
#include "rulerlab/dynamics.hpp"
#include "rulerlab/polygon.hpp"
#include "rulerlab/report.hpp"
#include "rulerlab/ruler.hpp"
#include "rulerlab/svg.hpp"
#include "rulerlab/verify.hpp"

namespace {

using namespace rulerlab;

struct Options {
    std::string format = "csv"; // csv | json | svg
    std::string output;         // empty = stdout
    std::uint64_t seed = 12345; // jitter / sampling RNG

    int ruler_n = 8;

    int automaton_steps = 6;
    double automaton_point = 0.5;
    double automaton_lo = 0.0;
    double automaton_hi = 1.0;
    bool automaton_jitter = false;

    int demography_n = 8;
    std::optional<int> lifespan; // set = mortal model

    int cantor_n = 4;

    int polygon_n = 4;
    bool polygon_jitter = false;

    int cascade_max_n = 6;
    int cascade_orbit_n = 3;
    bool cascade_patterns = false;
    CascadeConfig cascade;

    int verify_max_n = 12;
};

// RULERLAB_MAX_N caps every order/step/level argument.
void enforce_global_cap(int n, const char* what) {
    if (const char* cap = std::getenv("RULERLAB_MAX_N")) {
        const int limit = std::atoi(cap);
        if (limit > 0 && n > limit)
            throw std::domain_error(std::string(what) + " exceeds RULERLAB_MAX_N=" +
                                    std::to_string(limit));
    }
}

void write_out(const Options& opt, const std::string& payload) {
    if (opt.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output path: " + opt.output);
    out << payload;
    if (!out)
        throw std::runtime_error("write failed: " + opt.output);
}

std::string render(const Options& opt, const Table& table, const std::string& svg = {}) {
    if (opt.format == "csv")
        return emit_csv(table);
    if (opt.format == "json")
        return emit_json(table);
    if (svg.empty())
        throw std::domain_error("no SVG view for this subcommand");
    return svg;
}

int cmd_ruler(const Options& opt) {
    enforce_global_cap(opt.ruler_n, "--n");
    Table t{"ruler", {"position", "term"}, {}};
    const IndexSequence block = ruler_block(opt.ruler_n);
    t.rows.reserve(block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
        t.rows.push_back({std::to_string(i + 1), std::to_string(block[i])});
    write_out(opt, render(opt, t, opt.format == "svg" ? svg_ruler_ticks(opt.ruler_n) : ""));
    return 0;
}

int cmd_automaton(const Options& opt) {
    enforce_global_cap(opt.automaton_steps, "--steps");
    const Interval ambient{opt.automaton_lo, opt.automaton_hi};
    const Partition p = opt.automaton_jitter
                            ? run_jittered(ambient, opt.automaton_point, opt.automaton_steps,
                                           opt.seed)
                            : run(ambient, opt.automaton_point, opt.automaton_steps);
    Table t{"automaton", {"position", "age"}, {}};
    t.rows.reserve(p.points.size());
    for (const PartitionPoint& q : p.points)
        t.rows.push_back({format_real(q.position), std::to_string(age_of(p, q))});
    write_out(opt, render(opt, t));
    return 0;
}

int cmd_demography(const Options& opt) {
    enforce_global_cap(opt.demography_n, "--n");
    const AgeCensus c =
        opt.lifespan ? census_with_death(opt.demography_n, *opt.lifespan) : census(opt.demography_n);
    Table t{"demography", {"age", "count", "proportion"}, {}};
    for (std::size_t k = 0; k < c.counts.size(); ++k)
        t.rows.push_back({std::to_string(k + 1), std::to_string(c.counts[k]),
                          format_real(c.proportions[k])});
    write_out(opt, render(opt, t, opt.format == "svg" ? svg_age_pyramid(c) : ""));
    return 0;
}

int cmd_cantor(const Options& opt) {
    enforce_global_cap(opt.cantor_n, "--n");
    const CantorLevel lvl = cantor_level(opt.cantor_n);
    Table t{"cantor", {"lo", "hi", "birth", "index"}, {}};
    t.rows.reserve(lvl.intervals.size());
    for (const MiddleInterval& iv : lvl.intervals)
        t.rows.push_back({to_string(iv.lo), to_string(iv.hi), std::to_string(iv.birth_step),
                          std::to_string(interval_index(lvl, iv))});
    write_out(opt, render(opt, t, opt.format == "svg" ? svg_cantor_levels(opt.cantor_n) : ""));
    return 0;
}

int cmd_polygon(const Options& opt) {
    enforce_global_cap(opt.polygon_n, "--n");
    Table t{"polygon", {"k", "fraction", "index"}, {}};
    if (opt.polygon_jitter) {
        const JitteredPolygon jp = jittered_generation(opt.polygon_n, opt.seed);
        for (std::size_t i = 0; i < jp.indices.size(); ++i)
            t.rows.push_back({std::to_string(i + 1), format_real(jp.angle_fractions[i]),
                              std::to_string(jp.indices[i])});
    } else {
        const PolygonGeneration g = generation(opt.polygon_n);
        const IndexSequence idx = vertex_index_sequence(g);
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            t.rows.push_back({std::to_string(g.vertices[i].k),
                              format_dyadic(g.vertices[i].k, opt.polygon_n),
                              std::to_string(idx[i])});
    }
    write_out(opt, render(opt, t, opt.format == "svg" ? svg_polygon_generations(opt.polygon_n) : ""));
    return 0;
}

Table pattern_table(int max_n, const CascadeConfig& cfg) {
    Table pat{"visibility_patterns", {"n", "period", "t", "degree"}, {}};
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        const PatternComparison pc = compare_pattern(n, cfg);
        for (std::size_t i = 0; i < pc.measured.size(); ++i)
            pat.rows.push_back({std::to_string(n), std::to_string(pc.period), std::to_string(i),
                                std::to_string(pc.measured[i])});
    }
    return pat;
}

int cmd_cascade(const Options& opt) {
    enforce_global_cap(opt.cascade_max_n, "--max-n");
    const std::vector<double> rs = superstable_sequence(opt.cascade_max_n, opt.cascade);
    Table t{"cascade", {"n", "period", "r", "delta_estimate"}, {}};
    for (std::size_t n = 0; n < rs.size(); ++n) {
        std::string delta;
        if (n >= 2)
            delta = format_real((rs[n - 1] - rs[n - 2]) / (rs[n] - rs[n - 1]));
        t.rows.push_back({std::to_string(n), std::to_string(1 << n), format_real(rs[n]), delta});
    }
    if (opt.cascade_patterns && opt.format != "svg") {
        const Table pat = pattern_table(opt.cascade_max_n, opt.cascade);
        write_out(opt, opt.format == "json" ? emit_json(pat) : emit_csv(pat));
        return 0;
    }
    if (opt.format == "svg") {
        const int n = std::min(opt.cascade_orbit_n, opt.cascade_max_n);
        const Orbit orbit = stationary_orbit(rs[n], 1 << n, opt.cascade);
        write_out(opt, svg_visibility_diagram(orbit));
        return 0;
    }
    if (opt.format == "json") {
        Report rep;
        rep.config.emplace_back("max_n", std::to_string(opt.cascade_max_n));
        rep.config.emplace_back("tolerance", format_real(opt.cascade.root_tolerance));
        rep.config.emplace_back("transient", std::to_string(opt.cascade.transient_steps));
        rep.tables.push_back(t);
        rep.tables.push_back(pattern_table(opt.cascade_max_n, opt.cascade));
        Table cmp{"pattern_comparisons",
                  {"n", "rotated_after_max_equals_ruler_prefix",
                   "recurrence_equals_doubled_rotation", "measured_equals_doubled_ruler"},
                  {}};
        for (int n = 1; n <= std::min(opt.cascade_max_n, 6); ++n) {
            const PatternComparison pc = compare_pattern(n, opt.cascade);
            cmp.rows.push_back({std::to_string(n), pc.matches_ruler_prefix ? "yes" : "no",
                                pc.literal_is_doubled_rotation ? "yes" : "no",
                                pc.measured_is_doubled_ruler ? "yes" : "no"});
        }
        rep.tables.push_back(std::move(cmp));
        if (rs.size() >= 4)
            rep.config.emplace_back("accumulation_extrapolant",
                                    format_real(feigenbaum_accumulation(rs)));
        write_out(opt, emit_json(rep));
        return 0;
    }
    write_out(opt, emit_csv(t));
    return 0;
}

int cmd_verify(const Options& opt) {
    enforce_global_cap(opt.verify_max_n, "--max-n");
    const Report report = run_verification(opt.verify_max_n, opt.seed);
    write_out(opt, opt.format == "json" ? emit_json(report) : format_verdicts(report));
    return all_passed(report) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ruler (Gros) sequence constructions, cross-checks and figures"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.set_config("--config");
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--format", opt.format, "output format: csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "write to a file instead of stdout");
    app.add_option("--seed", opt.seed, "RNG seed for jitter modes and sampled checks")
        ->capture_default_str();

    CLI::App* ruler = app.add_subcommand("ruler", "terms of the ruler sequence (Fig. 1 view)");
    ruler->add_option("--n", opt.ruler_n, "block order (length 2^n - 1)")
        ->check(CLI::Range(1, kMaxBlockOrder))
        ->capture_default_str();

    CLI::App* automaton =
        app.add_subcommand("automaton", "interval duplication run: positions and ages");
    automaton->add_option("--steps", opt.automaton_steps, "duplication steps")
        ->check(CLI::Range(1, kMaxAutomatonSteps))
        ->capture_default_str();
    automaton->add_option("--point", opt.automaton_point, "initial interior point")
        ->capture_default_str();
    automaton->add_option("--lo", opt.automaton_lo, "ambient lower bound (-inf allowed)")
        ->capture_default_str();
    automaton->add_option("--hi", opt.automaton_hi, "ambient upper bound (inf allowed)")
        ->capture_default_str();
    automaton->add_flag("--jitter", opt.automaton_jitter, "random in-gap placement");

    CLI::App* demography =
        app.add_subcommand("demography", "age census tables and the pyramid (Fig. 3 view)");
    demography->add_option("--n", opt.demography_n, "census step")
        ->check(CLI::Range(1, kMaxCensusStep))
        ->capture_default_str();
    demography->add_option("--lifespan", opt.lifespan,
                           "mortal model: remove ages beyond this (default: immortal)");

    CLI::App* cantor =
        app.add_subcommand("cantor", "middle intervals of the Cantor set (Fig. 2 view)");
    cantor->add_option("--n", opt.cantor_n, "construction level")
        ->check(CLI::Range(1, kMaxCantorLevel))
        ->capture_default_str();

    CLI::App* polygon =
        app.add_subcommand("polygon", "vertex indices of duplicated polygons (Fig. 4 view)");
    polygon->add_option("--n", opt.polygon_n, "generation (2^n-gon)")
        ->check(CLI::Range(1, kMaxPolygonGeneration))
        ->capture_default_str();
    polygon->add_flag("--jitter", opt.polygon_jitter, "random-angle insertion mode");

    CLI::App* cascade = app.add_subcommand(
        "cascade", "superstable cascade, visibility patterns and comparisons (Fig. 5 view)");
    cascade->add_option("--max-n", opt.cascade_max_n, "largest superstable order (period 2^n)")
        ->check(CLI::Range(0, kMaxSuperstableOrder))
        ->capture_default_str();
    cascade->add_option("--orbit-n", opt.cascade_orbit_n, "orbit drawn by the SVG view")
        ->check(CLI::Range(0, kMaxSuperstableOrder))
        ->capture_default_str();
    cascade->add_flag("--patterns", opt.cascade_patterns,
                      "emit the per-orbit visibility patterns instead of the parameter table");
    cascade->add_option("--tol", opt.cascade.root_tolerance, "bisection tolerance")
        ->capture_default_str();
    cascade->add_option("--transient", opt.cascade.transient_steps, "discarded iterations")
        ->capture_default_str();
    cascade
        ->add_option("--period-tol", opt.cascade.period_tolerance, "period detection tolerance")
        ->capture_default_str();

    CLI::App* verify =
        app.add_subcommand("verify", "run the full cross-oracle identity suite");
    verify->add_option("--max-n", opt.verify_max_n, "largest block order exercised")
        ->check(CLI::Range(1, kMaxVerifyOrder))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    try {
        if (ruler->parsed())
            return cmd_ruler(opt);
        if (automaton->parsed())
            return cmd_automaton(opt);
        if (demography->parsed())
            return cmd_demography(opt);
        if (cantor->parsed())
            return cmd_cantor(opt);
        if (polygon->parsed())
            return cmd_polygon(opt);
        if (cascade->parsed())
            return cmd_cascade(opt);
        if (verify->parsed())
            return cmd_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
