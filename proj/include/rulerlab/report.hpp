#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rulerlab {

inline constexpr const char* kToolName = "rulerlab";
inline constexpr const char* kToolVersion = "0.1.0";

// Reals are serialized with 15 significant digits so identical configs give
// byte-identical output.
std::string format_real(double x);

// Reduced dyadic fraction "p/2^k" (plain integer when k = 0).
std::string format_dyadic(std::uint64_t numerator, int exponent);

// One tabular result: a header row plus string cells.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Outcome of one checked identity.
struct Verdict {
    std::string identity; // what was checked, with the tested range
    bool pass = false;
    std::string detail;
};

// Structured run result: config echo, tables, verdicts and free-form notes.
struct Report {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Table> tables;
    std::vector<Verdict> verdicts;
    std::vector<std::string> notes; // reported observations, not asserted
};

// Header row, comma delimiter, LF endings; cells quoted only when needed.
std::string emit_csv(const Table& table);

// Stable key order, two-space indent, trailing newline.
std::string emit_json(const Report& report);

std::string emit_json(const Table& table);

// Human-readable verdict table as printed by `verify`.
std::string format_verdicts(const Report& report);

} // namespace rulerlab
