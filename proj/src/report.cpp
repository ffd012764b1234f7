#include "rulerlab/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace rulerlab {

std::string format_real(double x) {
    if (x == 0.0)
        x = 0.0; // never print "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string format_dyadic(std::uint64_t numerator, int exponent) {
    while (exponent > 0 && numerator % 2 == 0) {
        numerator /= 2;
        --exponent;
    }
    if (exponent == 0)
        return std::to_string(numerator);
    return std::to_string(numerator) + "/2^" + std::to_string(exponent);
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

nlohmann::ordered_json table_json(const Table& table) {
    nlohmann::ordered_json t;
    t["name"] = table.name;
    t["columns"] = table.columns;
    t["rows"] = table.rows;
    return t;
}

} // namespace

std::string emit_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
            out += ',';
        out += csv_cell(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += csv_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const Report& report) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    nlohmann::ordered_json cfg;
    for (const auto& [key, value] : report.config)
        cfg[key] = value;
    j["config"] = std::move(cfg);
    j["tables"] = nlohmann::ordered_json::array();
    for (const Table& t : report.tables)
        j["tables"].push_back(table_json(t));
    if (!report.verdicts.empty()) {
        j["verdicts"] = nlohmann::ordered_json::array();
        for (const Verdict& v : report.verdicts)
            j["verdicts"].push_back(
                {{"identity", v.identity}, {"pass", v.pass}, {"detail", v.detail}});
    }
    if (!report.notes.empty())
        j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

std::string emit_json(const Table& table) {
    Report r;
    r.tables.push_back(table);
    return emit_json(r);
}

std::string format_verdicts(const Report& report) {
    std::string out;
    out += std::string(kToolName) + " " + kToolVersion + " verification\n";
    for (const auto& [key, value] : report.config)
        out += "# " + key + " = " + value + "\n";
    std::size_t passed = 0;
    for (const Verdict& v : report.verdicts) {
        out += v.pass ? "PASS  " : "FAIL  ";
        out += v.identity;
        if (!v.detail.empty())
            out += "  [" + v.detail + "]";
        out += '\n';
        passed += v.pass ? 1 : 0;
    }
    for (const std::string& note : report.notes)
        out += "REPORT  " + note + "\n";
    out += std::to_string(passed) + "/" + std::to_string(report.verdicts.size()) + " checks passed\n";
    return out;
}

} // namespace rulerlab
