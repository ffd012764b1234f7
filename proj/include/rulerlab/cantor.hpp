#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rulerlab/ruler.hpp"

namespace rulerlab {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxCantorLevel = 20;

// numerator / 3^exponent, canonical: 3 does not divide numerator unless
// exponent is 0. All arithmetic in this module is exact.
struct TernaryRational {
    BigInt numerator = 0;
    int exponent = 0;
};

TernaryRational make_ternary(BigInt numerator, int exponent);
TernaryRational ternary_add(const TernaryRational& a, const TernaryRational& b);
TernaryRational ternary_sub(const TernaryRational& a, const TernaryRational& b);
bool operator==(const TernaryRational& a, const TernaryRational& b);
bool operator<(const TernaryRational& a, const TernaryRational& b);
std::string to_string(const TernaryRational& q); // "p/3^k", plain "p" for k = 0

// Open middle interval; width is 3^-birth_step.
struct MiddleInterval {
    TernaryRational lo, hi;
    int birth_step = 1;
};

struct CantorLevel {
    int step = 0;
    std::vector<MiddleInterval> intervals; // ordered left to right
    TernaryRational removed_length;        // sum of interval widths
};

inline int interval_index(const CantorLevel& lvl, const MiddleInterval& iv) {
    return lvl.step - iv.birth_step + 1;
}

// Trisect the closed outer thirds n times; middle intervals accumulate.
CantorLevel cantor_level(int n);

// Left-to-right interval indices; equals ruler_block(n).
IndexSequence index_sequence(const CantorLevel& lvl);

// L_n two ways: sum of 3^(r_n(k) - (n+1)) over the ruler block, and the sum
// of the interval widths of cantor_level(n). Throws std::logic_error if the
// routes disagree; returns the canonical reduced fraction.
TernaryRational removed_length(int n);
TernaryRational removed_length_formula(int n);
TernaryRational removed_length_geometric(const CantorLevel& lvl);

} // namespace rulerlab
