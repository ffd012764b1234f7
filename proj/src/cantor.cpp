#include "rulerlab/cantor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rulerlab {

namespace {

BigInt pow3(int k) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i)
        p *= 3;
    return p;
}

void require_level(int n, const char* what) {
    if (n < 1 || n > kMaxCantorLevel)
        throw std::domain_error(std::string(what) + ": level outside [1, 20]");
}

} // namespace

TernaryRational make_ternary(BigInt numerator, int exponent) {
    if (exponent < 0)
        throw std::domain_error("make_ternary: negative exponent");
    while (exponent > 0 && numerator % 3 == 0) {
        numerator /= 3;
        --exponent;
    }
    return {std::move(numerator), exponent};
}

TernaryRational ternary_add(const TernaryRational& a, const TernaryRational& b) {
    const int e = std::max(a.exponent, b.exponent);
    return make_ternary(a.numerator * pow3(e - a.exponent) + b.numerator * pow3(e - b.exponent), e);
}

TernaryRational ternary_sub(const TernaryRational& a, const TernaryRational& b) {
    const int e = std::max(a.exponent, b.exponent);
    return make_ternary(a.numerator * pow3(e - a.exponent) - b.numerator * pow3(e - b.exponent), e);
}

bool operator==(const TernaryRational& a, const TernaryRational& b) {
    return a.exponent == b.exponent && a.numerator == b.numerator;
}

bool operator<(const TernaryRational& a, const TernaryRational& b) {
    const int e = std::max(a.exponent, b.exponent);
    return a.numerator * pow3(e - a.exponent) < b.numerator * pow3(e - b.exponent);
}

std::string to_string(const TernaryRational& q) {
    if (q.exponent == 0)
        return q.numerator.str();
    return q.numerator.str() + "/3^" + std::to_string(q.exponent);
}

CantorLevel cantor_level(int n) {
    require_level(n, "cantor_level");
    // Closed segment [a, a+1] / 3^k; every closed segment at step k has the
    // same denominator, so only the left numerator is stored.
    std::vector<BigInt> closed{0};
    std::vector<MiddleInterval> middles;
    for (int s = 1; s <= n; ++s) {
        std::vector<BigInt> next_closed;
        std::vector<MiddleInterval> next_middles;
        next_closed.reserve(2 * closed.size());
        next_middles.reserve(closed.size() + middles.size());
        for (std::size_t i = 0; i < closed.size(); ++i) {
            const BigInt a3 = 3 * closed[i];
            next_closed.push_back(a3);
            next_closed.push_back(a3 + 2);
            next_middles.push_back({make_ternary(a3 + 1, s), make_ternary(a3 + 2, s), s});
            if (i < middles.size())
                next_middles.push_back(std::move(middles[i]));
        }
        closed = std::move(next_closed);
        middles = std::move(next_middles);
    }
    CantorLevel lvl;
    lvl.step = n;
    lvl.intervals = std::move(middles);
    lvl.removed_length = removed_length_geometric(lvl);
    return lvl;
}

IndexSequence index_sequence(const CantorLevel& lvl) {
    IndexSequence out;
    out.reserve(lvl.intervals.size());
    for (const MiddleInterval& iv : lvl.intervals)
        out.push_back(interval_index(lvl, iv));
    return out;
}

TernaryRational removed_length_formula(int n) {
    require_level(n, "removed_length_formula");
    // sum over the block of 3^(r(k) - (n+1)) == (sum of 3^(r(k)-1)) / 3^n
    std::vector<BigInt> powers(n);
    for (int i = 0; i < n; ++i)
        powers[i] = pow3(i);
    BigInt num = 0;
    for (int r : ruler_block(n))
        num += powers[r - 1];
    return make_ternary(num, n);
}

TernaryRational removed_length_geometric(const CantorLevel& lvl) {
    TernaryRational total{0, 0};
    for (const MiddleInterval& iv : lvl.intervals)
        total = ternary_add(total, ternary_sub(iv.hi, iv.lo));
    return total;
}

TernaryRational removed_length(int n) {
    require_level(n, "removed_length");
    const TernaryRational by_formula = removed_length_formula(n);
    const TernaryRational by_geometry = cantor_level(n).removed_length;
    if (!(by_formula == by_geometry))
        throw std::logic_error("removed_length: formula and geometry disagree at n=" +
                               std::to_string(n));
    return by_formula;
}

} // namespace rulerlab
