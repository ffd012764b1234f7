#include "rulerlab/ruler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rulerlab {

namespace {

void require_order(int n, int cap, const char* what) {
    if (n < 1 || n > cap)
        throw std::domain_error(std::string(what) + ": order " + std::to_string(n) +
                                " outside [1, " + std::to_string(cap) + "]");
}

} // namespace

int ruler_term(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("ruler_term: position must be >= 1");
    if (n > kMaxPosition)
        throw std::domain_error("ruler_term: position exceeds 2^62 cap");
    return std::countr_zero(n) + 1;
}

int ruler_term_recursive(std::uint64_t k) {
    if (k == 0)
        throw std::domain_error("ruler_term_recursive: position must be >= 1");
    if (k > kMaxPosition)
        throw std::domain_error("ruler_term_recursive: position exceeds 2^62 cap");
    if (k % 2 == 1)
        return 1;
    return ruler_term_recursive(k / 2) + 1;
}

IndexSequence ruler_block(int n) {
    require_order(n, kMaxBlockOrder, "ruler_block");
    IndexSequence r{1};
    r.reserve((std::size_t{1} << n) - 1);
    for (int k = 2; k <= n; ++k) {
        const std::size_t len = r.size();
        r.push_back(k);
        for (std::size_t i = 0; i < len; ++i)
            r.push_back(r[i]);
    }
    return r;
}

IndexSequence ruler_stream(std::uint64_t count) {
    if (count > (std::uint64_t{1} << kMaxBlockOrder) - 1)
        throw std::domain_error("ruler_stream: count exceeds 2^24 - 1 cap");
    IndexSequence out;
    out.reserve(count);
    for (std::uint64_t i = 1; i <= count; ++i)
        out.push_back(ruler_term(i));
    return out;
}

IndexSequence half_block(int n) {
    require_order(n, kMaxBlockOrder + 1, "half_block");
    const std::uint64_t len = std::uint64_t{1} << (n - 1);
    IndexSequence out;
    out.reserve(len);
    for (std::uint64_t i = 1; i <= len; ++i)
        out.push_back(ruler_term(i));
    return out;
}

std::vector<DyadicRational> dyadic_rationals(int n) {
    require_order(n, kMaxBlockOrder, "dyadic_rationals");
    // p/2^k sorted by the common-denominator numerator p * 2^(n-k).
    std::vector<DyadicRational> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (int k = 1; k <= n; ++k)
        for (std::uint64_t p = 1; p < (std::uint64_t{1} << k); p += 2)
            out.push_back({p, k});
    std::sort(out.begin(), out.end(), [n](const DyadicRational& a, const DyadicRational& b) {
        return a.odd_numerator << (n - a.exponent) < b.odd_numerator << (n - b.exponent);
    });
    return out;
}

std::vector<int> thomae_exponents(int n) {
    std::vector<int> out;
    const auto points = dyadic_rationals(n);
    out.reserve(points.size());
    for (const auto& q : points)
        out.push_back(-q.exponent);
    return out;
}

IndexSequence thomae_exponent_sequence(int n) {
    IndexSequence out = thomae_exponents(n);
    for (int& e : out)
        e += n + 1;
    return out;
}

std::int64_t block_term_sum(int n) {
    require_order(n, kMaxSumOrder, "block_term_sum");
    std::int64_t s = 1;
    for (int k = 1; k < n; ++k)
        s = 2 * s + k + 1;
    return s;
}

std::int64_t block_term_sum_expanded(int n) {
    require_order(n, kMaxSumOrder, "block_term_sum_expanded");
    std::int64_t s = std::int64_t{1} << (n - 1);
    for (int j = 0; j <= n - 2; ++j)
        s += (std::int64_t{1} << j) * (n - j);
    return s;
}

BlockStats block_stats(int n) {
    require_order(n, kMaxSumOrder, "block_stats");
    BlockStats st;
    st.order = n;
    st.length = (std::int64_t{1} << n) - 1;
    st.term_sum = block_term_sum(n);
    st.max_term = n;
    st.ratio = std::log2(static_cast<double>(st.length) + 1.0) / static_cast<double>(st.length);
    return st;
}

std::map<int, std::int64_t> frequency_counts(int n) {
    require_order(n, kMaxBlockOrder, "frequency_counts");
    std::map<int, std::int64_t> counts;
    const std::uint64_t len = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t i = 1; i <= len; ++i)
        ++counts[ruler_term(i)];
    return counts;
}

std::optional<SquareOccurrence> find_square(const IndexSequence& seq) {
    const std::size_t L = seq.size();
    std::optional<SquareOccurrence> best;
    if (L < 2)
        return best;
    // For each block length l, lce[i] = longest common extension of the
    // suffixes at i and i + l; a square w w with |w| = l starts at i
    // iff lce[i] >= l.
    std::vector<std::size_t> lce(L + 1);
    for (std::size_t l = 1; 2 * l <= L; ++l) {
        std::fill(lce.begin(), lce.end(), 0);
        for (std::size_t i = L - l; i-- > 0;)
            lce[i] = seq[i] == seq[i + l] ? lce[i + 1] + 1 : 0;
        for (std::size_t i = 0; i + 2 * l <= L; ++i) {
            if (lce[i] >= l) {
                if (!best || i < best->start)
                    best = SquareOccurrence{i, l};
                break; // earliest start for this length found
            }
        }
    }
    return best;
}

bool is_squarefree(const IndexSequence& seq) {
    return !find_square(seq).has_value();
}

SquarefreeScan check_squarefree(std::size_t prefix_length) {
    if (prefix_length > kMaxSquarefreeLength)
        throw std::domain_error("check_squarefree: prefix length exceeds 2^13 scan budget");
    SquarefreeScan scan;
    scan.violation = find_square(ruler_stream(prefix_length));
    scan.squarefree = !scan.violation.has_value();
    return scan;
}

IndexSequence collapse_ones(const IndexSequence& seq) {
    IndexSequence out;
    out.reserve(seq.size() / 2);
    for (int t : seq)
        if (t != 1)
            out.push_back(t - 1);
    return out;
}

FirstOccurrenceDeletionReport delete_first_occurrences(const IndexSequence& seq) {
    FirstOccurrenceDeletionReport rep;
    std::vector<bool> seen;
    for (int t : seq) {
        if (t >= 1 && static_cast<std::size_t>(t) > seen.size())
            seen.resize(t, false);
        if (t >= 1 && !seen[t - 1])
            seen[t - 1] = true; // first occurrence: dropped
        else
            rep.result.push_back(t);
    }
    rep.equals_ruler_prefix = rep.result == ruler_stream(rep.result.size());
    return rep;
}

} // namespace rulerlab
