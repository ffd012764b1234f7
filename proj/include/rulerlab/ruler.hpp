#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace rulerlab {

// A finite run of ruler-sequence terms (1-based positions). A full block of
// order n has length 2^n - 1 and maximum term n.
using IndexSequence = std::vector<int>;

// Largest position accepted by ruler_term / ruler_term_recursive.
inline constexpr std::uint64_t kMaxPosition = std::uint64_t{1} << 62;

// Largest block order materialized in memory (length 2^24 - 1).
inline constexpr int kMaxBlockOrder = 24;

// Largest order for which exact 64-bit term sums are guaranteed.
inline constexpr int kMaxSumOrder = 56;

// Length budget of the exhaustive square scan.
inline constexpr std::size_t kMaxSquarefreeLength = std::size_t{1} << 13;

// nth term: exponent of the largest power of 2 dividing 2n, computed from
// the trailing zero count of n. Throws std::domain_error for n = 0 or
// n > kMaxPosition.
int ruler_term(std::uint64_t n);

// Same value through the recursion: 1 for odd k, term(k/2) + 1 for even k.
int ruler_term_recursive(std::uint64_t k);

// Order-n block grown by the doubling rule r <- r ++ [k] ++ r from r = [1].
IndexSequence ruler_block(int n);

// First `count` terms via repeated ruler_term. count <= 2^24 - 1.
IndexSequence ruler_stream(std::uint64_t count);

// Half-construction variant: the ruler prefix of length 2^(n-1), whose last
// term is n. h_4 = [1,2,1,3,1,2,1,4].
IndexSequence half_block(int n);

// A dyadic rational odd_numerator / 2^exponent in (0,1).
struct DyadicRational {
    std::uint64_t odd_numerator = 1;
    int exponent = 1;
};

// All dyadic rationals p/2^k with 1 <= k <= n, p odd, 0 < p/2^k < 1,
// in increasing numeric order.
std::vector<DyadicRational> dyadic_rationals(int n);

// Exponents -k of the Thomae restriction h(p/2^k) = 2^-k over
// dyadic_rationals(n), in the same order.
std::vector<int> thomae_exponents(int n);

// thomae_exponents(n) shifted up by n + 1; equals ruler_block(n).
IndexSequence thomae_exponent_sequence(int n);

struct BlockStats {
    int order = 0;             // n
    std::int64_t length = 0;   // N = 2^n - 1
    std::int64_t term_sum = 0; // s_n
    int max_term = 0;          // n
    double ratio = 0.0;        // lambda = log2(N+1)/N
};

// Stats of the order-n block; term_sum via s_{k+1} = 2 s_k + k + 1, s_1 = 1.
BlockStats block_stats(int n);

// The recurrence route for s_n alone.
std::int64_t block_term_sum(int n);

// The unrolled route: s_n = 2^(n-1) + sum_{j=0}^{n-2} 2^j (n - j).
// (The per-step increments of the recurrence, written out explicitly.)
std::int64_t block_term_sum_expanded(int n);

// Count of each term value over the order-n block; count(k) = 2^(n-k).
std::map<int, std::int64_t> frequency_counts(int n);

// An adjacent repetition seq[start .. start+len) == seq[start+len .. start+2len).
struct SquareOccurrence {
    std::size_t start = 0;        // 0-based
    std::size_t block_length = 0; // len of the repeated block w
};

// Exhaustive O(L^2) scan for a square ww. Returns the violation with the
// smallest start (ties: shortest block), or nullopt if squarefree.
std::optional<SquareOccurrence> find_square(const IndexSequence& seq);

bool is_squarefree(const IndexSequence& seq);

struct SquarefreeScan {
    bool squarefree = true;
    std::optional<SquareOccurrence> violation;
};

// Scan of the ruler prefix of the given length (<= kMaxSquarefreeLength).
SquarefreeScan check_squarefree(std::size_t prefix_length);

// Drop every term equal to 1 and decrement the rest. Applied to a block of
// order n this yields the block of order n - 1.
IndexSequence collapse_ones(const IndexSequence& seq);

struct FirstOccurrenceDeletionReport {
    IndexSequence result;            // input minus the first occurrence of each value
    bool equals_ruler_prefix = false; // result == ruler prefix of the same length
};

// Diagnostic for the claimed delete-first-occurrence self-similarity. The
// outcome is reported, not assumed: on finite prefixes the claim fails.
FirstOccurrenceDeletionReport delete_first_occurrences(const IndexSequence& seq);

} // namespace rulerlab
