#pragma once

// Non-crossing partitions as 1212-avoiding restricted growth strings, the
// cyclic and first-j adjacency conditions, and the covering reduction.

#include "bellcomb/numbers.hpp"
#include "bellcomb/partitions.hpp"

#include <span>
#include <vector>

namespace bellcomb {

using Word = std::vector<int>;
// covered[i] is true when position i (0-based) is masked.
using CoverMask = std::vector<bool>;

inline constexpr int kNoncrossingCeiling = 14;

// True iff w has no subsequence a b a b with a < b. Valid RGS go through the
// linear open-block stack; other words fall back to contains_abab.
bool is_noncrossing(std::span<const int> w);
// Reference: checks every index quadruple.
bool is_noncrossing_brute(std::span<const int> w);
// Pair scan over letter values; works on any word, RGS or not.
bool contains_abab(std::span<const int> w);

// Streams every non-crossing RGS of length n in lexicographic order.
class NoncrossingStream {
public:
    // Throws SizeTooLarge past kNoncrossingCeiling.
    explicit NoncrossingStream(int n);

    bool next();
    const Word& word() const { return word_; }

private:
    // Smallest letter >= from that keeps word_[0..pos] non-crossing, or 0.
    int smallest_valid(int pos, int from) const;
    bool fill_from(int pos);

    int n_;
    bool started_ = false;
    bool done_ = false;
    Word word_;
};

NoncrossingStream enumerate_noncrossing(int n);

// w_i != w_{i+1} for every i, and w_n != w_1. A single letter counts as its
// own cyclic neighbour, so length-1 words fail; the empty word passes.
bool is_cyclic_smirnov(std::span<const int> w);

// Non-crossing, cyclic-Smirnov RGS of length n.
BigInt count_k_interpretation(int n);

// Non-crossing RGS with w_i != w_{i+1} for 1 <= i <= j. Needs 0 <= j <= n-1
// (j = 0 is also accepted for n = 0).
BigInt count_first_j_condition(int n, int j);

struct CoverResult {
    CoverMask mask;
    Word uncovered;
};

// Masks every position whose letter equals its successor, plus the last
// position when it holds a 1. Throws InvalidRGS.
CoverResult covering_reduction(std::span<const int> w);

// Rank-relabels the letters so the smallest becomes 1 and so on.
Word renormalize(std::span<const int> w);

} // namespace bellcomb
