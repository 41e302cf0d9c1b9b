#include "bellcomb/noncrossing.hpp"

#include "bellcomb/errors.hpp"

#include <algorithm>
#include <string>

namespace bellcomb {

namespace {

// Open blocks sit on a stack. Revisiting a block closes everything opened
// after it; revisiting a closed block completes an abab.
bool rgs_noncrossing(std::span<const int> w)
{
    std::vector<int> stack;
    std::vector<char> closed(w.size() + 2, 0);
    int max = 0;
    for (int x : w) {
        if (x > max) {
            max = x;
            stack.push_back(x);
            continue;
        }
        if (closed[x])
            return false;
        while (stack.back() != x) {
            closed[stack.back()] = 1;
            stack.pop_back();
        }
    }
    return true;
}

void require_size(int n)
{
    if (n < 0)
        throw NegativeIndex("word length must be nonnegative");
    if (n > kNoncrossingCeiling)
        throw SizeTooLarge("non-crossing enumeration at n=" + std::to_string(n) + " exceeds ceiling " +
                           std::to_string(kNoncrossingCeiling));
}

} // namespace

bool is_noncrossing(std::span<const int> w)
{
    if (Rgs::is_valid(w))
        return rgs_noncrossing(w);
    return !contains_abab(w);
}

bool is_noncrossing_brute(std::span<const int> w)
{
    const std::size_t n = w.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (w[a] == w[c] && w[b] == w[d] && w[a] < w[b])
                        return false;
    return true;
}

bool contains_abab(std::span<const int> w)
{
    std::vector<int> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t k = i + 1; k < letters.size(); ++k) {
            const int pattern[4] = {letters[i], letters[k], letters[i], letters[k]};
            int matched = 0;
            for (int x : w)
                if (x == pattern[matched] && ++matched == 4)
                    return true;
        }
    return false;
}

// ---------------------------------------------------------------------------
// Enumeration

NoncrossingStream::NoncrossingStream(int n) : n_(n)
{
    require_size(n);
}

int NoncrossingStream::smallest_valid(int pos, int from) const
{
    if (pos == 0)
        return from <= 1 ? 1 : 0;
    const int max = *std::max_element(word_.begin(), word_.begin() + pos);
    Word prefix(word_.begin(), word_.begin() + pos + 1);
    for (int v = std::max(from, 1); v <= max + 1; ++v) {
        prefix[pos] = v;
        if (rgs_noncrossing(prefix))
            return v;
    }
    return 0;
}

bool NoncrossingStream::fill_from(int pos)
{
    for (int p = pos; p < n_; ++p)
        word_[p] = smallest_valid(p, 1);
    return true;
}

bool NoncrossingStream::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        word_.assign(n_, 1);
        return fill_from(0);
    }
    for (int pos = n_ - 1; pos >= 1; --pos) {
        if (const int v = smallest_valid(pos, word_[pos] + 1)) {
            word_[pos] = v;
            return fill_from(pos + 1);
        }
    }
    done_ = true;
    return false;
}

NoncrossingStream enumerate_noncrossing(int n)
{
    return NoncrossingStream(n);
}

// ---------------------------------------------------------------------------
// Adjacency conditions

bool is_cyclic_smirnov(std::span<const int> w)
{
    if (w.empty())
        return true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1])
            return false;
    return w.size() > 1 && w.back() != w.front();
}

BigInt count_k_interpretation(int n)
{
    require_size(n);
    unsigned long count = 0;
    for (NoncrossingStream s(n); s.next();)
        if (is_cyclic_smirnov(s.word()))
            ++count;
    return BigInt(count);
}

BigInt count_first_j_condition(int n, int j)
{
    require_size(n);
    if (j < 0 || (j > n - 1 && !(n == 0 && j == 0)))
        throw IndexOutOfRange("first-j condition needs 0 <= j <= n-1, got n=" + std::to_string(n) +
                              ", j=" + std::to_string(j));
    unsigned long count = 0;
    for (NoncrossingStream s(n); s.next();) {
        const auto& w = s.word();
        bool ok = true;
        for (int i = 0; i < j && ok; ++i)
            ok = w[i] != w[i + 1];
        if (ok)
            ++count;
    }
    return BigInt(count);
}

// ---------------------------------------------------------------------------
// Covering reduction

CoverResult covering_reduction(std::span<const int> w)
{
    if (!Rgs::is_valid(w))
        throw InvalidRGS("'" + format_word(w) + "' is not a restricted growth string");
    CoverResult out;
    const std::size_t n = w.size();
    out.mask.assign(n, false);
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.mask[i] = w[i] == w[i + 1];
    if (n > 0 && w[n - 1] == 1)
        out.mask[n - 1] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!out.mask[i])
            out.uncovered.push_back(w[i]);
    return out;
}

Word renormalize(std::span<const int> w)
{
    std::vector<int> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    Word out;
    out.reserve(w.size());
    for (int x : w)
        out.push_back(static_cast<int>(std::lower_bound(letters.begin(), letters.end(), x) - letters.begin()) + 1);
    return out;
}

} // namespace bellcomb
