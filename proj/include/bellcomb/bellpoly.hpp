#pragma once

// Complete and partial Bell polynomials in the block-weight variables t1, t2, ...
// with exact integer coefficients.

#include "bellcomb/numbers.hpp"
#include "bellcomb/partitions.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bellcomb {

// Product of powers t_i^e, stored sparsely as (index, exponent) pairs with
// ascending index and positive exponent.
class Monomial {
public:
    Monomial() = default;
    // Accepts pairs in any order; merges repeated indices and drops zero exponents.
    explicit Monomial(std::vector<std::pair<int, int>> powers);

    static Monomial variable(int index, int exponent = 1);

    const std::vector<std::pair<int, int>>& powers() const { return powers_; }
    int exponent(int index) const;
    bool is_one() const { return powers_.empty(); }
    // sum_i i * exponent(i); for a term of B_n this is n.
    int weighted_degree() const;
    int max_index() const { return powers_.empty() ? 0 : powers_.back().first; }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<int, int>> powers_;
};

// Deterministic print order: dense exponent vectors (e1, e2, ...) compared
// lexicographically, larger first. B_3 prints as t1^3 + 3*t1*t2 + t3.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string to_string(const Monomial& m);

// s_i = number of blocks of size i.
struct BlockProfile {
    std::vector<int> counts; // counts[i-1] = s_i

    int count(int size) const { return size >= 1 && size <= static_cast<int>(counts.size()) ? counts[size - 1] : 0; }
    Monomial monomial() const;
};

BlockProfile block_profile(const SetPartition& p);
// prod over blocks of t_{|B|}.
Monomial weight_of_partition(const SetPartition& p);

class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<BigInt> values) : values_(std::move(values)) {}

    static WeightVector all_ones(int m);
    // t_i = (i-1)!; specializes B_n to n!.
    static WeightVector shifted_factorials(int m);
    // t_i = i!; specializes B_n to A000262.
    static WeightVector factorials(int m);
    // t_1 = 0, t_i = (i-1)! otherwise; specializes B_n to d_n.
    static WeightVector derangement_weights(int m);

    std::size_t size() const { return values_.size(); }
    // 1-based, matching t_i.
    const BigInt& t(int i) const { return values_[i - 1]; }
    const std::vector<BigInt>& values() const { return values_; }

private:
    std::vector<BigInt> values_;
};

class BellPolynomial {
public:
    using Terms = std::map<Monomial, BigInt, MonomialOrder>;

    BellPolynomial() = default;
    static BellPolynomial constant(const BigInt& c);
    static BellPolynomial monomial(const Monomial& m, const BigInt& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const BigInt& c);
    BellPolynomial& operator+=(const BellPolynomial& other);
    BellPolynomial& operator-=(const BellPolynomial& other);
    // c * m * this
    BellPolynomial times(const Monomial& m, const BigInt& c) const;

    // Throws WeightVectorTooShort if some t_i with i > w.size() occurs.
    BigInt evaluate(const WeightVector& w) const;

    friend bool operator==(const BellPolynomial&, const BellPolynomial&) = default;

private:
    Terms terms_;
};

std::string to_string(const BellPolynomial& p);

BigInt evaluate(const BellPolynomial& p, const WeightVector& w);

// Largest n accepted by complete_bell_by_enumeration.
inline constexpr int kEnumerationCeiling = 13;

// Sums the block weights over every partition of [n]. Throws SizeTooLarge past
// kEnumerationCeiling.
BellPolynomial complete_bell_by_enumeration(int n);

// Sum over (r_1..r_n) with sum r_i = r and sum i*r_i = n of
// n! / (prod r_i! (i!)^{r_i}) * prod t_i^{r_i}.
BellPolynomial partial_bell(int n, int r);

// sum_{r=0}^{n} partial_bell(n, r).
BellPolynomial complete_bell_by_sum(int n);

// B_0(w) .. B_max(w) through B_{m+1} = sum_k C(m,k) t_{k+1} B_{m-k}. Works
// directly on numbers and never builds a polynomial.
std::vector<BigInt> complete_bell_values(int max, const WeightVector& w);

} // namespace bellcomb
