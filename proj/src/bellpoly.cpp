#include "bellcomb/bellpoly.hpp"

#include "bellcomb/errors.hpp"

#include <algorithm>
#include <limits>

namespace bellcomb {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::pair<int, int>> powers)
{
    std::sort(powers.begin(), powers.end());
    for (const auto& [index, exp] : powers) {
        if (index < 1)
            throw MalformedInput("variable index must be >= 1");
        if (exp < 0)
            throw MalformedInput("negative exponent");
        if (exp == 0)
            continue;
        if (!powers_.empty() && powers_.back().first == index)
            powers_.back().second += exp;
        else
            powers_.emplace_back(index, exp);
    }
}

Monomial Monomial::variable(int index, int exponent)
{
    return Monomial({{index, exponent}});
}

int Monomial::exponent(int index) const
{
    auto it = std::lower_bound(powers_.begin(), powers_.end(), std::pair{index, 0});
    return it != powers_.end() && it->first == index ? it->second : 0;
}

int Monomial::weighted_degree() const
{
    int d = 0;
    for (const auto& [index, exp] : powers_)
        d += index * exp;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    std::vector<std::pair<int, int>> all = powers_;
    all.insert(all.end(), other.powers_.begin(), other.powers_.end());
    return Monomial(std::move(all));
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0, k = 0;
    while (i < pa.size() || k < pb.size()) {
        const int ia = i < pa.size() ? pa[i].first : std::numeric_limits<int>::max();
        const int ib = k < pb.size() ? pb[k].first : std::numeric_limits<int>::max();
        const int idx = std::min(ia, ib);
        const int ea = ia == idx ? pa[i].second : 0;
        const int eb = ib == idx ? pb[k].second : 0;
        if (ea != eb)
            return ea > eb;
        if (ia == idx)
            ++i;
        if (ib == idx)
            ++k;
    }
    return false;
}

std::string to_string(const Monomial& m)
{
    if (m.is_one())
        return "1";
    std::string out;
    for (const auto& [index, exp] : m.powers()) {
        if (!out.empty())
            out += '*';
        out += 't' + std::to_string(index);
        if (exp != 1)
            out += '^' + std::to_string(exp);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Block profiles

Monomial BlockProfile::monomial() const
{
    std::vector<std::pair<int, int>> powers;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0)
            powers.emplace_back(static_cast<int>(i) + 1, counts[i]);
    return Monomial(std::move(powers));
}

BlockProfile block_profile(const SetPartition& p)
{
    BlockProfile profile;
    profile.counts.assign(p.size(), 0);
    for (const auto& block : p.blocks())
        ++profile.counts[block.size() - 1];
    return profile;
}

Monomial weight_of_partition(const SetPartition& p)
{
    return block_profile(p).monomial();
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector WeightVector::all_ones(int m)
{
    return WeightVector(std::vector<BigInt>(m, 1));
}

WeightVector WeightVector::shifted_factorials(int m)
{
    std::vector<BigInt> v;
    for (int i = 1; i <= m; ++i)
        v.push_back(factorial(i - 1));
    return WeightVector(std::move(v));
}

WeightVector WeightVector::factorials(int m)
{
    std::vector<BigInt> v;
    for (int i = 1; i <= m; ++i)
        v.push_back(factorial(i));
    return WeightVector(std::move(v));
}

WeightVector WeightVector::derangement_weights(int m)
{
    auto w = shifted_factorials(m);
    if (m >= 1)
        w.values_[0] = 0;
    return w;
}

// ---------------------------------------------------------------------------
// BellPolynomial

BellPolynomial BellPolynomial::constant(const BigInt& c)
{
    return monomial(Monomial{}, c);
}

BellPolynomial BellPolynomial::monomial(const Monomial& m, const BigInt& c)
{
    BellPolynomial p;
    p.add_term(m, c);
    return p;
}

BigInt BellPolynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BellPolynomial::add_term(const Monomial& m, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BellPolynomial& BellPolynomial::operator+=(const BellPolynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

BellPolynomial& BellPolynomial::operator-=(const BellPolynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

BellPolynomial BellPolynomial::times(const Monomial& m, const BigInt& c) const
{
    BellPolynomial out;
    if (c == 0)
        return out;
    for (const auto& [term, coef] : terms_)
        out.add_term(term * m, coef * c);
    return out;
}

BigInt BellPolynomial::evaluate(const WeightVector& w) const
{
    BigInt sum = 0;
    BigInt power;
    for (const auto& [m, c] : terms_) {
        if (m.max_index() > static_cast<int>(w.size()))
            throw WeightVectorTooShort("term " + to_string(m) + " needs " + std::to_string(m.max_index()) +
                                       " weights, got " + std::to_string(w.size()));
        BigInt value = c;
        for (const auto& [index, exp] : m.powers()) {
            mpz_pow_ui(power.get_mpz_t(), w.t(index).get_mpz_t(), static_cast<unsigned long>(exp));
            value *= power;
        }
        sum += value;
    }
    return sum;
}

BigInt evaluate(const BellPolynomial& p, const WeightVector& w)
{
    return p.evaluate(w);
}

std::string to_string(const BellPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const BigInt magnitude = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m.is_one())
            out += magnitude.get_str();
        else if (magnitude == 1)
            out += to_string(m);
        else
            out += magnitude.get_str() + "*" + to_string(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

BellPolynomial complete_bell_by_enumeration(int n)
{
    if (n < 0)
        throw NegativeIndex("complete Bell polynomial index must be nonnegative");
    if (n > kEnumerationCeiling)
        throw SizeTooLarge("enumeration of P_" + std::to_string(n) + " exceeds ceiling " +
                           std::to_string(kEnumerationCeiling));
    // Tally block profiles first; most partitions share a profile.
    std::map<std::vector<int>, unsigned long> tally;
    std::vector<int> block_sizes(n + 1);
    std::vector<int> counts(n);
    for (RgsStream s(n); s.next();) {
        const auto& w = s.word();
        std::fill(block_sizes.begin(), block_sizes.end(), 0);
        for (int letter : w)
            ++block_sizes[letter];
        std::fill(counts.begin(), counts.end(), 0);
        const int blocks = n == 0 ? 0 : s.prefix_max().back();
        for (int b = 1; b <= blocks; ++b)
            ++counts[block_sizes[b] - 1];
        ++tally[counts];
    }
    BellPolynomial out;
    for (const auto& [counts_key, number] : tally)
        out.add_term(BlockProfile{counts_key}.monomial(), BigInt(number));
    return out;
}

namespace {

void collect_partial(int n, int index, int remaining_weight, int remaining_blocks, std::vector<int>& r,
                     const BigInt& n_factorial, BellPolynomial& out)
{
    if (index == 0) {
        if (remaining_weight != 0 || remaining_blocks != 0)
            return;
        mpq_class coef(n_factorial);
        std::vector<std::pair<int, int>> powers;
        for (int i = 1; i <= n; ++i) {
            if (r[i] == 0)
                continue;
            BigInt block_factorial = factorial(i);
            BigInt den;
            mpz_pow_ui(den.get_mpz_t(), block_factorial.get_mpz_t(), static_cast<unsigned long>(r[i]));
            den *= factorial(r[i]);
            coef /= mpq_class(den);
            powers.emplace_back(i, r[i]);
        }
        coef.canonicalize();
        if (coef.get_den() != 1)
            throw NonIntegerCoefficient("partial Bell coefficient " + coef.get_str() + " at n=" + std::to_string(n));
        out.add_term(Monomial(std::move(powers)), coef.get_num());
        return;
    }
    // Each block of size `index` uses `index` elements; the smaller sizes
    // can absorb at most `index - 1` elements per remaining block.
    const int max_here = std::min(remaining_weight / index, remaining_blocks);
    for (int count = max_here; count >= 0; --count) {
        const int weight_left = remaining_weight - count * index;
        const int blocks_left = remaining_blocks - count;
        if (weight_left > blocks_left * (index - 1))
            break;
        if (weight_left < blocks_left)
            continue;
        r[index] = count;
        collect_partial(n, index - 1, weight_left, blocks_left, r, n_factorial, out);
    }
    r[index] = 0;
}

} // namespace

BellPolynomial partial_bell(int n, int r)
{
    if (n < 0 || r < 0 || r > n)
        throw IndexOutOfRange("partial Bell polynomial needs 0 <= r <= n, got n=" + std::to_string(n) +
                              ", r=" + std::to_string(r));
    BellPolynomial out;
    if (n == 0) {
        out.add_term(Monomial{}, 1);
        return out;
    }
    std::vector<int> counts(n + 1, 0);
    collect_partial(n, n, n, r, counts, factorial(n), out);
    return out;
}

BellPolynomial complete_bell_by_sum(int n)
{
    if (n < 0)
        throw NegativeIndex("complete Bell polynomial index must be nonnegative");
    BellPolynomial out;
    for (int r = 0; r <= n; ++r)
        out += partial_bell(n, r);
    return out;
}

std::vector<BigInt> complete_bell_values(int max, const WeightVector& w)
{
    if (max < 0)
        throw NegativeIndex("complete Bell polynomial index must be nonnegative");
    if (static_cast<int>(w.size()) < max)
        throw WeightVectorTooShort("need " + std::to_string(max) + " weights, got " + std::to_string(w.size()));
    std::vector<BigInt> values{1};
    for (int m = 0; m < max; ++m) {
        BigInt next = 0;
        for (int k = 0; k <= m; ++k)
            next += binomial(m, k) * w.t(k + 1) * values[m - k];
        values.push_back(next);
    }
    return values;
}

} // namespace bellcomb
