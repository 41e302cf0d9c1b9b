#include "bellcomb/involutions.hpp"

#include "bellcomb/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bellcomb {

namespace {

void require_cell(int n, int j)
{
    if (j < 0 || j > n)
        throw IndexOutOfRange("need 0 <= j <= n, got n=" + std::to_string(n) + ", j=" + std::to_string(j));
}

bool contains(const std::vector<Element>& sorted, Element e)
{
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

std::vector<Block> blocks_without_singletons_in(const SetPartition& p, Element lo, Element hi,
                                                std::vector<Element>& removed)
{
    std::vector<Block> kept;
    for (const auto& block : p.blocks()) {
        if (block.size() == 1 && block.front() >= lo && block.front() <= hi)
            removed.push_back(block.front());
        else
            kept.push_back(block);
    }
    return kept;
}

void require_ground(const SetPartition& p, const GroundSet& expected, const char* what)
{
    if (!(p.ground() == expected))
        throw MalformedInput(std::string(what) + " has the wrong ground set");
}

void require_no_singleton_in(const SetPartition& p, int j)
{
    const auto s = singletons_in(p, 1, j);
    if (!s.empty())
        throw PreconditionViolated("partition " + format_partition(p) + " has singleton {" +
                                   std::to_string(s.front()) + "} inside [" + std::to_string(j) + "]");
}

int sign_of(int i)
{
    return i % 2 == 0 ? 1 : -1;
}

} // namespace

// ---------------------------------------------------------------------------
// Signed pairs and the involution

SignedPair::SignedPair(int n, int j, std::vector<Element> subset, SetPartition pi)
    : n_(n), j_(j), subset_(std::move(subset)), pi_(std::move(pi))
{
    if (j < 0 || j > n)
        throw MalformedInput("need 0 <= j <= n, got n=" + std::to_string(n) + ", j=" + std::to_string(j));
    std::sort(subset_.begin(), subset_.end());
    if (std::adjacent_find(subset_.begin(), subset_.end()) != subset_.end())
        throw MalformedInput("S has a repeated element");
    for (Element e : subset_)
        if (e < 1 || e > j)
            throw MalformedInput("S must be a subset of [" + std::to_string(j) + "], got " + format_set(subset_));
    if (!(pi_.ground() == GroundSet::first(n + 1).without(subset_)))
        throw MalformedInput("pi must partition [" + std::to_string(n + 1) + "] - S");
}

std::optional<Element> phi_pivot(const SignedPair& lambda)
{
    for (Element l = lambda.j(); l >= 1; --l)
        if (contains(lambda.subset(), l) || lambda.partition().has_singleton(l))
            return l;
    return std::nullopt;
}

PhiResult phi(const SignedPair& lambda)
{
    const auto pivot = phi_pivot(lambda);
    if (!pivot)
        return FixedPoint{};
    const Element l = *pivot;
    std::vector<Element> subset = lambda.subset();
    std::vector<Block> blocks = lambda.partition().blocks();
    if (contains(subset, l)) {
        subset.erase(std::find(subset.begin(), subset.end(), l));
        blocks.push_back({l});
    } else {
        blocks.erase(std::find(blocks.begin(), blocks.end(), Block{l}));
        subset.push_back(l);
    }
    return SignedPair(lambda.n(), lambda.j(), std::move(subset), SetPartition(std::move(blocks)));
}

bool is_fixed(const PhiResult& r)
{
    return std::holds_alternative<FixedPoint>(r);
}

// ---------------------------------------------------------------------------
// Carrier enumeration

CarrierStream::CarrierStream(int n, int j) : n_(n), j_(j)
{
    require_cell(n, j);
    if (n > kCarrierCeiling)
        throw SizeTooLarge("carrier enumeration at n=" + std::to_string(n) + " exceeds ceiling " +
                           std::to_string(kCarrierCeiling));
}

bool CarrierStream::advance_subset()
{
    if (started_)
        ++mask_;
    started_ = true;
    if (mask_ >= (1UL << j_))
        return false;
    subset_.clear();
    for (int bit = 0; bit < j_; ++bit)
        if (mask_ & (1UL << bit))
            subset_.push_back(bit + 1);
    partitions_.emplace(GroundSet::first(n_ + 1).without(subset_));
    return true;
}

bool CarrierStream::next()
{
    if (!started_ && !advance_subset())
        return false;
    while (true) {
        if (partitions_ && partitions_->next())
            return true;
        if (!advance_subset()) {
            partitions_.reset();
            return false;
        }
    }
}

SignedPair CarrierStream::current() const
{
    return SignedPair(n_, j_, subset_, partitions_->current());
}

CarrierStream enumerate_carrier(int n, int j)
{
    return CarrierStream(n, j);
}

// ---------------------------------------------------------------------------
// Psi

SetPartition psi_forward(int n, int j, const std::vector<Element>& T, const SetPartition& rho)
{
    if (j < 0 || j > n)
        throw MalformedInput("need 0 <= j <= n");
    std::vector<Element> t = T;
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw MalformedInput("T has a repeated element");
    for (Element e : t)
        if (e <= j || e > n)
            throw MalformedInput("T must lie in [" + std::to_string(j + 1) + "," + std::to_string(n) + "]");
    require_ground(rho, GroundSet::first(n).without(t), "rho");

    std::vector<Element> collected = t;
    auto blocks = blocks_without_singletons_in(rho, 1, j, collected);
    collected.push_back(n + 1);
    blocks.push_back(std::move(collected));
    return SetPartition(std::move(blocks));
}

PsiPreimage psi_inverse(int n, int j, const SetPartition& p)
{
    if (j < 0 || j > n)
        throw MalformedInput("need 0 <= j <= n");
    require_ground(p, GroundSet::first(n + 1), "p");
    require_no_singleton_in(p, j);

    PsiPreimage out;
    std::vector<Block> blocks;
    for (const auto& block : p.blocks()) {
        if (block.back() != n + 1) {
            blocks.push_back(block);
            continue;
        }
        for (Element e : block) {
            if (e <= j)
                blocks.push_back({e});
            else if (e <= n)
                out.T.push_back(e);
        }
    }
    out.rho = SetPartition(std::move(blocks));
    return out;
}

// ---------------------------------------------------------------------------
// Singleton-collecting bijections

SetPartition cor1_bijection(int j, const SetPartition& src)
{
    require_ground(src, GroundSet::first(j), "source");
    std::vector<Element> collected;
    auto blocks = blocks_without_singletons_in(src, 1, j, collected);
    collected.push_back(j + 1);
    blocks.push_back(std::move(collected));
    return SetPartition(std::move(blocks));
}

SetPartition cor1_inverse(int j, const SetPartition& p)
{
    require_ground(p, GroundSet::first(j + 1), "p");
    require_no_singleton_in(p, j);
    std::vector<Block> blocks;
    for (const auto& block : p.blocks()) {
        if (block.back() != j + 1) {
            blocks.push_back(block);
            continue;
        }
        for (Element e : block)
            if (e != j + 1)
                blocks.push_back({e});
    }
    return SetPartition(std::move(blocks));
}

SetPartition cor2_bijection_forward(int j, const Cor2Source& src)
{
    std::vector<Element> collected;
    std::vector<Block> blocks;
    if (src.origin == Cor2Origin::partitions_of_j) {
        require_ground(src.partition, GroundSet::first(j), "source");
        blocks = blocks_without_singletons_in(src.partition, 1, j, collected);
        collected.push_back(j + 1);
    } else {
        require_ground(src.partition, GroundSet::first(j + 1), "source");
        blocks = blocks_without_singletons_in(src.partition, 1, j, collected);
    }
    collected.push_back(j + 2);
    blocks.push_back(std::move(collected));
    return SetPartition(std::move(blocks));
}

Cor2Source cor2_bijection_inverse(int j, const SetPartition& p)
{
    require_ground(p, GroundSet::first(j + 2), "p");
    require_no_singleton_in(p, j);
    const Block& top = block_containing(p, j + 2);
    const bool shared = std::binary_search(top.begin(), top.end(), j + 1);
    std::vector<Block> blocks;
    for (const auto& block : p.blocks()) {
        if (block.back() != j + 2) {
            blocks.push_back(block);
            continue;
        }
        for (Element e : block)
            if (e <= j)
                blocks.push_back({e});
    }
    return Cor2Source{shared ? Cor2Origin::partitions_of_j : Cor2Origin::partitions_of_j_plus_1,
                      SetPartition(std::move(blocks))};
}

// ---------------------------------------------------------------------------
// C/D classes

bool in_cd_class(const SetPartition& p, int j, const ClassLabel& label)
{
    if (j < 2)
        throw IndexOutOfRange("C/D classes need j >= 2");
    if (label.index < 1 || label.index > j - 1)
        throw IndexOutOfRange("class subscript must lie in [1," + std::to_string(j - 1) + "]");
    require_ground(p, GroundSet::first(j), "p");
    // Length of the singleton-free prefix.
    const int free_prefix = label.kind == CdKind::C ? label.index + 1 : label.index;
    for (Element e = 1; e <= j; ++e) {
        const bool singleton = p.has_singleton(e);
        if (e <= free_prefix ? singleton : !singleton)
            return false;
    }
    return true;
}

std::optional<ClassLabel> classify_cd(const SetPartition& p, int j)
{
    if (j < 2)
        throw IndexOutOfRange("C/D classes need j >= 2");
    require_ground(p, GroundSet::first(j), "p");
    int trailing = 0;
    while (trailing < j && p.has_singleton(j - trailing))
        ++trailing;
    if (!singletons_in(p, 1, j - trailing).empty())
        return std::nullopt;
    // trailing == k; C_{j-1-k} exists for k <= j-2.
    if (trailing > j - 2)
        return std::nullopt;
    return ClassLabel{CdKind::C, j - 1 - trailing};
}

std::vector<SetPartition> cd_class_members(int j, const ClassLabel& label)
{
    std::vector<SetPartition> out;
    for (PartitionStream s(GroundSet::first(j)); s.next();)
        if (in_cd_class(s.current(), j, label))
            out.push_back(s.current());
    return out;
}

// ---------------------------------------------------------------------------
// Weighted version

SignedMonomial weighted_weight(const SignedPair& lambda)
{
    const auto profile = block_profile(lambda.partition());
    const int extra_t1 = static_cast<int>(lambda.subset().size());
    return {lambda.sign(), profile.monomial() * Monomial::variable(1, extra_t1)};
}

namespace {

// Signed number of carrier elements per exponent vector (e_1, e_2, ...),
// where e_1 already includes |S|.
std::map<std::vector<int>, long> tally_carrier(int n, int j)
{
    require_cell(n, j);
    std::map<std::vector<int>, long> tally;
    std::vector<int> exponents(n + 1);
    std::vector<int> sizes(n + 2);
    for (unsigned long mask = 0; mask < (1UL << j); ++mask) {
        const int s = __builtin_popcountl(mask);
        const int m = n + 1 - s;
        const int sign = sign_of(s);
        // Block sizes depend only on the RGS, not on which elements carry it.
        for (RgsStream rgs(m); rgs.next();) {
            const auto& w = rgs.word();
            const int blocks = rgs.prefix_max().back();
            std::fill(sizes.begin(), sizes.begin() + blocks + 1, 0);
            for (int letter : w)
                ++sizes[letter];
            std::fill(exponents.begin(), exponents.end(), 0);
            exponents[0] = s;
            for (int b = 1; b <= blocks; ++b)
                ++exponents[sizes[b] - 1];
            tally[exponents] += sign;
        }
    }
    return tally;
}

Monomial monomial_from_exponents(const std::vector<int>& exponents)
{
    return BlockProfile{exponents}.monomial();
}

} // namespace

BellPolynomial weighted_carrier_sum(int n, int j)
{
    require_cell(n, j);
    if (n > kSymbolicCarrierCeiling)
        throw SizeTooLarge("symbolic carrier sweep at n=" + std::to_string(n) + " exceeds ceiling " +
                           std::to_string(kSymbolicCarrierCeiling));
    BellPolynomial out;
    for (const auto& [exponents, count] : tally_carrier(n, j))
        out.add_term(monomial_from_exponents(exponents), BigInt(count));
    return out;
}

std::vector<BigInt> weighted_carrier_values(int n, int j, const std::vector<WeightVector>& weights)
{
    require_cell(n, j);
    if (n > kNumericCarrierCeiling)
        throw SizeTooLarge("numeric carrier sweep at n=" + std::to_string(n) + " exceeds ceiling " +
                           std::to_string(kNumericCarrierCeiling));
    BellPolynomial collected;
    for (const auto& [exponents, count] : tally_carrier(n, j))
        collected.add_term(monomial_from_exponents(exponents), BigInt(count));
    std::vector<BigInt> out;
    out.reserve(weights.size());
    for (const auto& w : weights)
        out.push_back(collected.evaluate(w));
    return out;
}

BellPolynomial lhs_thm2(int n, int j)
{
    require_cell(n, j);
    BellPolynomial out;
    for (int i = 0; i <= j; ++i)
        out += complete_bell_by_sum(n + 1 - i).times(Monomial::variable(1, i), sign_of(i) * binomial(j, i));
    return out;
}

BellPolynomial rhs_thm2(int n, int j)
{
    require_cell(n, j);
    std::vector<BellPolynomial> complete;
    for (int m = 0; m <= n; ++m)
        complete.push_back(complete_bell_by_sum(m));
    BellPolynomial out;
    for (int k = 0; k <= n - j; ++k)
        for (int l = 0; l <= j; ++l)
            for (int r = 0; r <= j - l; ++r) {
                const int rest = n - k - l - r;
                if (rest < 0)
                    continue;
                const BigInt coef = sign_of(r) * binomial(n - j, k) * binomial(j, l) * binomial(j - l, r);
                const Monomial m = Monomial::variable(1, r) * Monomial::variable(k + l + 1);
                out += complete[rest].times(m, coef);
            }
    return out;
}

BigInt lhs_thm2_value(int n, int j, const WeightVector& w)
{
    require_cell(n, j);
    const auto complete = complete_bell_values(n + 1, w);
    BigInt sum = 0;
    BigInt t1_power = 1;
    for (int i = 0; i <= j; ++i) {
        sum += sign_of(i) * t1_power * binomial(j, i) * complete[n + 1 - i];
        t1_power *= w.t(1);
    }
    return sum;
}

BigInt rhs_thm2_value(int n, int j, const WeightVector& w)
{
    require_cell(n, j);
    const auto complete = complete_bell_values(n + 1, w);
    BigInt sum = 0;
    for (int k = 0; k <= n - j; ++k)
        for (int l = 0; l <= j; ++l) {
            BigInt t1_power = 1;
            for (int r = 0; r <= j - l; ++r) {
                const int rest = n - k - l - r;
                if (rest >= 0)
                    sum += sign_of(r) * t1_power * w.t(k + l + 1) * binomial(n - j, k) * binomial(j, l) *
                           binomial(j - l, r) * complete[rest];
                t1_power *= w.t(1);
            }
        }
    return sum;
}

} // namespace bellcomb
