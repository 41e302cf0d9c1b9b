#pragma once

// Executable bijective proofs of the alternating Bell-number identities:
// the singleton-toggling involution on signed pairs (S, pi), the map Psi onto
// its fixed points, the block-weighted version, the two singleton-collecting
// bijections and the C/D class bookkeeping.

#include "bellcomb/bellpoly.hpp"
#include "bellcomb/numbers.hpp"
#include "bellcomb/partitions.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace bellcomb {

// Largest n for which the carrier of signed pairs may be enumerated.
inline constexpr int kCarrierCeiling = 12;
// Largest n for a symbolic weighted-carrier sweep.
inline constexpr int kSymbolicCarrierCeiling = 7;
// Largest n for numeric weighted-carrier sums.
inline constexpr int kNumericCarrierCeiling = 10;

// lambda = (S, pi) with S a subset of [j] and pi a partition of [n+1] - S.
// pi keeps the literal element names of its ground set.
class SignedPair {
public:
    // Throws MalformedInput unless 0 <= j <= n, S is in [j] and pi.ground() == [n+1] - S.
    SignedPair(int n, int j, std::vector<Element> subset, SetPartition pi);

    int n() const { return n_; }
    int j() const { return j_; }
    const std::vector<Element>& subset() const { return subset_; }
    const SetPartition& partition() const { return pi_; }
    // (-1)^|S|
    int sign() const { return subset_.size() % 2 == 0 ? 1 : -1; }

    friend bool operator==(const SignedPair&, const SignedPair&) = default;

private:
    int n_;
    int j_;
    std::vector<Element> subset_;
    SetPartition pi_;
};

struct FixedPoint {
    friend bool operator==(FixedPoint, FixedPoint) { return true; }
};

using PhiResult = std::variant<SignedPair, FixedPoint>;

// Largest l in [j] with l in S or {l} a block of pi; nullopt for fixed points.
std::optional<Element> phi_pivot(const SignedPair& lambda);

// Moves the pivot between S and a singleton block of pi.
PhiResult phi(const SignedPair& lambda);

bool is_fixed(const PhiResult& r);

// Streams the carrier of all (S, pi) for given (n, j): subsets S in
// binary-counter order (bit i-1 set means i is in S), then partitions of
// [n+1] - S in RGS order.
class CarrierStream {
public:
    // Throws IndexOutOfRange unless 0 <= j <= n, SizeTooLarge past kCarrierCeiling.
    CarrierStream(int n, int j);

    bool next();
    SignedPair current() const;
    const std::vector<Element>& subset() const { return subset_; }
    const SetPartition& partition() const { return partitions_->current(); }
    // RGS of the current partition relative to its ground set.
    const std::vector<int>& word() const { return partitions_->word(); }

private:
    bool advance_subset();

    int n_;
    int j_;
    unsigned long mask_ = 0;
    bool started_ = false;
    std::vector<Element> subset_;
    std::optional<PartitionStream> partitions_;
};

CarrierStream enumerate_carrier(int n, int j);

// Builds a partition of [n+1] with no singleton in [j] from T in [j+1, n] and
// a partition rho of [n] - T: the block of n+1 collects T and the singletons
// of rho lying in [j].
SetPartition psi_forward(int n, int j, const std::vector<Element>& T, const SetPartition& rho);

struct PsiPreimage {
    std::vector<Element> T;
    SetPartition rho;

    friend bool operator==(const PsiPreimage&, const PsiPreimage&) = default;
};

// Throws PreconditionViolated if p has a singleton block inside [j].
PsiPreimage psi_inverse(int n, int j, const SetPartition& p);

// Collects the singletons of a partition of [j] into one block with j+1.
SetPartition cor1_bijection(int j, const SetPartition& src);
// Splits the block of j+1 back into singletons. Throws PreconditionViolated
// if p has a singleton inside [j].
SetPartition cor1_inverse(int j, const SetPartition& p);

enum class Cor2Origin { partitions_of_j, partitions_of_j_plus_1 };

struct Cor2Source {
    Cor2Origin origin;
    SetPartition partition;

    friend bool operator==(const Cor2Source&, const Cor2Source&) = default;
};

// From a partition of [j]: its singletons join a new block {j+1, j+2}.
// From a partition of [j+1]: its singletons inside [j] join a new block with j+2.
// The two images are told apart by whether j+1 and j+2 share a block.
SetPartition cor2_bijection_forward(int j, const Cor2Source& src);
Cor2Source cor2_bijection_inverse(int j, const SetPartition& p);

// C_m: no singleton in [m+1] and every element of [m+2, j] a singleton.
// D_m: no singleton in [m] and every element of [m+1, j] a singleton.
// Subscripts run over 1 <= m <= j-1. Note D_m = C_{m-1} as sets.
enum class CdKind { C, D };

struct ClassLabel {
    CdKind kind;
    int index; // the subscript m = j-1-k

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

bool in_cd_class(const SetPartition& p, int j, const ClassLabel& label);

// The C class containing p, if any. D classes are never reported since each
// nonempty D_m coincides with C_{m-1}. Throws IndexOutOfRange for j < 2.
std::optional<ClassLabel> classify_cd(const SetPartition& p, int j);

// Literal member list of one class, in RGS order.
std::vector<SetPartition> cd_class_members(int j, const ClassLabel& label);

// (-1)^|S| t1^(|S| + s1(pi)) prod_{i>=2} t_i^(s_i(pi))
struct SignedMonomial {
    int sign;
    Monomial monomial;

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

SignedMonomial weighted_weight(const SignedPair& lambda);

// Sum of weighted_weight over the carrier. Throws SizeTooLarge past
// kSymbolicCarrierCeiling.
BellPolynomial weighted_carrier_sum(int n, int j);

// Numeric carrier sums for each weight vector. Throws SizeTooLarge past
// kNumericCarrierCeiling.
std::vector<BigInt> weighted_carrier_values(int n, int j, const std::vector<WeightVector>& weights);

// sum_{i=0}^{j} (-1)^i t1^i C(j,i) B_{n+1-i}
BellPolynomial lhs_thm2(int n, int j);
// sum_{k,l,r} (-1)^r t1^r t_{k+l+1} C(n-j,k) C(j,l) C(j-l,r) B_{n-k-l-r}
BellPolynomial rhs_thm2(int n, int j);

// Same two sides evaluated numerically from complete_bell_values.
BigInt lhs_thm2_value(int n, int j, const WeightVector& w);
BigInt rhs_thm2_value(int n, int j, const WeightVector& w);

} // namespace bellcomb
