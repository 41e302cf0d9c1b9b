#pragma once

// Set partitions over arbitrary finite ground sets of positive integers,
// their restricted growth string (RGS) encoding, and streaming enumeration.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bellcomb {

using Element = int;
using Block = std::vector<Element>;

// Strictly increasing sequence of positive integers.
class GroundSet {
public:
    GroundSet() = default;

    // Accepts elements in any order; throws MalformedInput on duplicates or elements < 1.
    explicit GroundSet(std::vector<Element> elements);

    // [lo, hi]; empty when lo > hi.
    static GroundSet range(Element lo, Element hi);
    // [n] = {1, ..., n}.
    static GroundSet first(int n) { return range(1, n); }

    std::span<const Element> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(Element e) const;
    // True iff the set is [n] for n = size().
    bool is_initial_segment() const;

    // Set difference, this − other.
    GroundSet without(std::span<const Element> removed) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<Element> elements_;
};

// A partition of a GroundSet into nonempty blocks. Blocks are kept sorted
// internally and ordered by their minimum element, so equality is structural.
class SetPartition {
public:
    // The unique partition of the empty set.
    SetPartition() = default;

    // Ground set is the union of the blocks. Throws MalformedInput on empty
    // blocks, overlapping blocks or non-positive elements.
    explicit SetPartition(std::vector<Block> blocks);

    // As above, and additionally requires the union to equal `ground`.
    SetPartition(GroundSet ground, std::vector<Block> blocks);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t size() const { return ground_.size(); }

    bool has_singleton(Element e) const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks_ == b.blocks_; }
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.blocks_ <=> b.blocks_; }

private:
    GroundSet ground_;
    std::vector<Block> blocks_;
};

// Restricted growth string: w[0] = 1 and w[i] <= 1 + max(w[0..i-1]).
class Rgs {
public:
    Rgs() = default;
    // Throws InvalidRGS if the growth condition fails.
    explicit Rgs(std::vector<int> word);

    static bool is_valid(std::span<const int> word);

    const std::vector<int>& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    int operator[](std::size_t i) const { return word_[i]; }
    int block_count() const;

    friend bool operator==(const Rgs&, const Rgs&) = default;
    friend auto operator<=>(const Rgs&, const Rgs&) = default;

private:
    std::vector<int> word_;
};

// Streams all RGS of length n in lexicographic order:
//
//     for (RgsStream s(n); s.next();) use(s.word());
//
// Holds O(n) state; nothing is materialized.
class RgsStream {
public:
    explicit RgsStream(int n);

    bool next();
    const std::vector<int>& word() const { return word_; }
    // max(word[0..i]) for every i.
    const std::vector<int>& prefix_max() const { return prefix_max_; }
    int length() const { return n_; }

private:
    int n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> word_;
    std::vector<int> prefix_max_;
};

// Streams every partition of an arbitrary ground set exactly once. Internally
// the ground set is relabeled order-isomorphically onto [m] and the RGS stream
// drives the order, so the sequence is lexicographic in the relabeled RGS.
class PartitionStream {
public:
    explicit PartitionStream(GroundSet ground);

    bool next();
    const SetPartition& current() const { return current_; }
    // RGS of the current partition with respect to the relabeled ground.
    const std::vector<int>& word() const { return rgs_.word(); }

private:
    GroundSet ground_;
    RgsStream rgs_;
    SetPartition current_;
};

PartitionStream enumerate_partitions(GroundSet ground);

// Calls fn(partition) for every partition of ground.
void for_each_partition(const GroundSet& ground, const std::function<void(const SetPartition&)>& fn);

// The partition of ground whose i-th smallest element lies in block word[i].
SetPartition partition_from_word(const GroundSet& ground, std::span<const int> word);

// Requires p.ground() == [n]; throws NonContiguousGround otherwise.
Rgs to_rgs(const SetPartition& p);
SetPartition from_rgs(const Rgs& w);

// Elements e in [lo, hi] such that {e} is a block of p, ascending.
std::vector<Element> singletons_in(const SetPartition& p, Element lo, Element hi);

// Throws ElementNotInGround when e is not in p.ground().
const Block& block_containing(const SetPartition& p, Element e);

// Slash notation: "2/4,5/6,8,9/7". The empty partition renders as "{}".
std::string format_partition(const SetPartition& p);
// Inverse of format_partition; whitespace is ignored and "" or "{}" is the
// empty partition. Throws MalformedInput.
SetPartition parse_partition(std::string_view text);

// "{1,3}" style set rendering.
std::string format_set(std::span<const Element> elements);
// Comma separated element list, "" or "{}" for empty. Braces are optional.
std::vector<Element> parse_set(std::string_view text);

// Digit string when every letter is 1..9, comma separated otherwise.
std::string format_word(std::span<const int> word);
// Accepts both renderings produced by format_word. Throws MalformedInput.
std::vector<int> parse_word(std::string_view text);

} // namespace bellcomb
