#include "bellcomb/partitions.hpp"

#include "bellcomb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace bellcomb {

namespace {

std::string strip_spaces(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

int parse_positive(std::string_view token)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
        throw MalformedInput("expected a positive integer, got '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<Element> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    if (!elements_.empty() && elements_.front() < 1)
        throw MalformedInput("ground set elements must be positive");
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw MalformedInput("duplicate element in ground set");
}

GroundSet GroundSet::range(Element lo, Element hi)
{
    std::vector<Element> elements;
    for (Element e = lo; e <= hi; ++e)
        elements.push_back(e);
    return GroundSet(std::move(elements));
}

bool GroundSet::contains(Element e) const
{
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool GroundSet::is_initial_segment() const
{
    return elements_.empty() || elements_.back() == static_cast<Element>(elements_.size());
}

GroundSet GroundSet::without(std::span<const Element> removed) const
{
    std::vector<Element> sorted(removed.begin(), removed.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Element> rest;
    std::set_difference(elements_.begin(), elements_.end(), sorted.begin(), sorted.end(), std::back_inserter(rest));
    GroundSet g;
    g.elements_ = std::move(rest);
    return g;
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    std::vector<Element> all;
    for (auto& block : blocks_) {
        if (block.empty())
            throw MalformedInput("empty block");
        std::sort(block.begin(), block.end());
        all.insert(all.end(), block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    ground_ = GroundSet(std::move(all));
}

SetPartition::SetPartition(GroundSet ground, std::vector<Block> blocks) : SetPartition(std::move(blocks))
{
    if (!(ground_ == ground))
        throw MalformedInput("blocks do not cover the ground set exactly");
}

bool SetPartition::has_singleton(Element e) const
{
    for (const auto& block : blocks_)
        if (block.size() == 1 && block.front() == e)
            return true;
    return false;
}

// ---------------------------------------------------------------------------
// Rgs

Rgs::Rgs(std::vector<int> word) : word_(std::move(word))
{
    if (!is_valid(word_))
        throw InvalidRGS("'" + format_word(word_) + "' violates the restricted growth condition");
}

bool Rgs::is_valid(std::span<const int> word)
{
    int max = 0;
    for (int letter : word) {
        if (letter < 1 || letter > max + 1)
            return false;
        max = std::max(max, letter);
    }
    return true;
}

int Rgs::block_count() const
{
    return word_.empty() ? 0 : *std::max_element(word_.begin(), word_.end());
}

// ---------------------------------------------------------------------------
// Enumeration

RgsStream::RgsStream(int n) : n_(n)
{
    if (n < 0)
        throw NegativeIndex("RGS length must be nonnegative");
}

bool RgsStream::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        word_.assign(n_, 1);
        prefix_max_.assign(n_, 1);
        return true;
    }
    // Rightmost position that can still grow; position 0 is pinned to 1.
    for (int i = n_ - 1; i >= 1; --i) {
        if (word_[i] <= prefix_max_[i - 1]) {
            ++word_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], word_[i]);
            for (int k = i + 1; k < n_; ++k) {
                word_[k] = 1;
                prefix_max_[k] = prefix_max_[i];
            }
            return true;
        }
    }
    done_ = true;
    return false;
}

PartitionStream::PartitionStream(GroundSet ground)
    : ground_(std::move(ground)), rgs_(static_cast<int>(ground_.size()))
{
}

bool PartitionStream::next()
{
    if (!rgs_.next())
        return false;
    current_ = partition_from_word(ground_, rgs_.word());
    return true;
}

PartitionStream enumerate_partitions(GroundSet ground)
{
    return PartitionStream(std::move(ground));
}

void for_each_partition(const GroundSet& ground, const std::function<void(const SetPartition&)>& fn)
{
    for (PartitionStream s(ground); s.next();)
        fn(s.current());
}

SetPartition partition_from_word(const GroundSet& ground, std::span<const int> word)
{
    if (word.size() != ground.size())
        throw MalformedInput("word length does not match ground set size");
    if (!Rgs::is_valid(word))
        throw InvalidRGS("'" + format_word(word) + "' violates the restricted growth condition");
    const auto elements = ground.elements();
    int blocks = 0;
    for (int letter : word)
        blocks = std::max(blocks, letter);
    std::vector<Block> out(blocks);
    for (std::size_t i = 0; i < word.size(); ++i)
        out[word[i] - 1].push_back(elements[i]);
    return SetPartition(std::move(out));
}

Rgs to_rgs(const SetPartition& p)
{
    if (!p.ground().is_initial_segment())
        throw NonContiguousGround("RGS encoding needs ground [n]");
    std::vector<int> word(p.size());
    int index = 1;
    for (const auto& block : p.blocks()) {
        for (Element e : block)
            word[e - 1] = index;
        ++index;
    }
    return Rgs(std::move(word));
}

SetPartition from_rgs(const Rgs& w)
{
    return partition_from_word(GroundSet::first(static_cast<int>(w.size())), w.word());
}

std::vector<Element> singletons_in(const SetPartition& p, Element lo, Element hi)
{
    std::vector<Element> out;
    for (const auto& block : p.blocks())
        if (block.size() == 1 && block.front() >= lo && block.front() <= hi)
            out.push_back(block.front());
    std::sort(out.begin(), out.end());
    return out;
}

const Block& block_containing(const SetPartition& p, Element e)
{
    for (const auto& block : p.blocks())
        if (std::binary_search(block.begin(), block.end(), e))
            return block;
    throw ElementNotInGround(std::to_string(e) + " is not in the ground set");
}

// ---------------------------------------------------------------------------
// Text forms

std::string format_partition(const SetPartition& p)
{
    if (p.block_count() == 0)
        return "{}";
    std::string out;
    for (const auto& block : p.blocks()) {
        if (!out.empty())
            out += '/';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(block[i]);
        }
    }
    return out;
}

SetPartition parse_partition(std::string_view text)
{
    const std::string s = strip_spaces(text);
    if (s.empty() || s == "{}")
        return SetPartition{};
    std::vector<Block> blocks;
    for (auto block_text : split(s, '/')) {
        if (block_text.empty())
            throw MalformedInput("empty block in partition spec '" + s + "'");
        Block block;
        for (auto token : split(block_text, ','))
            block.push_back(parse_positive(token));
        blocks.push_back(std::move(block));
    }
    return SetPartition(std::move(blocks));
}

std::string format_set(std::span<const Element> elements)
{
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(elements[i]);
    }
    return out + "}";
}

std::vector<Element> parse_set(std::string_view text)
{
    std::string s = strip_spaces(text);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}')
        s = s.substr(1, s.size() - 2);
    std::vector<Element> out;
    if (s.empty())
        return out;
    for (auto token : split(s, ','))
        out.push_back(parse_positive(token));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw MalformedInput("duplicate element in set '" + s + "'");
    return out;
}

std::string format_word(std::span<const int> word)
{
    const bool digits = std::all_of(word.begin(), word.end(), [](int x) { return x >= 1 && x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!digits && i)
            out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

std::vector<int> parse_word(std::string_view text)
{
    const std::string s = strip_spaces(text);
    std::vector<int> out;
    if (s.empty())
        return out;
    if (s.find(',') != std::string::npos) {
        for (auto token : split(s, ','))
            out.push_back(parse_positive(token));
        return out;
    }
    for (char c : s) {
        if (c < '1' || c > '9')
            throw MalformedInput("word letters must be digits 1-9 or comma separated, got '" + s + "'");
        out.push_back(c - '0');
    }
    return out;
}

} // namespace bellcomb
