#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace ferrers {

// A set of canonical labels drawn from {1, ..., 64}, stored as one machine word.
// Label l lives in bit l-1.
class LabelSet {
public:
    static constexpr int kMaxLabel = 64;

    constexpr LabelSet() = default;
    LabelSet(std::initializer_list<int> labels);

    static constexpr LabelSet fromBits(std::uint64_t bits) {
        LabelSet s;
        s.bits_ = bits;
        return s;
    }
    // {1, ..., n}
    static LabelSet range(int n);
    static LabelSet fromVector(const std::vector<int>& labels);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    bool contains(int label) const {
        return label >= 1 && label <= kMaxLabel && ((bits_ >> (label - 1)) & 1u) != 0;
    }
    void insert(int label);
    void erase(int label);

    // Smallest / largest element; the set must be non-empty.
    int min() const { return std::countr_zero(bits_) + 1; }
    int max() const { return kMaxLabel - std::countl_zero(bits_); }

    constexpr bool subsetOf(LabelSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(LabelSet other) const { return (bits_ & other.bits_) == 0; }

    friend constexpr LabelSet operator|(LabelSet a, LabelSet b) { return fromBits(a.bits_ | b.bits_); }
    friend constexpr LabelSet operator&(LabelSet a, LabelSet b) { return fromBits(a.bits_ & b.bits_); }
    friend constexpr LabelSet operator-(LabelSet a, LabelSet b) { return fromBits(a.bits_ & ~b.bits_); }
    LabelSet& operator|=(LabelSet o) { bits_ |= o.bits_; return *this; }
    LabelSet& operator&=(LabelSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(LabelSet, LabelSet) = default;
    friend constexpr auto operator<=>(LabelSet a, LabelSet b) { return a.bits_ <=> b.bits_; }

    // Ascending order.
    std::vector<int> toVector() const;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_) + 1; }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        iterator operator++(int) { iterator t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) = default;
    private:
        std::uint64_t rest_ = 0;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

// "{1,3,8}"
std::string toString(LabelSet s);
std::ostream& operator<<(std::ostream& os, LabelSet s);

}  // namespace ferrers
