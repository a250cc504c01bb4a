#pragma once

// Tournaments on {1..n}, alternating cycles, and the staircase coding of a
// tournament as a 0-1 filling of S_{n-1}.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ferrers/fillings.hpp"

namespace ferrers {

class Tournament {
public:
    static constexpr int kMaxVertices = 32;
    // Largest n whose pair bitmask fits in 64 bits.
    static constexpr int kMaxMaskVertices = 11;

    // n vertices, every edge oriented i -> j for i < j.
    explicit Tournament(int n);

    // Bit t of `mask` describes the t-th pair (i<j) in lexicographic order
    // (1,2),(1,3),...,(1,n),(2,3),...; a set bit means i -> j.
    static Tournament fromMask(int n, std::uint64_t mask);
    // Every unordered pair must appear exactly once as (tail, head).
    static Tournament fromEdges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    bool beats(int tail, int head) const;
    // Orients the edge between a and b as a -> b.
    void orient(int tail, int head);
    std::uint64_t toMask() const;
    // All n(n-1)/2 edges as (tail, head), ordered by the lexicographic pair order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    int n_ = 0;
    std::vector<std::uint32_t> out_;  // out_[v-1] bit u-1 set iff v -> u
};

// Tournament pair (row label a in 2..n, column label b in 1..n-1, b < a) of
// the staircase coding, converted to the library's cell convention on S_{n-1}.
Cell staircaseCell(int n, int a, int b);

// Cell (a,b) is 0 when a -> b and 1 when b -> a. The empty shape stands in
// for S_0 when n = 1.
Filling staircaseEncode(const Tournament& t);
Tournament staircaseDecode(const Filling& f);

// No alternating cycle of length 4.
bool isAlternationAcyclic(const Tournament& t);

// Some simple alternating cycle (v0,...,v_{2k-1}) with v0 -> v1 a descent and
// v1 -> v2 an ascent, of any even length, or nullopt if none exists.
std::optional<std::vector<int>> findAlternatingCycle(const Tournament& t);
bool isAlternatingCycle(const Tournament& t, const std::vector<int>& cycle);

// Every i < n is the tail of some ascent i -> j, j > i.
bool isAscending(const Tournament& t);
// Every i > 1 is the head of some ascent j -> i, j < i.
bool hasAllAscentEndpoints(const Tournament& t);

}  // namespace ferrers
