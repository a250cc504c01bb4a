#include "ferrers/tournaments.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "ferrers/error.hpp"

namespace ferrers {

namespace {

void checkVertex(int n, int v) {
    if (v < 1 || v > n) {
        throw ValidationError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

Tournament::Tournament(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw ValidationError("tournament size " + std::to_string(n) + " outside 0.." +
                              std::to_string(kMaxVertices));
    }
    out_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) out_[static_cast<std::size_t>(i - 1)] |= std::uint32_t{1} << (j - 1);
    }
}

Tournament Tournament::fromMask(int n, std::uint64_t mask) {
    if (n > kMaxMaskVertices) {
        throw CapExceeded("bitmask form supports at most " + std::to_string(kMaxMaskVertices) + " vertices");
    }
    Tournament t(n);
    const int pairs = n * (n - 1) / 2;
    if (pairs < 64 && (mask >> pairs) != 0) {
        throw ValidationError("bitmask has bits beyond the " + std::to_string(pairs) + " pairs");
    }
    int bit = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j, ++bit) {
            if ((mask >> bit) & 1u) {
                t.orient(i, j);
            } else {
                t.orient(j, i);
            }
        }
    }
    return t;
}

Tournament Tournament::fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
    Tournament t(n);
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n) + 1,
                                        std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (auto [tail, head] : edges) {
        checkVertex(n, tail);
        checkVertex(n, head);
        if (tail == head) throw ValidationError("tournaments have no loops");
        const auto lo = static_cast<std::size_t>(std::min(tail, head));
        const auto hi = static_cast<std::size_t>(std::max(tail, head));
        if (seen[lo][hi]) {
            throw ValidationError("pair {" + std::to_string(lo) + "," + std::to_string(hi) + "} given twice");
        }
        seen[lo][hi] = true;
        t.orient(tail, head);
    }
    const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (edges.size() != expected) {
        throw ValidationError("tournament on " + std::to_string(n) + " vertices needs " +
                              std::to_string(expected) + " edges, got " + std::to_string(edges.size()));
    }
    return t;
}

bool Tournament::beats(int tail, int head) const {
    checkVertex(n_, tail);
    checkVertex(n_, head);
    return ((out_[static_cast<std::size_t>(tail - 1)] >> (head - 1)) & 1u) != 0;
}

void Tournament::orient(int tail, int head) {
    checkVertex(n_, tail);
    checkVertex(n_, head);
    if (tail == head) throw ValidationError("tournaments have no loops");
    out_[static_cast<std::size_t>(tail - 1)] |= std::uint32_t{1} << (head - 1);
    out_[static_cast<std::size_t>(head - 1)] &= ~(std::uint32_t{1} << (tail - 1));
}

std::uint64_t Tournament::toMask() const {
    if (n_ > kMaxMaskVertices) {
        throw CapExceeded("bitmask form supports at most " + std::to_string(kMaxMaskVertices) + " vertices");
    }
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j, ++bit) {
            if (beats(i, j)) mask |= std::uint64_t{1} << bit;
        }
    }
    return mask;
}

std::vector<std::pair<int, int>> Tournament::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            out.push_back(beats(i, j) ? std::pair{i, j} : std::pair{j, i});
        }
    }
    return out;
}

// Rows of S_{n-1} carry tournament labels 2..n from top to bottom and columns
// 1..n-1 from left to right.
Cell staircaseCell(int n, int a, int b) {
    if (b < 1 || b >= a || a > n) {
        throw ValidationError("(" + std::to_string(a) + "," + std::to_string(b) +
                              ") is not a staircase cell for n=" + std::to_string(n));
    }
    return {n + 1 - a, n - b};
}

Filling staircaseEncode(const Tournament& t) {
    const int n = t.size();
    if (n < 1) throw ValidationError("staircase coding needs at least one vertex");
    FerrersShape shape = n == 1 ? FerrersShape{} : staircase(n - 1);
    Filling f(shape);
    for (int a = 2; a <= n; ++a) {
        for (int b = 1; b < a; ++b) {
            const Cell c = staircaseCell(n, a, b);
            f.set(c.row, c.col, t.beats(b, a));
        }
    }
    return f;
}

Tournament staircaseDecode(const Filling& f) {
    const FerrersShape* shape = f.ferrers();
    if (shape == nullptr) throw ValidationError("staircase decoding needs a staircase filling");
    const int m = shape->rows();
    if (!(*shape == (m == 0 ? FerrersShape{} : staircase(m)))) {
        throw ValidationError("shape " + shape->partition().toString() + " is not a staircase");
    }
    const int n = m + 1;
    Tournament t(n);
    for (int a = 2; a <= n; ++a) {
        for (int b = 1; b < a; ++b) {
            const Cell c = staircaseCell(n, a, b);
            if (f.at(c.row, c.col)) {
                t.orient(b, a);
            } else {
                t.orient(a, b);
            }
        }
    }
    return t;
}

bool isAlternationAcyclic(const Tournament& t) {
    const int n = t.size();
    // v0 -d-> v1 -a-> v2 -d-> v3 -a-> v0: v1 < v0, v1 < v2, v3 < v2, v3 < v0.
    for (int v0 = 1; v0 <= n; ++v0) {
        for (int v1 = 1; v1 < v0; ++v1) {
            if (!t.beats(v0, v1)) continue;
            for (int v2 = v1 + 1; v2 <= n; ++v2) {
                if (v2 == v0 || !t.beats(v1, v2)) continue;
                for (int v3 = 1; v3 < std::min(v0, v2); ++v3) {
                    if (v3 == v1) continue;
                    if (t.beats(v2, v3) && t.beats(v3, v0)) return false;
                }
            }
        }
    }
    return true;
}

bool isAlternatingCycle(const Tournament& t, const std::vector<int>& cycle) {
    const std::size_t len = cycle.size();
    if (len < 4 || len % 2 != 0) return false;
    std::uint64_t seen = 0;
    for (int v : cycle) {
        if (v < 1 || v > t.size() || ((seen >> (v - 1)) & 1u)) return false;
        seen |= std::uint64_t{1} << (v - 1);
    }
    for (std::size_t i = 0; i < len; ++i) {
        const int from = cycle[i];
        const int to = cycle[(i + 1) % len];
        if (!t.beats(from, to)) return false;
        const bool descent = from > to;
        if (descent != (i % 2 == 0)) return false;
    }
    return true;
}

std::optional<std::vector<int>> findAlternatingCycle(const Tournament& t) {
    const int n = t.size();
    // Depth-first search over simple alternating paths. Position parity 0
    // leaves by a descent, parity 1 by an ascent; every alternating cycle has
    // a vertex at parity 0, so trying each start vertex is exhaustive.
    std::vector<int> path;
    std::uint64_t onPath = 0;
    int start = 0;
    std::function<bool(int, int)> dfs = [&](int v, int parity) -> bool {
        for (int u = 1; u <= n; ++u) {
            if (u == v || !t.beats(v, u)) continue;
            if ((u < v) != (parity == 0)) continue;
            if (u == start) {
                if (parity == 1) return true;  // closed by an ascent: even length
                continue;
            }
            if ((onPath >> (u - 1)) & 1u) continue;
            onPath |= std::uint64_t{1} << (u - 1);
            path.push_back(u);
            if (dfs(u, 1 - parity)) return true;
            path.pop_back();
            onPath &= ~(std::uint64_t{1} << (u - 1));
        }
        return false;
    };
    for (start = 1; start <= n; ++start) {
        path.assign(1, start);
        onPath = std::uint64_t{1} << (start - 1);
        if (dfs(start, 0)) return path;
    }
    return std::nullopt;
}

bool isAscending(const Tournament& t) {
    for (int i = 1; i < t.size(); ++i) {
        bool found = false;
        for (int j = i + 1; j <= t.size() && !found; ++j) found = t.beats(i, j);
        if (!found) return false;
    }
    return true;
}

bool hasAllAscentEndpoints(const Tournament& t) {
    for (int i = 2; i <= t.size(); ++i) {
        bool found = false;
        for (int j = 1; j < i && !found; ++j) found = t.beats(j, i);
        if (!found) return false;
    }
    return true;
}

}  // namespace ferrers
