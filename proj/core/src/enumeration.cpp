#include "ferrers/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "ferrers/error.hpp"
#include "ferrers/tournaments.hpp"

namespace ferrers {

namespace {

// ---------------------------------------------------------------- filling search

// Backtracking over the cells of a shape. Cells are decided row by row from
// the bottom, right to left inside a row (increasing bit index). With that
// order the last-decided cell of a Gamma triple is its corner and the
// last-decided cell of a flipping pair is its top-left cell, so checking only
// patterns anchored at the cell just set is complete.
class FillingSearch {
public:
    struct State {
        std::vector<std::uint64_t> rows;
        std::uint64_t onesBelow = 0;  // OR of all finished rows
    };

    FillingSearch(const GridShape& g, const FillingPredicate& pred) : pred_(pred) {
        masks_ = g.rowMasks();
        const int n = g.rows();
        topCols_.assign(static_cast<std::size_t>(n), 0);
        std::uint64_t seenAbove = 0;
        for (int r = n - 1; r >= 0; --r) {
            topCols_[static_cast<std::size_t>(r)] = masks_[static_cast<std::size_t>(r)] & ~seenAbove;
            seenAbove |= masks_[static_cast<std::size_t>(r)];
        }
        for (int r = 0; r < n; ++r) {
            const std::uint64_t mask = masks_[static_cast<std::size_t>(r)];
            for (std::uint64_t m = mask; m; m &= m - 1) {
                CellInfo c;
                c.row = r;
                c.bit = std::countr_zero(m);
                c.lastInRow = (m & (m - 1)) == 0;
                const std::uint64_t right = mask & ((std::uint64_t{1} << c.bit) - 1);
                for (int low = 0; low < r; ++low) {
                    const std::uint64_t lowMask = masks_[static_cast<std::size_t>(low)];
                    if (((lowMask >> c.bit) & 1u) == 0) continue;
                    const std::uint64_t common = lowMask & right;
                    if (common != 0) c.lower.push_back({low, common});
                }
                cells_.push_back(std::move(c));
            }
        }
        state_.rows.assign(static_cast<std::size_t>(n), 0);
    }

    std::size_t cellCount() const { return cells_.size(); }

    // Full search from `from`, calling leaf() on every accepted filling.
    template <class Leaf>
    void run(std::size_t from, Leaf leaf) {
        dfs(from, cells_.size(), leaf);
    }

    // Search down to `depth` and collect the surviving partial states.
    std::vector<State> prefixes(std::size_t depth) {
        std::vector<State> out;
        auto keep = [&] { out.push_back(state_); };
        dfs(0, depth, keep);
        return out;
    }

    void restore(const State& s) { state_ = s; }
    const State& state() const { return state_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    struct Lower {
        int row;
        std::uint64_t common;  // columns right of the cell present in both rows
    };
    struct CellInfo {
        int row = 0;
        int bit = 0;
        bool lastInRow = false;
        std::vector<Lower> lower;
    };

    bool violates(const CellInfo& c, bool one) const {
        const std::uint64_t cur = state_.rows[static_cast<std::size_t>(c.row)];
        const std::uint64_t right = (std::uint64_t{1} << c.bit) - 1;
        if (pred_.kind == PatternKind::kGammaFree) {
            return one && (cur & right) != 0 && ((state_.onesBelow >> c.bit) & 1u) != 0;
        }
        for (const Lower& l : c.lower) {
            const std::uint64_t low = state_.rows[static_cast<std::size_t>(l.row)];
            const bool lowHere = ((low >> c.bit) & 1u) != 0;
            if (lowHere == one) continue;
            const std::uint64_t witness = one ? (~cur & low) : (cur & ~low);
            if ((witness & l.common) != 0) return true;
        }
        return false;
    }

    template <class Leaf>
    void dfs(std::size_t t, std::size_t stop, Leaf& leaf) {
        if (t == stop) {
            leaf();
            return;
        }
        const CellInfo& c = cells_[t];
        auto& cur = state_.rows[static_cast<std::size_t>(c.row)];
        for (int v = 0; v < 2; ++v) {
            const bool one = v == 1;
            if (violates(c, one)) continue;
            if (one) cur |= std::uint64_t{1} << c.bit;
            bool ok = true;
            const std::uint64_t savedBelow = state_.onesBelow;
            if (c.lastInRow) {
                const auto r = static_cast<std::size_t>(c.row);
                if (pred_.allRowsNonzero && cur == 0) ok = false;
                if (pred_.complete && ((state_.onesBelow | cur) & topCols_[r]) != topCols_[r]) ok = false;
                state_.onesBelow |= cur;
            }
            if (ok) {
                ++nodes_;
                dfs(t + 1, stop, leaf);
            }
            state_.onesBelow = savedBelow;
            if (one) cur &= ~(std::uint64_t{1} << c.bit);
        }
    }

    FillingPredicate pred_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint64_t> topCols_;
    std::vector<CellInfo> cells_;
    State state_;
    std::uint64_t nodes_ = 0;
};

void checkCellCap(const GridShape& g) {
    const int cap = searchCellCap();
    if (g.cellCount() > cap) {
        throw CapExceeded("shape has " + std::to_string(g.cellCount()) + " cells; the search cap is " +
                          std::to_string(cap));
    }
}

int resolveJobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t fullMask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

// ---------------------------------------------------------------- predicates

bool FillingPredicate::matches(const Filling& f) const {
    const bool pattern = kind == PatternKind::kGammaFree ? isGammaFree(f) : isLonesum(f);
    return pattern && (!complete || isComplete(f)) && (!allRowsNonzero || ferrers::allRowsNonzero(f));
}

std::string FillingPredicate::kindName() const {
    return kind == PatternKind::kGammaFree ? "gamma-free" : "lonesum";
}

std::string FillingPredicate::filterNames() const {
    std::string out;
    if (complete) out = "complete";
    if (allRowsNonzero) out += out.empty() ? "rows-nonzero" : "+rows-nonzero";
    return out;
}

int searchCellCap() {
    int cap = kMaxSearchCells;
    if (const char* env = std::getenv("FERRERS_MAX_CELLS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v < cap) cap = static_cast<int>(v);
    }
    return cap;
}

std::string describeShape(const AnyShape& shape) {
    if (const auto* f = std::get_if<FerrersShape>(&shape)) return f->partition().toString();
    if (const auto* c = std::get_if<ColumnArrangedShape>(&shape)) {
        std::string out = "heights:";
        for (std::size_t i = 0; i < c->heights().size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c->heights()[i]);
        }
        return out;
    }
    std::string out = "cells:";
    bool first = true;
    for (const Cell& c : std::get<GridShape>(shape).cells()) {
        if (!first) out += ';';
        out += std::to_string(c.row) + "," + std::to_string(c.col);
        first = false;
    }
    return out;
}

CountReport countFillings(const AnyShape& shape, const FillingPredicate& pred, const CountOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const GridShape g = geometryOf(shape);
    checkCellCap(g);

    const int jobs = resolveJobs(options.jobs);
    FillingSearch root(g, pred);
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;

    // Split on the first w cells with 2^w >= 4 * jobs; prefix nodes are counted
    // once by the splitting search, so totals do not depend on `jobs`.
    std::size_t w = 0;
    while ((std::size_t{1} << w) < 4 * static_cast<std::size_t>(jobs)) ++w;
    w = std::min(w, root.cellCount());
    if (jobs == 1) w = 0;

    if (w == 0) {
        root.run(0, [&] { ++count; });
        nodes = root.nodes();
    } else {
        const std::vector<FillingSearch::State> prefixes = root.prefixes(w);
        nodes = root.nodes();
        std::vector<std::uint64_t> counts(prefixes.size(), 0);
        std::vector<std::uint64_t> nodeCounts(prefixes.size(), 0);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            FillingSearch search(g, pred);
            for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                search.restore(prefixes[i]);
                const std::uint64_t before = search.nodes();
                std::uint64_t local = 0;
                search.run(w, [&] { ++local; });
                counts[i] = local;
                nodeCounts[i] = search.nodes() - before;
            }
        };
        {
            std::vector<std::jthread> pool;
            const int threads = std::min<int>(jobs, static_cast<int>(prefixes.size()));
            for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
            worker();
        }
        count = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
        nodes = std::accumulate(nodeCounts.begin(), nodeCounts.end(), nodes);
    }

    CountReport report;
    report.shape = describeShape(shape);
    report.predicate = pred;
    report.count = count;
    report.nodes = nodes;
    report.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

void forEachFilling(const AnyShape& shape, const FillingPredicate& pred,
                    const std::function<void(const Filling&)>& visit) {
    const GridShape g = geometryOf(shape);
    checkCellCap(g);
    FillingSearch search(g, pred);
    search.run(0, [&] { visit(Filling(shape, search.state().rows)); });
}

// ---------------------------------------------------------------- Dumont permutations

void forEachDumont(const LabelContext& ctx, const std::function<void(std::span<const int>)>& visit) {
    const int s = ctx.semiperimeter;
    if (s > kMaxStreamSemiperimeter) {
        throw CapExceeded("Dumont streams are limited to semiperimeter " +
                          std::to_string(kMaxStreamSemiperimeter));
    }
    std::vector<int> perm(static_cast<std::size_t>(s) + 1);
    perm.back() = s + 1;
    if (s == 0) {
        visit(perm);
        return;
    }
    const std::uint64_t rows = ctx.rows.bits();
    auto isRow = [&](int e) { return ((rows >> (e - 1)) & 1u) != 0; };

    // Extends perm[0..depth) where `used` holds the placed elements (bit e-1).
    std::function<void(int, std::uint64_t)> rec = [&](int depth, std::uint64_t used) {
        if (depth == s) {
            if (isRow(perm[static_cast<std::size_t>(s - 1)])) visit(perm);
            return;
        }
        std::uint64_t candidates = fullMask(s) & ~used;
        if (depth > 0) {
            const int prev = perm[static_cast<std::size_t>(depth - 1)];
            // A row label must rise to its successor, a column label must fall.
            candidates &= isRow(prev) ? ~fullMask(prev) : fullMask(prev - 1);
        }
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            const int e = std::countr_zero(m) + 1;
            perm[static_cast<std::size_t>(depth)] = e;
            rec(depth + 1, used | (std::uint64_t{1} << (e - 1)));
        }
    };
    rec(0, 0);
}

std::vector<DumontPermutation> enumerateDumont(const FerrersShape& shape) {
    const LabelContext ctx = LabelContext::of(shape);
    std::vector<DumontPermutation> out;
    forEachDumont(ctx, [&](std::span<const int> p) {
        out.emplace_back(std::vector<int>(p.begin(), p.end()), ctx);
    });
    return out;
}

BigInt countDumont(const LabelContext& ctx) {
    const int s = ctx.semiperimeter;
    if (s > 24) throw CapExceeded("Dumont counting is limited to semiperimeter 24");
    if (s == 0) return 1;
    const std::uint64_t rows = ctx.rows.bits();
    auto isRow = [&](int e) { return ((rows >> (e - 1)) & 1u) != 0; };
    const std::uint64_t all = fullMask(s);
    std::unordered_map<std::uint64_t, std::uint64_t> memo;

    // Completions of a prefix that used `used` and ended in `prev` (0: empty).
    std::function<std::uint64_t(std::uint64_t, int)> rec = [&](std::uint64_t used, int prev) -> std::uint64_t {
        if (used == all) return isRow(prev) ? 1 : 0;
        const std::uint64_t key = (used << 6) | static_cast<std::uint64_t>(prev);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t candidates = all & ~used;
        if (prev > 0) candidates &= isRow(prev) ? ~fullMask(prev) : fullMask(prev - 1);
        std::uint64_t total = 0;
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            const int e = std::countr_zero(m) + 1;
            total += rec(used | (std::uint64_t{1} << (e - 1)), e);
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(0, 0);
}

// ---------------------------------------------------------------- Callan sequences

void forEachCompleteCallan(const LabelContext& ctx, const std::function<void(const CallanSequence&)>& visit) {
    if (ctx.semiperimeter > kMaxStreamSemiperimeter) {
        throw CapExceeded("Callan streams are limited to semiperimeter " +
                          std::to_string(kMaxStreamSemiperimeter));
    }
    CallanSequence seq;
    std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t rowsLeft, std::uint64_t colsLeft) {
        if (colsLeft == 0) {
            visit(seq);
            return;
        }
        // Non-empty submasks of colsLeft, then non-empty row sets below min C.
        for (std::uint64_t c = colsLeft; c; c = (c - 1) & colsLeft) {
            const int minC = std::countr_zero(c) + 1;
            const std::uint64_t eligible = rowsLeft & fullMask(minC - 1);
            for (std::uint64_t r = eligible; r; r = (r - 1) & eligible) {
                seq.pairs.push_back({LabelSet::fromBits(r), LabelSet::fromBits(c)});
                rec(rowsLeft & ~r, colsLeft & ~c);
                seq.pairs.pop_back();
            }
        }
    };
    rec(ctx.rows.bits(), ctx.cols.bits());
}

std::vector<CallanSequence> enumerateCompleteCallan(const FerrersShape& shape) {
    std::vector<CallanSequence> out;
    forEachCompleteCallan(LabelContext::of(shape), [&](const CallanSequence& s) { out.push_back(s); });
    return out;
}

BigInt countCompleteCallan(const LabelContext& ctx) {
    std::unordered_map<std::uint64_t, BigInt> memo;
    const int s = ctx.semiperimeter;
    if (s > 32) throw CapExceeded("Callan counting is limited to semiperimeter 32");
    std::function<BigInt(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t rowsLeft,
                                                                  std::uint64_t colsLeft) -> BigInt {
        if (colsLeft == 0) return 1;
        const std::uint64_t key = (rowsLeft << 32) | colsLeft;
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        BigInt total = 0;
        for (std::uint64_t c = colsLeft; c; c = (c - 1) & colsLeft) {
            const std::uint64_t eligible = rowsLeft & fullMask(std::countr_zero(c));
            for (std::uint64_t r = eligible; r; r = (r - 1) & eligible) {
                total += rec(rowsLeft & ~r, colsLeft & ~c);
            }
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(ctx.rows.bits(), ctx.cols.bits());
}

// ---------------------------------------------------------------- sequences

BigInt genocchi(int n) {
    if (n < 1 || n > 8) throw ValidationError("genocchi(n) needs 1 <= n <= 8");
    return countDumont(LabelContext::of(staircase(n)));
}

BigInt countDumontDerangements(int n) {
    if (n < 0 || n > 8) throw ValidationError("Dumont derangements need 0 <= n <= 8");
    const int size = 2 * n;
    // Position p (1-based) takes a value below p when p is even, above p when odd.
    std::function<std::uint64_t(int, std::uint64_t)> rec = [&](int p, std::uint64_t used) -> std::uint64_t {
        if (p > size) return 1;
        std::uint64_t candidates = fullMask(size) & ~used;
        candidates &= (p % 2 == 0) ? fullMask(p - 1) : ~fullMask(p);
        std::uint64_t total = 0;
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            total += rec(p + 1, used | (m & -m));
        }
        return total;
    };
    return rec(1, 0);
}

BigInt medianGenocchi(int oddIndex) {
    if (oddIndex < 1 || oddIndex > 9 || oddIndex % 2 == 0) {
        throw ValidationError("medianGenocchi needs an odd index in 1..9");
    }
    const int m = (oddIndex - 1) / 2;
    const FerrersShape small = m == 0 ? FerrersShape{} : staircase(m);
    const FerrersShape large = staircase(m + 1);

    const BigInt byFillings = countFillings(small, {PatternKind::kLonesum}).count;
    const BigInt byTournaments = countTournaments(m + 1, {});
    const BigInt byNonzeroFillings =
        countFillings(large, {PatternKind::kLonesum, true, true}).count;
    const BigInt byDerangements = countDumontDerangements(m + 1);

    if (byFillings != byTournaments || byFillings != byNonzeroFillings || byFillings != byDerangements) {
        throw TheoremViolation("H_" + std::to_string(oddIndex) + " oracles disagree: lonesum(S_" +
                               std::to_string(m) + ")=" + byFillings.str() + ", tournaments=" +
                               byTournaments.str() + ", nonzero lonesum(S_" + std::to_string(m + 1) +
                               ")=" + byNonzeroFillings.str() + ", derangements=" + byDerangements.str());
    }
    return byFillings;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n) + 1,
                                           std::vector<BigInt>(static_cast<std::size_t>(n) + 2, 0));
    table[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                j * table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
    }
    return k > n ? BigInt(0) : table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt polyBernoulliNegK(int n, int k) {
    if (n < 0 || k < 0 || n > 12 || k > 12) throw ValidationError("poly-Bernoulli needs 0 <= n,k <= 12");
    BigInt total = 0;
    BigInt factorial = 1;
    for (int m = 0; m <= std::min(n, k); ++m) {
        if (m > 0) factorial *= m;
        total += factorial * factorial * stirling2(n + 1, m + 1) * stirling2(k + 1, m + 1);
    }
    return total;
}

BigInt countTournaments(int n, const TournamentFilter& filter) {
    if (n < 1 || n > kMaxCountedTournamentVertices) {
        throw ValidationError("tournament counting needs 1 <= n <= " +
                              std::to_string(kMaxCountedTournamentVertices));
    }
    const int pairs = n * (n - 1) / 2;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const Tournament t = Tournament::fromMask(n, mask);
        if (filter.alternationAcyclic && !isAlternationAcyclic(t)) continue;
        if (filter.ascending && !isAscending(t)) continue;
        if (filter.allAscentEndpoints && !hasAllAscentEndpoints(t)) continue;
        ++count;
    }
    return count;
}

// ---------------------------------------------------------------- shape invariance

std::vector<std::vector<int>> allColumnPermutations(int k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ColumnPermutationReport checkColumnPermutationInvariance(const FerrersShape& shape,
                                                         std::vector<std::vector<int>> perms) {
    ColumnPermutationReport report;
    report.perms = perms.empty() ? allColumnPermutations(shape.cols()) : std::move(perms);
    for (const auto& p : report.perms) {
        report.gammaFreeCounts.push_back(
            countFillings(permuteColumns(shape, p), {PatternKind::kGammaFree}, {.jobs = 1}).count);
    }
    for (const BigInt& c : report.gammaFreeCounts) {
        if (c != report.gammaFreeCounts.front()) report.allEqual = false;
    }
    return report;
}

ReflectionReport checkReflections(const FerrersShape& shape) {
    const AnyShape horizontal = reflectHorizontal(shape);
    const AnyShape vertical = reflectVertical(shape);
    const FillingPredicate lonesum{PatternKind::kLonesum};
    const FillingPredicate gammaFree{PatternKind::kGammaFree};
    const CountOptions one{.jobs = 1};
    ReflectionReport r;
    r.lonesum = countFillings(shape, lonesum, one).count;
    r.lonesumHorizontal = countFillings(horizontal, lonesum, one).count;
    r.lonesumVertical = countFillings(vertical, lonesum, one).count;
    r.gammaFree = countFillings(shape, gammaFree, one).count;
    r.gammaFreeHorizontal = countFillings(horizontal, gammaFree, one).count;
    r.gammaFreeVertical = countFillings(vertical, gammaFree, one).count;
    return r;
}

}  // namespace ferrers
