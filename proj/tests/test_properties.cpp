// Randomized and exhaustive checks of structural invariants.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ferrers/bijections.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/fillings.hpp"
#include "ferrers/tournaments.hpp"
#include "oracle/brute_force.hpp"

using namespace ferrers;

namespace {

Filling randomFilling(const AnyShape& shape, std::mt19937_64& rng) {
    const GridShape g = geometryOf(shape);
    std::vector<std::uint64_t> rows;
    for (std::uint64_t m : g.rowMasks()) rows.push_back(rng() & m);
    return Filling(shape, rows);
}

oracle::Grid toGrid(const Filling& f, const Partition& p) {
    const int k = p.cols();
    oracle::Grid g(static_cast<std::size_t>(p.rows()), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (int r = 1; r <= p.rows(); ++r) {
        for (int x = 0; x < p.part(r); ++x) g[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(x)] = f.at(r, k - x);
    }
    return g;
}

}  // namespace

TEST(Properties, PredicatesAgreeWithOracleOnRandomFillings) {
    std::mt19937_64 rng(7);
    const auto parts = partitionsUpTo(20);
    for (int trial = 0; trial < 4000; ++trial) {
        const Partition& p = parts[rng() % parts.size()];
        const FerrersShape shape(p);
        const Filling f = randomFilling(shape, rng);
        const oracle::Board b = oracle::board(p.parts());
        const oracle::Grid g = toGrid(f, p);
        ASSERT_EQ(isGammaFree(f), oracle::gammaFree(b, g, b.rows(), b.cols())) << p.toString();
        ASSERT_EQ(isLonesum(f), oracle::lonesum(b, g, b.rows(), b.cols())) << p.toString();
        ASSERT_EQ(isComplete(f), oracle::columnsNonzero(b, g, b.rows(), b.cols())) << p.toString();
        ASSERT_EQ(allRowsNonzero(f), oracle::rowsNonzero(b, g, b.rows(), b.cols())) << p.toString();
    }
}

TEST(Properties, LonesumDeterminedByMargins) {
    for (const Partition& p : partitionsUpTo(9)) {
        const FerrersShape shape(p);
        forEachFilling(shape, {PatternKind::kLonesum}, [&](const Filling& f) {
            const auto back = reconstructLonesum(shape, rowSums(f), colSums(f));
            ASSERT_TRUE(back.has_value()) << p.toString();
            ASSERT_EQ(*back, f) << p.toString();
        });
    }
}

TEST(Properties, CountsBoundedByCellCount) {
    for (const Partition& p : partitionsUpTo(10)) {
        const BigInt c = countFillings(FerrersShape(p), {PatternKind::kGammaFree}, {.jobs = 1}).count;
        EXPECT_LE(c, BigInt(1) << p.cellCount());
    }
}

TEST(Properties, NodeCountsRepeatable) {
    const FerrersShape s = fromPartition({5, 4, 4, 2, 1});
    const CountReport a = countFillings(s, {PatternKind::kGammaFree, true, false});
    const CountReport b = countFillings(s, {PatternKind::kGammaFree, true, false});
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Properties, CompositeCodecIsBijective) {
    for (const Partition& p : partitionsUpTo(12)) {
        if (p.rows() + p.cols() > 10) continue;
        const FerrersShape shape(p);
        const LabelContext ctx = LabelContext::of(shape);
        std::set<CallanSequence> images;
        std::size_t fillings = 0;
        forEachFilling(shape, {PatternKind::kLonesum, true, false}, [&](const Filling& f) {
            const DumontPermutation d = zetaEncode(f);
            ASSERT_EQ(descentTops(std::span(d.elements()).first(d.elements().size() - 1)), shape.colLabels().toVector());
            const CallanSequence c = nuEncode(d);
            for (const CallanPair& pair : c.pairs) {
                ASSERT_FALSE(pair.rows.empty());
                ASSERT_FALSE(pair.cols.empty());
                ASSERT_TRUE(pair.rows.subsetOf(ctx.rows));
                ASSERT_TRUE(pair.cols.subsetOf(ctx.cols));
                ASSERT_LT(pair.rows.max(), pair.cols.min());
            }
            images.insert(c);
            ++fillings;
        });
        EXPECT_EQ(images.size(), fillings) << p.toString();
        EXPECT_EQ(BigInt(images.size()), countCompleteCallan(ctx)) << p.toString();
    }
}

TEST(Properties, DecompositionGivesEquinumerosity) {
    // Summing complete counts over every non-zero column set recovers the
    // full count, for both patterns.
    for (const Partition& p : partitionsUpTo(8)) {
        const FerrersShape shape(p);
        for (PatternKind kind : {PatternKind::kGammaFree, PatternKind::kLonesum}) {
            BigInt total = 0;
            const std::uint64_t cols = shape.colLabels().bits();
            for (std::uint64_t sub = cols;; sub = (sub - 1) & cols) {
                total += countFillings(restrictColumns(shape, LabelSet::fromBits(sub)), {kind, true, false},
                                       {.jobs = 1})
                             .count;
                if (sub == 0) break;
            }
            EXPECT_EQ(total, countFillings(shape, {kind}, {.jobs = 1}).count) << p.toString();
        }
    }
}

TEST(Properties, RandomTournamentsAgreeOnCycles) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 3);
        const Tournament t = Tournament::fromMask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        const bool acyclic = isAlternationAcyclic(t);
        const auto cycle = findAlternatingCycle(t);
        ASSERT_EQ(acyclic, !cycle.has_value());
        if (cycle) ASSERT_TRUE(isAlternatingCycle(t, *cycle));
        ASSERT_EQ(acyclic, isLonesum(staircaseEncode(t)));
    }
}
