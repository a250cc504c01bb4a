#include <gtest/gtest.h>

#include <cstdlib>

#include "ferrers/enumeration.hpp"
#include "ferrers/error.hpp"
#include "ferrers/io.hpp"
#include "oracle/brute_force.hpp"

using namespace ferrers;

namespace {

BigInt countOf(const AnyShape& s, PatternKind kind, bool complete = false, bool rows = false, int jobs = 1) {
    return countFillings(s, {kind, complete, rows}, {.jobs = jobs}).count;
}

}  // namespace

TEST(CountFillings, SmallValues) {
    EXPECT_EQ(countOf(fromPartition({2, 2}), PatternKind::kGammaFree), 14);
    EXPECT_EQ(countOf(staircase(2), PatternKind::kLonesum), 8);
    EXPECT_EQ(countOf(staircase(3), PatternKind::kLonesum, true), 17);
    EXPECT_EQ(countOf(FerrersShape{}, PatternKind::kLonesum), 1);
    EXPECT_EQ(countOf(FerrersShape{}, PatternKind::kGammaFree, true, true), 1);
}

TEST(CountFillings, MatchesOracleForEveryFilter) {
    for (const Partition& p : partitionsUpTo(9)) {
        for (int mode = 0; mode < 8; ++mode) {
            const bool gf = mode & 1, complete = mode & 2, rows = mode & 4;
            const BigInt lib = countOf(FerrersShape(p), gf ? PatternKind::kGammaFree : PatternKind::kLonesum, complete, rows);
            const auto ref = oracle::count(p.parts(), {.gammaFree = gf, .complete = complete, .rowsNonzero = rows});
            ASSERT_EQ(lib, ref) << p.toString() << " mode " << mode;
        }
    }
}

TEST(CountFillings, NonFerrersShapes) {
    const std::vector<int> heights{1, 3, 2};
    const ColumnArrangedShape c(heights);
    EXPECT_EQ(countOf(c, PatternKind::kGammaFree), oracle::countColumns(heights, {.gammaFree = true}));
    EXPECT_EQ(countOf(c, PatternKind::kLonesum), oracle::countColumns(heights, {}));
    EXPECT_EQ(countOf(reflectVertical(staircase(2)), PatternKind::kGammaFree), 7);
}

TEST(CountFillings, NodesIndependentOfJobs) {
    const FerrersShape s = staircase(5);
    const CountReport one = countFillings(s, {PatternKind::kLonesum}, {.jobs = 1});
    for (int jobs : {2, 3, 8}) {
        const CountReport many = countFillings(s, {PatternKind::kLonesum}, {.jobs = jobs});
        EXPECT_EQ(many.count, one.count);
        EXPECT_EQ(many.nodes, one.nodes);
    }
    EXPECT_EQ(one.shape, "5,4,3,2,1");
    EXPECT_GT(one.nodes, 0u);
}

TEST(CountFillings, CapIsEnforced) {
    EXPECT_THROW(countOf(fromPartition({41}), PatternKind::kLonesum), CapExceeded);
    ::setenv("FERRERS_MAX_CELLS", "5", 1);
    EXPECT_EQ(searchCellCap(), 5);
    EXPECT_THROW(countOf(staircase(3), PatternKind::kLonesum), CapExceeded);
    ::setenv("FERRERS_MAX_CELLS", "100", 1);
    EXPECT_EQ(searchCellCap(), kMaxSearchCells);
    ::unsetenv("FERRERS_MAX_CELLS");
}

TEST(ForEachFilling, VisitsExactlyTheMatchingFillings) {
    const FillingPredicate pred{PatternKind::kLonesum, true, false};
    int visited = 0;
    forEachFilling(fromPartition({3, 2, 2}), pred, [&](const Filling& f) {
        EXPECT_TRUE(pred.matches(f));
        ++visited;
    });
    EXPECT_EQ(BigInt(visited), countOf(fromPartition({3, 2, 2}), PatternKind::kLonesum, true));
}

TEST(Dumont, StreamsOnSmallStaircases) {
    const auto s1 = enumerateDumont(staircase(1));
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1[0].elements(), (std::vector<int>{2, 1, 3}));
    EXPECT_EQ(enumerateDumont(staircase(2)).size(), 3u);
    const auto c1 = enumerateCompleteCallan(staircase(1));
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(callanToJson(c1[0]), R"({"pairs":[{"R":[1],"C":[2]}]})");
    EXPECT_EQ(enumerateCompleteCallan(staircase(2)).size(), 3u);
}

TEST(Dumont, StreamMatchesPermutationOracle) {
    for (const Partition& p : partitionsUpTo(12)) {
        if (p.rows() + p.cols() > 8) continue;
        const FerrersShape shape(p);
        std::vector<std::vector<int>> lib;
        for (const auto& d : enumerateDumont(shape)) lib.push_back(d.elements());
        const auto ref = oracle::dumontPermutations(oracle::rowLabelSet(p.parts()), shape.semiperimeter());
        std::sort(lib.begin(), lib.end());
        ASSERT_EQ(lib, ref) << p.toString();
        EXPECT_EQ(countDumont(LabelContext::of(shape)), BigInt(ref.size()));
    }
}

TEST(Dumont, WorkedObjectsAppearInStreams) {
    const FerrersShape f = fromPartition({8, 7, 3, 3, 2});
    const std::vector<int> d{5, 4, 2, 1, 9, 13, 8, 12, 10, 7, 6, 3, 11, 14};
    bool found = false;
    forEachDumont(LabelContext::of(f), [&](std::span<const int> p) {
        found = found || std::equal(p.begin(), p.end(), d.begin(), d.end());
    });
    EXPECT_TRUE(found);
    const CallanSequence c = callanFromJson(
        R"({"pairs":[{"R":[3],"C":[4,7,10]},{"R":[1],"C":[2,5,6,12]},{"R":[8,11],"C":[13]}]})");
    found = false;
    forEachCompleteCallan(LabelContext::of(f), [&](const CallanSequence& s) { found = found || s == c; });
    EXPECT_TRUE(found);
}

TEST(Callan, CountMatchesOracle) {
    for (const Partition& p : partitionsUpTo(12)) {
        if (p.rows() + p.cols() > 7) continue;
        const FerrersShape shape(p);
        const oracle::Labels l = oracle::labels(p.parts());
        const auto ref = oracle::callanCount(l.rowLabel, l.colLabel);
        EXPECT_EQ(countCompleteCallan(LabelContext::of(shape)), BigInt(ref)) << p.toString();
        EXPECT_EQ(enumerateCompleteCallan(shape).size(), ref) << p.toString();
    }
}

TEST(Streams, Caps) {
    const LabelContext big = LabelContext::of(staircase(10));
    EXPECT_THROW(forEachDumont(big, [](std::span<const int>) {}), CapExceeded);
    EXPECT_THROW(forEachCompleteCallan(big, [](const CallanSequence&) {}), CapExceeded);
}

TEST(Sequences, Genocchi) {
    const std::vector<int> expected{1, 3, 17, 155, 2073, 38227, 929569, 28820619};
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(genocchi(n), expected[static_cast<std::size_t>(n - 1)]);
    for (int n = 1; n <= 4; ++n) {
        const auto parts = oracle::staircaseParts(n);
        EXPECT_EQ(genocchi(n), BigInt(oracle::dumontCount(oracle::rowLabelSet(parts), 2 * n)));
    }
    EXPECT_THROW(genocchi(0), ValidationError);
    EXPECT_THROW(genocchi(9), ValidationError);
}

TEST(Sequences, MedianGenocchi) {
    EXPECT_EQ(medianGenocchi(1), 1);
    EXPECT_EQ(medianGenocchi(3), 2);
    EXPECT_EQ(medianGenocchi(5), 8);
    EXPECT_EQ(medianGenocchi(7), 56);
    EXPECT_EQ(medianGenocchi(9), 608);
    EXPECT_THROW(medianGenocchi(4), ValidationError);
    EXPECT_THROW(medianGenocchi(11), ValidationError);
}

TEST(Sequences, DumontDerangements) {
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(countDumontDerangements(n), BigInt(oracle::dumontDerangements(n)));
    EXPECT_EQ(countDumontDerangements(4), 56);
}

TEST(Sequences, PolyBernoulli) {
    EXPECT_EQ(polyBernoulliNegK(1, 1), 2);
    EXPECT_EQ(polyBernoulliNegK(2, 2), 14);
    EXPECT_EQ(polyBernoulliNegK(3, 2), 46);
    EXPECT_EQ(polyBernoulliNegK(3, 3), 230);
    EXPECT_EQ(polyBernoulliNegK(0, 5), 1);
    EXPECT_EQ(polyBernoulliNegK(4, 3), polyBernoulliNegK(3, 4));
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            EXPECT_EQ(polyBernoulliNegK(n, k), BigInt(oracle::count(oracle::Parts(n, k), {.gammaFree = true})));
        }
    }
    EXPECT_EQ(stirling2(5, 2), 15);
    EXPECT_THROW(polyBernoulliNegK(13, 1), ValidationError);
}

TEST(Tournaments, FilteredCounts) {
    EXPECT_EQ(countTournaments(4, {}), 56);
    EXPECT_EQ(countTournaments(1, {}), 1);
    EXPECT_EQ(countTournaments(3, {.alternationAcyclic = false}), 8);
    EXPECT_THROW(countTournaments(8, {}), ValidationError);
}

TEST(Invariance, ColumnPermutations) {
    const auto r = checkColumnPermutationInvariance(fromPartition({2, 1}));
    ASSERT_EQ(r.perms.size(), 2u);
    EXPECT_EQ(r.gammaFreeCounts, (std::vector<BigInt>{8, 8}));
    EXPECT_TRUE(r.allEqual);
    EXPECT_TRUE(checkColumnPermutationInvariance(fromPartition({3, 2})).allEqual);
    EXPECT_EQ(checkColumnPermutationInvariance(fromPartition({3, 2}), {{1, 2, 3}}).perms.size(), 1u);
    EXPECT_EQ(allColumnPermutations(4).size(), 24u);
}

TEST(Invariance, Reflections) {
    const ReflectionReport s2 = checkReflections(staircase(2));
    EXPECT_EQ(s2.gammaFree, 8);
    EXPECT_EQ(s2.gammaFreeVertical, 7);
    EXPECT_TRUE(s2.lonesumInvariant());
    EXPECT_TRUE(s2.gammaFreeHorizontalInvariant());
    const ReflectionReport box = checkReflections(fromPartition({3, 3}));
    EXPECT_EQ(box.gammaFree, box.gammaFreeVertical);
    EXPECT_EQ(box.lonesum, box.gammaFree);
}
