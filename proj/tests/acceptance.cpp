// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion carries its wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ferrers/bijections.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/io.hpp"
#include "ferrers/tournaments.hpp"
#include "oracle/brute_force.hpp"

using namespace ferrers;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

std::uint64_t libCount(const AnyShape& shape, PatternKind kind, bool complete = false, bool rows = false) {
    return countFillings(shape, {kind, complete, rows}).count.convert_to<std::uint64_t>();
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Outcome equinumerosity() {
    Outcome o;
    int shapes = 0;
    for (const Partition& p : partitionsUpTo(12)) {
        const FerrersShape shape(p);
        for (bool complete : {false, true}) {
            const auto g = libCount(shape, PatternKind::kGammaFree, complete);
            const auto l = libCount(shape, PatternKind::kLonesum, complete);
            const auto og = oracle::count(p.parts(), {.gammaFree = true, .complete = complete});
            const auto ol = oracle::count(p.parts(), {.gammaFree = false, .complete = complete});
            if (g != l || g != og || l != ol) {
                o.fail("(" + p.toString() + ") " + std::to_string(g) + "/" + std::to_string(l) + " oracle " +
                       std::to_string(og) + "/" + std::to_string(ol));
            }
        }
        ++shapes;
    }
    if (o.ok) o.note = std::to_string(shapes) + " partitions with <= 12 cells";
    return o;
}

Outcome genocchiIdentification() {
    Outcome o;
    std::vector<std::uint64_t> values;
    for (int n = 1; n <= 5; ++n) {
        const auto parts = oracle::staircaseParts(n);
        const oracle::Labels labels = oracle::labels(parts);
        const auto reference = oracle::dumontCount(oracle::rowLabelSet(parts), labels.s);
        const auto l = libCount(staircase(n), PatternKind::kLonesum, true);
        const auto g = libCount(staircase(n), PatternKind::kGammaFree, true);
        if (l != reference || g != reference) {
            o.fail("S_" + std::to_string(n) + ": " + std::to_string(l) + "/" + std::to_string(g) + " vs Dumont " +
                   std::to_string(reference));
        }
        values.push_back(reference);
    }
    if (values != std::vector<std::uint64_t>{1, 3, 17, 155, 2073}) o.fail("Dumont counts " + join(values));
    if (o.ok) o.note = "S_1..S_5 = " + join(values);
    return o;
}

Outcome medianGenocchiCheck() {
    Outcome o;
    std::vector<std::uint64_t> lonesum, nonzero;
    for (int n = 1; n <= 4; ++n) {
        const auto l = libCount(staircase(n), PatternKind::kLonesum);
        const auto z = libCount(staircase(n), PatternKind::kLonesum, true, true);
        std::uint64_t acyclic = 0;
        const int v = n + 1;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (v * (v - 1) / 2)); ++m) {
            acyclic += !oracle::hasAlternatingCycle(oracle::tournament(v, m), v, {4});
        }
        const auto derangements = oracle::dumontDerangements(n);
        if (l != acyclic) o.fail("S_" + std::to_string(n) + " lonesum " + std::to_string(l) + " vs " + std::to_string(acyclic));
        if (z != derangements) {
            o.fail("S_" + std::to_string(n) + " nonzero " + std::to_string(z) + " vs " + std::to_string(derangements));
        }
        lonesum.push_back(l);
        nonzero.push_back(z);
    }
    if (lonesum != std::vector<std::uint64_t>{2, 8, 56, 608}) o.fail("lonesum " + join(lonesum));
    if (nonzero != std::vector<std::uint64_t>{1, 2, 8, 56}) o.fail("nonzero " + join(nonzero));
    if (o.ok) o.note = "lonesum " + join(lonesum) + "; rows-and-columns-nonzero " + join(nonzero);
    return o;
}

Outcome codecRoundtrips() {
    Outcome o;
    int shapes = 0;
    for (const Partition& p : partitionsUpTo(20)) {
        if (p.rows() + p.cols() > 9) continue;
        ++shapes;
        const FerrersShape shape(p);
        const LabelContext ctx = LabelContext::of(shape);
        const std::set<int> rows = oracle::rowLabelSet(p.parts());
        const std::string tag = "(" + p.toString() + ")";

        std::set<std::vector<int>> images;
        std::uint64_t fillings = 0;
        forEachFilling(shape, {PatternKind::kLonesum, true, false}, [&](const Filling& f) {
            const DumontPermutation d = zetaEncode(f);
            if (!oracle::dumont(d.elements(), rows)) o.fail(tag + " zeta image not Dumont");
            if (!(zetaDecode(d, shape) == f)) o.fail(tag + " zeta roundtrip");
            images.insert(d.elements());
            ++fillings;
        });
        if (images.size() != fillings) o.fail(tag + " zeta not injective");

        std::set<CallanSequence> callan;
        std::uint64_t dumont = 0;
        forEachDumont(ctx, [&](std::span<const int> perm) {
            const std::vector<int> v(perm.begin(), perm.end());
            if (!oracle::dumont(v, rows)) o.fail(tag + " stream emitted a non-Dumont permutation");
            if (!images.contains(v)) o.fail(tag + " Dumont permutation outside the zeta image");
            const DumontPermutation d(v, ctx);
            const CallanSequence c = nuEncode(d);
            if (!isCompleteCallanSequence(c, ctx)) o.fail(tag + " nu image not complete");
            if (!(nuDecode(c, ctx) == d)) o.fail(tag + " nu roundtrip");
            callan.insert(c);
            ++dumont;
        });
        if (dumont != fillings) o.fail(tag + " Dumont count " + std::to_string(dumont) + " vs " + std::to_string(fillings));
        if (callan.size() != dumont) o.fail(tag + " nu not injective");
        if (BigInt(callan.size()) != countCompleteCallan(ctx)) o.fail(tag + " nu not onto the Callan set");
        if (p.rows() + p.cols() <= 7) {
            const oracle::Labels l = oracle::labels(p.parts());
            std::vector<int> cols(l.colLabel.begin(), l.colLabel.end());
            if (oracle::callanCount(l.rowLabel, cols) != callan.size()) o.fail(tag + " Callan oracle");
        }
    }
    if (o.ok) o.note = std::to_string(shapes) + " shapes with semiperimeter <= 9";
    return o;
}

Outcome goldenExample() {
    Outcome o;
    LabelSet odd, even;
    for (int l = 1; l <= 20; ++l) (l % 2 ? odd : even).insert(l);
    const LabelContext ctx = LabelContext::make(odd, even);
    const std::vector<int> alpha{12, 10, 3, 5, 9, 11, 16, 14, 8, 6, 4, 2, 1, 7, 13, 17, 20, 18, 15, 19, 21};
    const CallanSequence seq = nuEncode(DumontPermutation(alpha, ctx));
    const std::string got = callanToJson(seq);
    const std::string want =
        R"({"pairs":[{"R":[3,5,9],"C":[10,12]},{"R":[11],"C":[14,16]},{"R":[1],"C":[2,4,6,8]},{"R":[7,13,17],"C":[18,20]}]})";
    if (got != want) o.fail("nu = " + got);
    const std::string back = permutationToText(nuDecode(seq, ctx).elements());
    if (back != "12 10 3 5 9 11 16 14 8 6 4 2 1 7 13 17 20 18 15 19 21") o.fail("inverse = " + back);
    if (o.ok) o.note = got;
    return o;
}

Outcome polyBernoulli() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 4; ++k) {
            const oracle::Parts parts(static_cast<std::size_t>(n), k);
            const auto lib = libCount(fromPartition(parts), PatternKind::kGammaFree);
            const auto brute = oracle::count(parts, {.gammaFree = true});
            const auto closed = polyBernoulliNegK(n, k).convert_to<std::uint64_t>();
            if (lib != brute || lib != closed) {
                o.fail(std::to_string(n) + "x" + std::to_string(k) + ": " + std::to_string(lib) + "/" +
                       std::to_string(brute) + "/" + std::to_string(closed));
            }
        }
    }
    if (polyBernoulliNegK(2, 2) != 14 || polyBernoulliNegK(3, 2) != 46 || polyBernoulliNegK(3, 3) != 230) {
        o.fail("spot values");
    }
    if (o.ok) o.note = "16 rectangles; B(2,2)=14 B(3,2)=46 B(3,3)=230";
    return o;
}

Outcome columnPermutations() {
    Outcome o;
    int shapes = 0;
    for (const Partition& p : partitionsUpTo(12)) {
        if (p.cols() > 5) continue;
        ++shapes;
        const ColumnPermutationReport r = checkColumnPermutationInvariance(FerrersShape(p));
        if (!r.allEqual) o.fail("(" + p.toString() + ")");
        const auto reference = oracle::count(p.parts(), {.gammaFree = true});
        if (r.gammaFreeCounts.front() != reference) o.fail("(" + p.toString() + ") identity count");
        // One non-trivial arrangement per shape against the oracle: reversed columns.
        std::vector<int> h = oracle::heights(p.parts());
        std::reverse(h.begin(), h.end());
        if (oracle::countColumns(h, {.gammaFree = true}) != reference) o.fail("(" + p.toString() + ") oracle reversed");
    }
    if (o.ok) o.note = std::to_string(shapes) + " partitions with <= 5 columns";
    return o;
}

Outcome reflections() {
    Outcome o;
    int shapes = 0;
    for (const Partition& p : partitionsUpTo(12)) {
        ++shapes;
        const ReflectionReport r = checkReflections(FerrersShape(p));
        if (!r.lonesumInvariant()) o.fail("(" + p.toString() + ") lonesum");
        if (!r.gammaFreeHorizontalInvariant()) o.fail("(" + p.toString() + ") gamma-free horizontal");
        if (r.gammaFreeVertical != oracle::countUpsideDown(p.parts(), {.gammaFree = true})) {
            o.fail("(" + p.toString() + ") vertical oracle");
        }
    }
    const ReflectionReport s2 = checkReflections(staircase(2));
    const auto brute = oracle::countUpsideDown({2, 1}, {.gammaFree = true});
    if (s2.gammaFree != 8 || s2.gammaFreeVertical != 7 || brute != 7) {
        o.fail("S_2: " + s2.gammaFree.str() + " vs " + s2.gammaFreeVertical.str());
    }
    if (o.ok) o.note = std::to_string(shapes) + " partitions; S_2 gamma-free 8 vs reflected 7";
    return o;
}

Outcome fourCycleEquivalence() {
    Outcome o;
    std::uint64_t total = 0;
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); ++m) {
            const oracle::Adjacency a = oracle::tournament(n, m);
            const bool four = oracle::hasAlternatingCycle(a, n, {4});
            const bool any = oracle::hasAlternatingCycle(a, n, {4, 6});
            const bool coding = oracle::codingIsLonesum(a, n);
            const Tournament t = Tournament::fromMask(n, m);
            const bool lib4 = !isAlternationAcyclic(t);
            const bool libAny = findAlternatingCycle(t).has_value();
            const bool libCoding = isLonesum(staircaseEncode(t));
            if (four != any || any == coding || lib4 != four || libAny != any || libCoding != coding) {
                o.fail("n=" + std::to_string(n) + " mask=" + std::to_string(m));
            }
            ++total;
        }
    }
    if (o.ok) o.note = std::to_string(total) + " tournaments on <= 6 vertices";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budgetSeconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "equinumerosity", 10, equinumerosity},
        {2, "genocchi-identification", 60, genocchiIdentification},
        {3, "median-genocchi", 60, medianGenocchiCheck},
        {4, "codec-roundtrips", 60, codecRoundtrips},
        {5, "golden-example", 60, goldenExample},
        {6, "poly-bernoulli", 5, polyBernoulli},
        {7, "column-permutation-invariance", 30, columnPermutations},
        {8, "reflections", 60, reflections},
        {9, "four-cycle-equivalence", 120, fourCycleEquivalence},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto started = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (o.ok && seconds > c.budgetSeconds) o.fail("over budget");
        std::printf("%s %d %-30s %8.3fs / %4.0fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                    c.budgetSeconds, o.note.c_str());
        failed += !o.ok;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
