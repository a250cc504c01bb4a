#include "ferrers/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "ferrers/bijections.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/error.hpp"
#include "ferrers/io.hpp"
#include "ferrers/tournaments.hpp"

namespace ferrers {

namespace {

// Collects the first few mismatches of a suite.
class Failures {
public:
    void add(const std::string& message) {
        if (count_++ < 5) lines_.push_back(message);
    }
    bool empty() const { return count_ == 0; }
    std::string summary(const std::string& ok) const {
        if (count_ == 0) return ok;
        std::string out = std::to_string(count_) + " mismatch(es): ";
        for (std::size_t i = 0; i < lines_.size(); ++i) out += (i ? "; " : "") + lines_[i];
        return out;
    }

private:
    int count_ = 0;
    std::vector<std::string> lines_;
};

CheckResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    const auto started = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    try {
        std::tie(r.passed, r.detail) = body();
    } catch (const Error& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return r;
}

BigInt count(const AnyShape& shape, PatternKind kind, bool complete, const VerifyOptions& o,
             bool rowsNonzero = false) {
    return countFillings(shape, {kind, complete, rowsNonzero}, {.jobs = o.jobs}).count;
}

}  // namespace

CheckResult checkEquinumerous(const VerifyOptions& o) {
    return timed("equinumerous", [&] {
        Failures bad;
        int shapes = 0;
        for (const Partition& p : partitionsUpTo(o.maxCells)) {
            const FerrersShape shape(p);
            ++shapes;
            for (bool complete : {false, true}) {
                const BigInt g = count(shape, PatternKind::kGammaFree, complete, o);
                const BigInt l = count(shape, PatternKind::kLonesum, complete, o);
                if (g != l) {
                    bad.add("(" + p.toString() + ")" + (complete ? " complete" : "") + ": gamma-free " + g.str() +
                            " vs lonesum " + l.str());
                }
            }
        }
        return std::pair{bad.empty(), bad.summary(std::to_string(shapes) + " shapes, plain and complete")};
    });
}

CheckResult checkGenocchi(const VerifyOptions& o) {
    return timed("genocchi", [&] {
        Failures bad;
        std::string values;
        for (int n = 1; n <= 5; ++n) {
            const FerrersShape s = staircase(n);
            const BigInt g = genocchi(n);
            const BigInt lonesum = count(s, PatternKind::kLonesum, true, o);
            const BigInt gammaFree = count(s, PatternKind::kGammaFree, true, o);
            const BigInt callan = countCompleteCallan(LabelContext::of(s));
            if (lonesum != g || gammaFree != g || callan != g) {
                bad.add("S_" + std::to_string(n) + ": Dumont " + g.str() + ", lonesum " + lonesum.str() +
                        ", gamma-free " + gammaFree.str() + ", Callan " + callan.str());
            }
            values += (n > 1 ? "," : "") + g.str();
        }
        return std::pair{bad.empty(), bad.summary("complete counts of S_1..S_5 = " + values)};
    });
}

CheckResult checkMedianGenocchi(const VerifyOptions& o) {
    return timed("median-genocchi", [&] {
        Failures bad;
        std::string values;
        BigInt previous = 1;  // H_1
        for (int n = 1; n <= 4; ++n) {
            // medianGenocchi throws TheoremViolation when its routes disagree.
            const BigInt h = medianGenocchi(2 * n + 1);
            const BigInt nonzero = count(staircase(n), PatternKind::kLonesum, true, o, true);
            if (nonzero != previous) {
                bad.add("S_" + std::to_string(n) + " rows-and-columns-nonzero " + nonzero.str() + " vs H_" +
                        std::to_string(2 * n - 1) + " = " + previous.str());
            }
            values += (n > 1 ? "," : "") + h.str();
            previous = h;
        }
        return std::pair{bad.empty(), bad.summary("H_3..H_9 = " + values)};
    });
}

CheckResult checkCodecs(const VerifyOptions&) {
    return timed("codecs", [&] {
        Failures bad;
        int shapes = 0;
        std::uint64_t objects = 0;
        for (const Partition& p : partitionsUpTo(20)) {
            if (p.rows() + p.cols() > 9) continue;
            const FerrersShape shape(p);
            const LabelContext ctx = LabelContext::of(shape);
            const std::string tag = "(" + p.toString() + ")";
            ++shapes;

            std::set<std::vector<int>> zetaImages;
            forEachFilling(shape, {PatternKind::kLonesum, true, false}, [&](const Filling& f) {
                const DumontPermutation d = zetaEncode(f);
                if (!zetaImages.insert(d.elements()).second) bad.add(tag + " zeta not injective");
                if (!(zetaDecode(d, shape) == f)) bad.add(tag + " zeta roundtrip");
                ++objects;
            });

            std::set<CallanSequence> nuImages;
            std::uint64_t dumont = 0;
            forEachDumont(ctx, [&](std::span<const int> perm) {
                const DumontPermutation d(std::vector<int>(perm.begin(), perm.end()), ctx);
                if (!zetaImages.contains(d.elements())) bad.add(tag + " Dumont permutation missed by zeta");
                const CallanSequence c = nuEncode(d);
                if (!isCompleteCallanSequence(c, ctx)) bad.add(tag + " nu image not complete Callan");
                if (!nuImages.insert(c).second) bad.add(tag + " nu not injective");
                if (!(nuDecode(c, ctx) == d)) bad.add(tag + " nu roundtrip");
                ++dumont;
                ++objects;
            });

            const BigInt callan = countCompleteCallan(ctx);
            if (zetaImages.size() != dumont || BigInt(nuImages.size()) != callan) {
                bad.add(tag + " cardinalities " + std::to_string(zetaImages.size()) + "/" + std::to_string(dumont) +
                        "/" + callan.str());
            }
        }
        return std::pair{bad.empty(), bad.summary(std::to_string(shapes) + " shapes with semiperimeter <= 9, " +
                                                  std::to_string(objects) + " objects")};
    });
}

CheckResult checkGolden(const VerifyOptions&) {
    return timed("golden", [&] {
        Failures bad;
        LabelSet odd, even;
        for (int l = 1; l <= 20; ++l) (l % 2 ? odd : even).insert(l);
        const LabelContext ctx = LabelContext::make(odd, even);
        const std::vector<int> alpha{12, 10, 3, 5, 9, 11, 16, 14, 8, 6, 4, 2, 1, 7, 13, 17, 20, 18, 15, 19, 21};
        const CallanSequence seq = nuEncode(DumontPermutation(alpha, ctx));
        const std::string expected =
            R"({"pairs":[{"R":[3,5,9],"C":[10,12]},{"R":[11],"C":[14,16]},{"R":[1],"C":[2,4,6,8]},)"
            R"({"R":[7,13,17],"C":[18,20]}]})";
        if (callanToJson(seq) != expected) bad.add("nu(alpha) = " + callanToJson(seq));
        const std::string back = permutationToText(nuDecode(seq, ctx).elements());
        if (back != permutationToText(alpha)) bad.add("nu^-1 = " + back);

        const FerrersShape shape = fromPartition({8, 7, 3, 3, 2});
        const std::vector<int> dumont{5, 4, 2, 1, 9, 13, 8, 12, 10, 7, 6, 3, 11, 14};
        if (!isDumont(dumont, shape)) bad.add("Dumont example rejected");
        const std::vector<int> zeta{7, 6, 5, 4, 2, 1, 3, 13, 10, 9, 12, 8, 11, 14};
        const DumontPermutation z(zeta, shape);
        if (zetaEncode(zetaDecode(z, shape)).elements() != zeta) bad.add("zeta example roundtrip");
        return std::pair{bad.empty(), bad.summary("odd-even sequence and inverse match")};
    });
}

CheckResult checkPolyBernoulli(const VerifyOptions& o) {
    return timed("poly-bernoulli", [&] {
        Failures bad;
        for (int n = 1; n <= 4; ++n) {
            for (int k = 1; k <= 4; ++k) {
                const BigInt c = count(fromPartition(std::vector<int>(static_cast<std::size_t>(n), k)),
                                       PatternKind::kGammaFree, false, o);
                const BigInt b = polyBernoulliNegK(n, k);
                if (c != b) {
                    bad.add(std::to_string(n) + "x" + std::to_string(k) + ": " + c.str() + " vs " + b.str());
                }
            }
        }
        return std::pair{bad.empty(), bad.summary("n,k <= 4 rectangles")};
    });
}

CheckResult checkColumnPermutations(const VerifyOptions& o) {
    return timed("column-perm", [&] {
        Failures bad;
        int shapes = 0;
        for (const Partition& p : partitionsUpTo(o.maxCells)) {
            if (p.cols() > 5) continue;
            ++shapes;
            const ColumnPermutationReport r = checkColumnPermutationInvariance(FerrersShape(p));
            if (!r.allEqual) bad.add("(" + p.toString() + ")");
        }
        return std::pair{bad.empty(), bad.summary(std::to_string(shapes) + " shapes with <= 5 columns")};
    });
}

CheckResult checkReflectionSuite(const VerifyOptions& o) {
    return timed("reflections", [&] {
        Failures bad;
        int shapes = 0;
        for (const Partition& p : partitionsUpTo(o.maxCells)) {
            ++shapes;
            const ReflectionReport r = checkReflections(FerrersShape(p));
            if (!r.lonesumInvariant()) bad.add("(" + p.toString() + ") lonesum");
            if (!r.gammaFreeHorizontalInvariant()) bad.add("(" + p.toString() + ") gamma-free horizontal");
        }
        const ReflectionReport s2 = checkReflections(staircase(2));
        if (s2.gammaFree != 8 || s2.gammaFreeVertical != 7) {
            bad.add("S_2 gamma-free " + s2.gammaFree.str() + " vs reflected " + s2.gammaFreeVertical.str());
        }
        return std::pair{bad.empty(),
                         bad.summary(std::to_string(shapes) + " shapes; S_2 gamma-free 8, vertically reflected 7")};
    });
}

CheckResult checkFourCycles(const VerifyOptions&) {
    return timed("prop-4cycle", [&] {
        Failures bad;
        std::uint64_t total = 0;
        for (int n = 1; n <= 6; ++n) {
            const int pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                const Tournament t = Tournament::fromMask(n, mask);
                const bool noFour = isAlternationAcyclic(t);
                const bool noCycle = !findAlternatingCycle(t).has_value();
                const bool lonesum = isLonesum(staircaseEncode(t));
                if (noFour != noCycle || noFour != lonesum) {
                    bad.add("n=" + std::to_string(n) + " mask=" + std::to_string(mask));
                }
                ++total;
            }
        }
        return std::pair{bad.empty(), bad.summary(std::to_string(total) + " tournaments on <= 6 vertices")};
    });
}

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names{"equinumerous", "genocchi",    "median-genocchi",
                                                "codecs",       "golden",      "poly-bernoulli",
                                                "column-perm",  "reflections", "prop-4cycle"};
    return names;
}

std::vector<CheckResult> runSuite(std::string_view name, const VerifyOptions& options) {
    using Fn = CheckResult (*)(const VerifyOptions&);
    static const std::vector<std::pair<std::string, Fn>> table{
        {"equinumerous", checkEquinumerous}, {"genocchi", checkGenocchi},
        {"median-genocchi", checkMedianGenocchi}, {"codecs", checkCodecs},
        {"golden", checkGolden}, {"poly-bernoulli", checkPolyBernoulli},
        {"column-perm", checkColumnPermutations}, {"reflections", checkReflectionSuite},
        {"prop-4cycle", checkFourCycles}};
    std::vector<CheckResult> out;
    for (const auto& [suite, fn] : table) {
        if (name == "all" || name == suite) out.push_back(fn(options));
    }
    if (out.empty()) throw ValidationError("unknown suite '" + std::string(name) + "'");
    return out;
}

}  // namespace ferrers
