#include "ferrers/bijections.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "ferrers/error.hpp"

namespace ferrers {

namespace {

std::string formatPerm(std::span<const int> perm) {
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(perm[i]);
    }
    return out;
}

const FerrersShape& requireFerrers(const Filling& f) {
    const FerrersShape* s = f.ferrers();
    if (s == nullptr) throw ValidationError("operation needs a filling of a Ferrers shape");
    return *s;
}

// Bits of `word` selected by `mask`, packed towards bit 0 (software pext).
std::uint64_t compress(std::uint64_t word, std::uint64_t mask) {
    std::uint64_t out = 0;
    int k = 0;
    for (std::uint64_t m = mask; m; m &= m - 1, ++k) {
        if ((word >> std::countr_zero(m)) & 1u) out |= std::uint64_t{1} << k;
    }
    return out;
}

// Inverse of compress (software pdep).
std::uint64_t expand(std::uint64_t packed, std::uint64_t mask) {
    std::uint64_t out = 0;
    int k = 0;
    for (std::uint64_t m = mask; m; m &= m - 1, ++k) {
        if ((packed >> k) & 1u) out |= std::uint64_t{1} << std::countr_zero(m);
    }
    return out;
}

std::uint64_t keptColumnMask(const FerrersShape& shape, LabelSet columns) {
    std::uint64_t mask = 0;
    for (int j = 1; j <= shape.cols(); ++j) {
        if (columns.contains(shape.colLabel(j))) mask |= std::uint64_t{1} << (j - 1);
    }
    return mask;
}

}  // namespace

// ---------------------------------------------------------------- contexts

LabelContext LabelContext::of(const FerrersShape& shape) {
    return {shape.rowLabels(), shape.colLabels(), shape.semiperimeter()};
}

LabelContext LabelContext::make(LabelSet rows, LabelSet cols) {
    if (!rows.disjoint(cols)) {
        throw ValidationError("row and column label sets overlap in " + toString(rows & cols));
    }
    const LabelSet all = rows | cols;
    const int s = all.empty() ? 0 : all.max();
    if (all != LabelSet::range(s)) {
        throw ValidationError("row and column labels do not cover 1.." + std::to_string(s));
    }
    return {rows, cols, s};
}

// ---------------------------------------------------------------- statistics

std::vector<int> ascentBottoms(std::span<const int> perm) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] < perm[i + 1]) out.push_back(perm[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> descentTops(std::span<const int> perm) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
        if (perm[i] > perm[i + 1]) out.push_back(perm[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool isPermutation(std::span<const int> values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool isDumont(std::span<const int> perm, const LabelContext& ctx) {
    const auto s = static_cast<std::size_t>(ctx.semiperimeter);
    if (perm.size() != s + 1 || !isPermutation(perm)) return false;
    if (perm.back() != ctx.semiperimeter + 1) return false;
    return ascentBottoms(perm) == ctx.rows.toVector();
}

bool isDumont(std::span<const int> perm, const FerrersShape& shape) {
    const int s = shape.semiperimeter();
    if (static_cast<int>(perm.size()) != s + 1 || !isPermutation(perm)) {
        throw ValidationError("'" + formatPerm(perm) + "' is not a permutation of 1.." +
                              std::to_string(s + 1));
    }
    return isDumont(perm, LabelContext::of(shape));
}

DumontPermutation::DumontPermutation(std::vector<int> elements, LabelContext ctx)
    : elements_(std::move(elements)), ctx_(ctx) {
    if (!isDumont(elements_, ctx_)) {
        throw ValidationError("'" + formatPerm(elements_) + "' is not a Dumont permutation for row labels " +
                              toString(ctx_.rows));
    }
}

// ---------------------------------------------------------------- Callan sequences

bool isCallanSequence(const CallanSequence& seq, const LabelContext& ctx, CallanRule rule) {
    LabelSet usedRows;
    LabelSet usedCols;
    for (const CallanPair& p : seq.pairs) {
        if (p.rows.empty() || p.cols.empty()) return false;
        if (!p.rows.subsetOf(ctx.rows) || !p.cols.subsetOf(ctx.cols)) return false;
        if (!p.rows.disjoint(usedRows) || !p.cols.disjoint(usedCols)) return false;
        if (rule == CallanRule::kFerrers && p.rows.max() >= p.cols.min()) return false;
        usedRows |= p.rows;
        usedCols |= p.cols;
    }
    return true;
}

bool isCompleteCallanSequence(const CallanSequence& seq, const LabelContext& ctx) {
    if (!isCallanSequence(seq, ctx)) return false;
    LabelSet covered;
    for (const CallanPair& p : seq.pairs) covered |= p.cols;
    return covered == ctx.cols;
}

CallanSequence relabelIndexSequence(const CallanSequence& byIndex, const FerrersShape& shape) {
    CallanSequence out;
    for (const CallanPair& p : byIndex.pairs) {
        CallanPair q;
        for (int i : p.rows) {
            if (i > shape.rows()) throw ValidationError("row index " + std::to_string(i) + " out of range");
            q.rows.insert(shape.rowLabel(i));
        }
        for (int j : p.cols) {
            if (j > shape.cols()) throw ValidationError("column index " + std::to_string(j) + " out of range");
            q.cols.insert(shape.colLabel(j));
        }
        out.pairs.push_back(q);
    }
    return out;
}

// ---------------------------------------------------------------- blocks

std::vector<Block> blocks(std::span<const int> perm, LabelSet typeTwo) {
    std::vector<Block> out;
    if (perm.empty()) return out;
    if (typeTwo.contains(perm.back())) {
        throw ValidationError("the last element must be of type 1");
    }
    for (int e : perm) {
        const int type = typeTwo.contains(e) ? 2 : 1;
        if (out.empty() || out.back().type != type) {
            out.push_back({type, {}});
        } else {
            const int prev = out.back().elements.back();
            if ((type == 1 && prev > e) || (type == 2 && prev < e)) {
                throw ValidationError("block containing " + std::to_string(prev) + "," + std::to_string(e) +
                                      " is not monotone; input is not a Dumont permutation");
            }
        }
        out.back().elements.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------- zeta

DumontPermutation zetaEncode(const Filling& f) {
    const FerrersShape& shape = requireFerrers(f);
    if (!isLonesum(f) || !isComplete(f)) {
        throw NotCompleteLonesum("zeta encoding needs a complete lonesum filling");
    }
    const GridShape& g = f.geometry();
    const int n = shape.rows();
    const int k = shape.cols();
    std::vector<bool> rowAlive(static_cast<std::size_t>(n), true);
    std::uint64_t colAlive = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<int> alpha;
    alpha.reserve(static_cast<std::size_t>(shape.semiperimeter()));

    while (static_cast<int>(alpha.size()) < shape.semiperimeter()) {
        const std::size_t before = alpha.size();

        // 0-free rows, labels decreasing. Higher rows carry larger labels.
        for (int r = n; r >= 1; --r) {
            auto ri = static_cast<std::size_t>(r - 1);
            if (!rowAlive[ri]) continue;
            const std::uint64_t live = g.rowMask(r) & colAlive;
            if ((f.rowBits(r) & live) == live) {
                alpha.push_back(shape.rowLabel(r));
                rowAlive[ri] = false;
            }
        }

        // 1-free columns, labels increasing. Column labels grow with the index.
        std::uint64_t ones = 0;
        for (int r = 1; r <= n; ++r) {
            if (rowAlive[static_cast<std::size_t>(r - 1)]) ones |= f.rowBits(r);
        }
        for (int j = 1; j <= k; ++j) {
            const std::uint64_t bit = std::uint64_t{1} << (j - 1);
            if ((colAlive & bit) != 0 && (ones & bit) == 0) {
                alpha.push_back(shape.colLabel(j));
                colAlive &= ~bit;
            }
        }

        if (alpha.size() == before) {
            throw NotCompleteLonesum("zeta peeling stalled; the filling is not complete lonesum");
        }
    }

    std::vector<int> out(alpha.rbegin(), alpha.rend());
    out.push_back(shape.semiperimeter() + 1);
    return DumontPermutation(std::move(out), shape);
}

Filling zetaDecode(const DumontPermutation& p, const FerrersShape& shape) {
    if (p.context() != LabelContext::of(shape)) {
        throw ValidationError("Dumont permutation belongs to a different label context");
    }
    const auto& d = p.elements();
    const int s = shape.semiperimeter();
    // Position in the peeling order alpha, which is d_1..d_s reversed.
    std::vector<int> peeledAt(static_cast<std::size_t>(s) + 2, 0);
    for (int i = 0; i < s; ++i) peeledAt[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])] = s - 1 - i;

    std::vector<std::uint64_t> bits(static_cast<std::size_t>(shape.rows()), 0);
    for (int r = 1; r <= shape.rows(); ++r) {
        const int rowAt = peeledAt[static_cast<std::size_t>(shape.rowLabel(r))];
        for (int j = 1; j <= shape.cols(); ++j) {
            if (!shape.contains(r, j)) continue;
            if (rowAt < peeledAt[static_cast<std::size_t>(shape.colLabel(j))]) {
                bits[static_cast<std::size_t>(r - 1)] |= std::uint64_t{1} << (j - 1);
            }
        }
    }
    return Filling(shape, std::move(bits));
}

// ---------------------------------------------------------------- nu

CallanSequence nuEncode(const DumontPermutation& p) {
    const auto& a = p.elements();
    const LabelSet typeTwo = p.context().cols;
    auto typeOf = [&](int e) { return typeTwo.contains(e) ? 2 : 1; };

    CallanSequence out;
    std::size_t start = 0;
    while (true) {
        // First block [start, mid), second block [mid, end).
        std::size_t mid = start;
        const int t1 = typeOf(a[start]);
        while (mid < a.size() && typeOf(a[mid]) == t1) ++mid;
        if (mid == a.size()) break;
        const int last = a[mid - 1];

        std::size_t cut = mid;
        if (t1 == 1) {
            while (cut < a.size() && typeOf(a[cut]) == 2 && a[cut] > last) ++cut;
        } else {
            while (cut < a.size() && typeOf(a[cut]) == 1 && a[cut] < last) ++cut;
        }
        if (cut == mid) {
            throw ValidationError("empty segment while nu-encoding; input is not a Dumont permutation");
        }

        LabelSet first;
        LabelSet second;
        for (std::size_t i = start; i < mid; ++i) first.insert(a[i]);
        for (std::size_t i = mid; i < cut; ++i) second.insert(a[i]);
        out.pairs.push_back(t1 == 1 ? CallanPair{first, second} : CallanPair{second, first});
        start = cut;
    }
    return out;
}

DumontPermutation nuDecode(const CallanSequence& seq, const LabelContext& ctx) {
    if (!isCompleteCallanSequence(seq, ctx)) {
        throw ValidationError("not a complete Callan sequence for row labels " + toString(ctx.rows) +
                              " and column labels " + toString(ctx.cols));
    }
    LabelSet used;
    for (const CallanPair& p : seq.pairs) used |= p.rows | p.cols;

    std::deque<int> beta;
    for (int l : ctx.rows - used) beta.push_back(l);
    beta.push_back(ctx.semiperimeter + 1);

    for (auto it = seq.pairs.rbegin(); it != seq.pairs.rend(); ++it) {
        const int x = beta.front();
        // Rows-first (R ascending, then C descending) exactly when the glued
        // segment keeps the stage boundary: a type-1 head must sit below every
        // column label, a type-2 head below the largest row label.
        const bool rowsFirst = ctx.cols.contains(x) ? x < it->rows.max() : x < it->cols.min();
        const std::vector<int> r = it->rows.toVector();
        const std::vector<int> c = it->cols.toVector();
        std::vector<int> segment;
        segment.reserve(r.size() + c.size());
        if (rowsFirst) {
            segment.insert(segment.end(), r.begin(), r.end());
            segment.insert(segment.end(), c.rbegin(), c.rend());
        } else {
            segment.insert(segment.end(), c.rbegin(), c.rend());
            segment.insert(segment.end(), r.begin(), r.end());
        }
        beta.insert(beta.begin(), segment.begin(), segment.end());
    }

    DumontPermutation out(std::vector<int>(beta.begin(), beta.end()), ctx);
    if (nuEncode(out) != seq) {
        throw TheoremViolation("nu decoding did not invert nu encoding");
    }
    return out;
}

// ---------------------------------------------------------------- decomposition

std::pair<LabelSet, Filling> decomposeByNonzeroColumns(const Filling& f) {
    const FerrersShape& shape = requireFerrers(f);
    const LabelSet nonzero = nonzeroColLabels(f);
    FerrersShape restricted = restrictColumns(shape, nonzero);
    const std::uint64_t kept = keptColumnMask(shape, nonzero);
    std::vector<std::uint64_t> bits;
    for (int r = 1; r <= restricted.rows(); ++r) bits.push_back(compress(f.rowBits(r), kept));
    return {nonzero, Filling(std::move(restricted), std::move(bits))};
}

Filling composeFromComplete(const FerrersShape& shape, LabelSet columns, const Filling& complete) {
    const FerrersShape restricted = restrictColumns(shape, columns);
    const FerrersShape* given = complete.ferrers();
    if (given == nullptr || !(*given == restricted)) {
        throw ValidationError("filling is not on the restricted shape " + restricted.partition().toString());
    }
    if (!isComplete(complete)) {
        throw ValidationError("composeFromComplete needs a complete filling");
    }
    const std::uint64_t kept = keptColumnMask(shape, columns);
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(shape.rows()), 0);
    for (int r = 1; r <= restricted.rows(); ++r) {
        bits[static_cast<std::size_t>(r - 1)] = expand(complete.rowBits(r), kept);
    }
    return Filling(shape, std::move(bits));
}

}  // namespace ferrers
