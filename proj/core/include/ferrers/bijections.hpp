#pragma once

// Permutation statistics, Dumont permutations, Callan sequences and the codecs
// between complete lonesum fillings, Dumont permutations and complete Callan
// sequences.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ferrers/fillings.hpp"
#include "ferrers/label_set.hpp"
#include "ferrers/shapes.hpp"

namespace ferrers {

// The two disjoint label classes of a shape: L_r (rows) and L_c (columns),
// whose union is {1, ..., s}. Nothing else about the shape is needed by the
// permutation/sequence codecs, so arbitrary splits are allowed.
struct LabelContext {
    LabelSet rows;
    LabelSet cols;
    int semiperimeter = 0;

    static LabelContext of(const FerrersShape& shape);
    // Throws unless rows and cols partition {1..semiperimeter}.
    static LabelContext make(LabelSet rows, LabelSet cols);

    friend bool operator==(const LabelContext&, const LabelContext&) = default;
};

// Ascent bottoms a_i < a_{i+1} and descent tops a_i > a_{i+1}, sorted.
std::vector<int> ascentBottoms(std::span<const int> perm);
std::vector<int> descentTops(std::span<const int> perm);

// True iff `values` is a permutation of {1..n} for n = values.size().
bool isPermutation(std::span<const int> values);

// A permutation of {1..s+1} ending in s+1 whose ascent bottoms are exactly the
// row labels of its context.
class DumontPermutation {
public:
    // Throws ValidationError if `elements` is not a Dumont permutation for ctx.
    DumontPermutation(std::vector<int> elements, LabelContext ctx);
    DumontPermutation(std::vector<int> elements, const FerrersShape& shape)
        : DumontPermutation(std::move(elements), LabelContext::of(shape)) {}

    const std::vector<int>& elements() const { return elements_; }
    const LabelContext& context() const { return ctx_; }

    friend bool operator==(const DumontPermutation& a, const DumontPermutation& b) {
        return a.elements_ == b.elements_ && a.ctx_ == b.ctx_;
    }
    friend auto operator<=>(const DumontPermutation& a, const DumontPermutation& b) {
        return a.elements_ <=> b.elements_;
    }

private:
    std::vector<int> elements_;
    LabelContext ctx_;
};

bool isDumont(std::span<const int> perm, const LabelContext& ctx);
// Throws ValidationError when perm is not over {1..s+1}.
bool isDumont(std::span<const int> perm, const FerrersShape& shape);

struct CallanPair {
    LabelSet rows;  // R_i
    LabelSet cols;  // C_i
    friend bool operator==(const CallanPair&, const CallanPair&) = default;
    friend auto operator<=>(const CallanPair&, const CallanPair&) = default;
};

// Ordered pairs (R_1,C_1)...(R_m,C_m). The Ferrers variant also demands
// max R_i < min C_i; the unconstrained (n,k) variant does not.
struct CallanSequence {
    std::vector<CallanPair> pairs;
    friend bool operator==(const CallanSequence&, const CallanSequence&) = default;
    friend auto operator<=>(const CallanSequence&, const CallanSequence&) = default;
};

enum class CallanRule { kFerrers, kUnconstrained };

// Disjoint non-empty R_i within ctx.rows, disjoint non-empty C_i within
// ctx.cols, and (for kFerrers) max R_i < min C_i.
bool isCallanSequence(const CallanSequence& seq, const LabelContext& ctx,
                      CallanRule rule = CallanRule::kFerrers);
// Additionally the C_i cover ctx.cols.
bool isCompleteCallanSequence(const CallanSequence& seq, const LabelContext& ctx);

// Maps an (n,k)-Callan sequence over row/column indices to canonical labels.
CallanSequence relabelIndexSequence(const CallanSequence& byIndex, const FerrersShape& shape);

struct Block {
    int type = 1;  // 1 = row label (or s+1), 2 = column label
    std::vector<int> elements;
    friend bool operator==(const Block&, const Block&) = default;
};

// Maximal runs of same-type elements. Elements in `typeTwo` are type 2, all
// others type 1. Throws ValidationError if the last element is type 2 or a
// block is not monotone (increasing for type 1, decreasing for type 2).
std::vector<Block> blocks(std::span<const int> perm, LabelSet typeTwo);

// Peels 0-free rows (labels descending) and 1-free columns (labels ascending)
// until all labels are emitted, then reverses and appends s+1.
// Throws NotCompleteLonesum unless f is a complete lonesum filling of a Ferrers
// shape.
DumontPermutation zetaEncode(const Filling& f);
// Cell (i,j) is 1 iff row label l_r(i) was peeled before column label l_c(j).
Filling zetaDecode(const DumontPermutation& p, const FerrersShape& shape);

CallanSequence nuEncode(const DumontPermutation& p);
// Throws ValidationError unless `seq` is a complete Callan sequence for ctx.
DumontPermutation nuDecode(const CallanSequence& seq, const LabelContext& ctx);
inline DumontPermutation nuDecode(const CallanSequence& seq, const FerrersShape& shape) {
    return nuDecode(seq, LabelContext::of(shape));
}

// Splits a filling of F into its non-zero column labels I and the complete
// filling of F|_I; composeFromComplete is the inverse.
std::pair<LabelSet, Filling> decomposeByNonzeroColumns(const Filling& f);
Filling composeFromComplete(const FerrersShape& shape, LabelSet columns, const Filling& complete);

}  // namespace ferrers
