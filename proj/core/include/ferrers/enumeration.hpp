#pragma once

// Exhaustive counting and enumeration: fillings by backtracking, Dumont
// permutations, complete Callan sequences, tournaments, and the integer
// sequences those counts are compared against.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/bijections.hpp"
#include "ferrers/fillings.hpp"
#include "ferrers/shapes.hpp"

namespace ferrers {

enum class PatternKind { kGammaFree, kLonesum };

struct FillingPredicate {
    PatternKind kind = PatternKind::kLonesum;
    bool complete = false;        // every column non-zero
    bool allRowsNonzero = false;  // every row non-zero

    bool matches(const Filling& f) const;
    // "gamma-free", "lonesum"
    std::string kindName() const;
    // "complete+rows-nonzero", or "" without filters
    std::string filterNames() const;
    friend bool operator==(const FillingPredicate&, const FillingPredicate&) = default;
};

struct CountReport {
    std::string shape;
    FillingPredicate predicate;
    BigInt count;
    std::uint64_t nodes = 0;  // accepted partial assignments; independent of job count
    double millis = 0.0;
};

// Hard cap on the cell count of exhaustive filling searches.
inline constexpr int kMaxSearchCells = 40;
// kMaxSearchCells, lowered (never raised) by FERRERS_MAX_CELLS.
int searchCellCap();

struct CountOptions {
    int jobs = 0;  // 0: hardware concurrency
};

std::string describeShape(const AnyShape& shape);

// Exact count by cell-at-a-time backtracking, bottom row first and right to
// left within a row, pruning partial fillings that already contain the
// forbidden pattern. Throws CapExceeded above searchCellCap() cells.
CountReport countFillings(const AnyShape& shape, const FillingPredicate& pred,
                          const CountOptions& options = {});

// Same search, single-threaded, handing every accepted filling to `visit`.
void forEachFilling(const AnyShape& shape, const FillingPredicate& pred,
                    const std::function<void(const Filling&)>& visit);

// Dumont permutation streams are refused above this semiperimeter.
inline constexpr int kMaxStreamSemiperimeter = 18;

void forEachDumont(const LabelContext& ctx, const std::function<void(std::span<const int>)>& visit);
std::vector<DumontPermutation> enumerateDumont(const FerrersShape& shape);
// Memoized count over (used elements, previous element); no materialization.
BigInt countDumont(const LabelContext& ctx);

void forEachCompleteCallan(const LabelContext& ctx, const std::function<void(const CallanSequence&)>& visit);
std::vector<CallanSequence> enumerateCompleteCallan(const FerrersShape& shape);
BigInt countCompleteCallan(const LabelContext& ctx);

// |G_{2n+2}|: Dumont permutations of the first kind on 2n+1 letters, 1 <= n <= 8.
BigInt genocchi(int n);

// H_{oddIndex} for oddIndex in {1,3,5,7,9}. Computed as the lonesum count of
// S_m (m = (oddIndex-1)/2) and as the number of alternation-acyclic
// tournaments on m+1 vertices; the value is also compared with the
// rows-and-columns-nonzero complete lonesum count of S_{m+1} and with the
// number of Dumont derangements of [2m+2]. Throws TheoremViolation if any two
// disagree.
BigInt medianGenocchi(int oddIndex);

// Permutations sigma of [2n] with sigma(2i) < 2i and sigma(2i-1) > 2i-1.
BigInt countDumontDerangements(int n);

// sum_m (m!)^2 S(n+1,m+1) S(k+1,m+1), 0 <= n,k <= 12.
BigInt polyBernoulliNegK(int n, int k);
BigInt stirling2(int n, int k);

struct TournamentFilter {
    bool alternationAcyclic = true;
    bool ascending = false;
    bool allAscentEndpoints = false;
};
inline constexpr int kMaxCountedTournamentVertices = 7;
// Exhaustive over all 2^(n(n-1)/2) tournaments on n <= 7 vertices.
BigInt countTournaments(int n, const TournamentFilter& filter);

// All permutations of {1..k} in lexicographic order.
std::vector<std::vector<int>> allColumnPermutations(int k);

struct ColumnPermutationReport {
    std::vector<std::vector<int>> perms;
    std::vector<BigInt> gammaFreeCounts;
    bool allEqual = true;
};
// An empty `perms` means every column permutation.
ColumnPermutationReport checkColumnPermutationInvariance(const FerrersShape& shape,
                                                         std::vector<std::vector<int>> perms = {});

struct ReflectionReport {
    BigInt lonesum, lonesumHorizontal, lonesumVertical;
    BigInt gammaFree, gammaFreeHorizontal, gammaFreeVertical;
    bool lonesumInvariant() const {
        return lonesum == lonesumHorizontal && lonesum == lonesumVertical;
    }
    bool gammaFreeHorizontalInvariant() const { return gammaFree == gammaFreeHorizontal; }
};
ReflectionReport checkReflections(const FerrersShape& shape);

}  // namespace ferrers
