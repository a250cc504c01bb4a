#pragma once

// Partitions, Ferrers shapes and the generic cell-set shapes produced by
// reflecting or permuting columns.
//
// Indexing convention used everywhere in the library: rows are numbered from
// the bottom (row 1) to the top, columns from the right (column 1) to the
// left. Display formats convert at the boundary.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/label_set.hpp"

namespace ferrers {

// Widest shape supported: one 64-bit word per row.
inline constexpr int kMaxColumns = 64;
// Largest semiperimeter for which labels fit in a LabelSet.
inline constexpr int kMaxSemiperimeter = LabelSet::kMaxLabel;

struct Cell {
    int row = 0;  // 1 = bottom
    int col = 0;  // 1 = rightmost
    friend constexpr auto operator<=>(Cell, Cell) = default;
};

// Weakly decreasing list of positive parts; may be empty.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "8,7,3,3,2"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_.front(); }
    int cellCount() const;
    // 1-based row index, bottom row first.
    int part(int row) const { return parts_.at(static_cast<std::size_t>(row - 1)); }
    bool empty() const { return parts_.empty(); }

    // Column heights from left to right.
    std::vector<int> conjugate() const;

    std::string toString() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// An arbitrary finite set of cells. Row r is stored as a bit mask over
// columns (column j in bit j-1).
class GridShape {
public:
    GridShape() = default;
    explicit GridShape(std::span<const Cell> cells);
    static GridShape fromRowMasks(std::vector<std::uint64_t> masks);

    int rows() const { return static_cast<int>(masks_.size()); }
    int cols() const { return cols_; }
    int cellCount() const;
    bool contains(int row, int col) const;
    std::uint64_t rowMask(int row) const { return masks_.at(static_cast<std::size_t>(row - 1)); }
    const std::vector<std::uint64_t>& rowMasks() const { return masks_; }
    // Sorted by (row, col).
    std::vector<Cell> cells() const;

    friend bool operator==(const GridShape&, const GridShape&) = default;

private:
    void normalize();

    std::vector<std::uint64_t> masks_;  // trailing empty rows trimmed
    int cols_ = 0;
};

// A partition with its cell geometry and canonical border labeling.
class FerrersShape {
public:
    FerrersShape() = default;
    explicit FerrersShape(Partition partition);

    const Partition& partition() const { return partition_; }
    int rows() const { return partition_.rows(); }
    int cols() const { return partition_.cols(); }
    int cellCount() const { return partition_.cellCount(); }
    int semiperimeter() const { return semiperimeter_; }
    bool empty() const { return partition_.empty(); }

    // Row i holds columns j with part(i) >= cols() - j + 1.
    bool contains(int row, int col) const;
    int rowLength(int row) const { return partition_.part(row); }
    int columnHeight(int col) const;

    int rowLabel(int row) const { return rowLabels_.at(static_cast<std::size_t>(row - 1)); }
    int colLabel(int col) const { return colLabels_.at(static_cast<std::size_t>(col - 1)); }
    // Indexed by row-1 (bottom first) and col-1 (rightmost first).
    const std::vector<int>& rowLabelVector() const { return rowLabels_; }
    const std::vector<int>& colLabelVector() const { return colLabels_; }
    // Column labels listed left to right, as in the shape JSON.
    std::vector<int> colLabelsLeftToRight() const;
    LabelSet rowLabels() const { return rowLabelSet_; }
    LabelSet colLabels() const { return colLabelSet_; }

    // Inverse lookups; 0 when the label belongs to the other kind or is absent.
    int rowOfLabel(int label) const;
    int colOfLabel(int label) const;

    GridShape geometry() const;

    friend bool operator==(const FerrersShape& a, const FerrersShape& b) {
        return a.partition_ == b.partition_;
    }

private:
    Partition partition_;
    std::vector<int> rowLabels_;
    std::vector<int> colLabels_;
    LabelSet rowLabelSet_;
    LabelSet colLabelSet_;
    int semiperimeter_ = 0;
};

// Bottom-justified columns of arbitrary heights, listed left to right.
class ColumnArrangedShape {
public:
    ColumnArrangedShape() = default;
    explicit ColumnArrangedShape(std::vector<int> heights);

    const std::vector<int>& heights() const { return heights_; }
    int cols() const { return static_cast<int>(heights_.size()); }
    int cellCount() const;
    // The unique Ferrers shape this is a column permutation of.
    Partition sortedPartition() const;
    GridShape geometry() const;

    friend bool operator==(const ColumnArrangedShape&, const ColumnArrangedShape&) = default;

private:
    std::vector<int> heights_;
};

FerrersShape fromPartition(std::vector<int> parts);
// (n, n-1, ..., 1)
FerrersShape staircase(int n);

ColumnArrangedShape reflectHorizontal(const FerrersShape& shape);
GridShape reflectVertical(const FerrersShape& shape);
GridShape reflectVertical(const GridShape& shape);

// perm[p-1] names the original column position (left to right, 1-based) that
// ends up at position p.
ColumnArrangedShape permuteColumns(const FerrersShape& shape, std::span<const int> perm);

// Keeps only the columns whose canonical labels are in `labels`; rows left
// without cells are dropped.
FerrersShape restrictColumns(const FerrersShape& shape, LabelSet labels);

// Circumscribed rectangle: cols() repeated rows() times.
FerrersShape rect(const FerrersShape& shape);

// All partitions of `total`, in reverse lexicographic order.
std::vector<Partition> partitionsOf(int total);
// All partitions with at most `maxCells` cells, the empty one first.
std::vector<Partition> partitionsUpTo(int maxCells);

}  // namespace ferrers
