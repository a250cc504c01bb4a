#pragma once

// 0-1 fillings of shapes and the pattern predicates on them.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ferrers/label_set.hpp"
#include "ferrers/shapes.hpp"

namespace ferrers {

using AnyShape = std::variant<FerrersShape, ColumnArrangedShape, GridShape>;

GridShape geometryOf(const AnyShape& shape);

// A 0-1 assignment to every cell of a shape. Row r is one word, column j in
// bit j-1, matching GridShape::rowMask.
class Filling {
public:
    Filling() = default;
    // All-zero filling.
    explicit Filling(AnyShape shape);
    // Throws ValidationError if a bit lies outside the shape.
    Filling(AnyShape shape, std::vector<std::uint64_t> rowBits);

    static Filling allOnes(AnyShape shape);

    const AnyShape& shape() const { return shape_; }
    const GridShape& geometry() const { return geometry_; }
    // Null when the shape is not a Ferrers shape.
    const FerrersShape* ferrers() const { return std::get_if<FerrersShape>(&shape_); }

    int rows() const { return geometry_.rows(); }
    int cols() const { return geometry_.cols(); }
    std::uint64_t rowBits(int row) const { return bits_.at(static_cast<std::size_t>(row - 1)); }
    const std::vector<std::uint64_t>& rowBitVector() const { return bits_; }

    bool at(int row, int col) const;
    void set(int row, int col, bool value);

    friend bool operator==(const Filling& a, const Filling& b) {
        return a.geometry_ == b.geometry_ && a.bits_ == b.bits_;
    }

private:
    AnyShape shape_;
    GridShape geometry_;
    std::vector<std::uint64_t> bits_;
};

// No 1 with a 1 strictly to its right and a 1 strictly below it.
bool isGammaFree(const Filling& f);
// Avoids both 2x2 permutation patterns on shape cells.
bool isLonesum(const Filling& f);
// Every column holds a 1 (vacuous for the empty shape).
bool isComplete(const Filling& f);
// Every non-empty row holds a 1.
bool allRowsNonzero(const Filling& f);

// Canonical labels of the rows / columns holding a 1. Ferrers shapes only.
LabelSet nonzeroRowLabels(const Filling& f);
LabelSet nonzeroColLabels(const Filling& f);

// The highest 1 of every non-zero column, ordered by column.
std::vector<Cell> topOnes(const Filling& f);

// rowSums()[i-1] is the number of 1s in row i; colSums()[j-1] likewise.
std::vector<int> rowSums(const Filling& f);
std::vector<int> colSums(const Filling& f);

// The unique lonesum filling with the given margins, or nullopt when no
// lonesum filling of the shape has them.
std::optional<Filling> reconstructLonesum(const FerrersShape& shape, const std::vector<int>& rowSums,
                                          const std::vector<int>& colSums);

}  // namespace ferrers
