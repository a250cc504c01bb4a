#include "ferrers/shapes.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>

#include "ferrers/error.hpp"

namespace ferrers {

namespace {

std::uint64_t lowBits(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw ValidationError("partition part " + std::to_string(i + 1) + " is " +
                                  std::to_string(parts_[i]) + "; parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw ValidationError("partition is not weakly decreasing at part " +
                                  std::to_string(i + 1) + " (" + std::to_string(parts_[i]) +
                                  " > " + std::to_string(parts_[i - 1]) + ")");
        }
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                              s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return Partition{};
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ValidationError("cannot parse partition part '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

int Partition::cellCount() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::conjugate() const {
    std::vector<int> heights(static_cast<std::size_t>(cols()), 0);
    for (int p : parts_) {
        for (int c = 0; c < p; ++c) ++heights[static_cast<std::size_t>(c)];
    }
    return heights;
}

std::string Partition::toString() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

// ---------------------------------------------------------------- GridShape

GridShape::GridShape(std::span<const Cell> cells) {
    for (const Cell& c : cells) {
        if (c.row < 1 || c.col < 1) {
            throw ValidationError("cell coordinates must be positive");
        }
        if (c.col > kMaxColumns) {
            throw CapExceeded("column " + std::to_string(c.col) + " exceeds the " +
                              std::to_string(kMaxColumns) + "-column limit");
        }
        if (static_cast<std::size_t>(c.row) > masks_.size()) masks_.resize(static_cast<std::size_t>(c.row), 0);
        masks_[static_cast<std::size_t>(c.row - 1)] |= std::uint64_t{1} << (c.col - 1);
    }
    normalize();
}

GridShape GridShape::fromRowMasks(std::vector<std::uint64_t> masks) {
    GridShape g;
    g.masks_ = std::move(masks);
    g.normalize();
    return g;
}

void GridShape::normalize() {
    while (!masks_.empty() && masks_.back() == 0) masks_.pop_back();
    std::uint64_t all = 0;
    for (auto m : masks_) all |= m;
    cols_ = 64 - std::countl_zero(all);
}

int GridShape::cellCount() const {
    int n = 0;
    for (auto m : masks_) n += std::popcount(m);
    return n;
}

bool GridShape::contains(int row, int col) const {
    if (row < 1 || row > rows() || col < 1 || col > kMaxColumns) return false;
    return ((masks_[static_cast<std::size_t>(row - 1)] >> (col - 1)) & 1u) != 0;
}

std::vector<Cell> GridShape::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r) {
        for (std::uint64_t m = rowMask(r); m; m &= m - 1) {
            out.push_back({r, std::countr_zero(m) + 1});
        }
    }
    return out;
}

// ---------------------------------------------------------------- FerrersShape

FerrersShape::FerrersShape(Partition partition) : partition_(std::move(partition)) {
    const int n = partition_.rows();
    const int k = partition_.cols();
    if (k > kMaxColumns || n + k > kMaxSemiperimeter) {
        throw CapExceeded("shape " + partition_.toString() + " exceeds semiperimeter " +
                          std::to_string(kMaxSemiperimeter));
    }
    semiperimeter_ = n + k;
    rowLabels_.assign(static_cast<std::size_t>(n), 0);
    colLabels_.assign(static_cast<std::size_t>(k), 0);

    // Walk the northeast border from the bottom-right corner. Before row i is
    // labeled, the column tops between the previous row end and the end of row
    // i are labeled right to left.
    int label = 0;
    int x = k;  // current horizontal position of the border (left-to-right columns)
    auto labelColumnsDownTo = [&](int stop) {
        for (int p = x; p > stop; --p) {
            int j = k - p + 1;
            colLabels_[static_cast<std::size_t>(j - 1)] = ++label;
        }
        x = stop;
    };
    for (int i = 1; i <= n; ++i) {
        labelColumnsDownTo(partition_.part(i));
        rowLabels_[static_cast<std::size_t>(i - 1)] = ++label;
    }
    labelColumnsDownTo(0);

    for (int l : rowLabels_) rowLabelSet_.insert(l);
    for (int l : colLabels_) colLabelSet_.insert(l);
}

bool FerrersShape::contains(int row, int col) const {
    if (row < 1 || row > rows() || col < 1 || col > cols()) return false;
    return partition_.part(row) >= cols() - col + 1;
}

int FerrersShape::columnHeight(int col) const {
    const int position = cols() - col + 1;
    int h = 0;
    for (int p : partition_.parts()) {
        if (p >= position) ++h;
    }
    return h;
}

std::vector<int> FerrersShape::colLabelsLeftToRight() const {
    return {colLabels_.rbegin(), colLabels_.rend()};
}

int FerrersShape::rowOfLabel(int label) const {
    auto it = std::find(rowLabels_.begin(), rowLabels_.end(), label);
    return it == rowLabels_.end() ? 0 : static_cast<int>(it - rowLabels_.begin()) + 1;
}

int FerrersShape::colOfLabel(int label) const {
    auto it = std::find(colLabels_.begin(), colLabels_.end(), label);
    return it == colLabels_.end() ? 0 : static_cast<int>(it - colLabels_.begin()) + 1;
}

GridShape FerrersShape::geometry() const {
    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(rows()));
    const int k = cols();
    for (int p : partition_.parts()) {
        // columns k-p+1 .. k, i.e. bits k-p .. k-1
        masks.push_back(lowBits(k) & ~lowBits(k - p));
    }
    return GridShape::fromRowMasks(std::move(masks));
}

// ---------------------------------------------------------------- ColumnArrangedShape

ColumnArrangedShape::ColumnArrangedShape(std::vector<int> heights) : heights_(std::move(heights)) {
    if (static_cast<int>(heights_.size()) > kMaxColumns) {
        throw CapExceeded("too many columns");
    }
    for (std::size_t i = 0; i < heights_.size(); ++i) {
        if (heights_[i] < 1) {
            throw ValidationError("column height " + std::to_string(i + 1) + " must be positive");
        }
    }
}

int ColumnArrangedShape::cellCount() const {
    return std::accumulate(heights_.begin(), heights_.end(), 0);
}

Partition ColumnArrangedShape::sortedPartition() const {
    std::vector<int> sorted = heights_;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    // `sorted` is the conjugate of the partition.
    return Partition(Partition(sorted).conjugate());
}

GridShape ColumnArrangedShape::geometry() const {
    const int k = cols();
    std::vector<Cell> cells;
    for (int p = 1; p <= k; ++p) {
        const int j = k - p + 1;
        for (int i = 1; i <= heights_[static_cast<std::size_t>(p - 1)]; ++i) cells.push_back({i, j});
    }
    return GridShape(cells);
}

// ---------------------------------------------------------------- operations

FerrersShape fromPartition(std::vector<int> parts) {
    return FerrersShape(Partition(std::move(parts)));
}

FerrersShape staircase(int n) {
    if (n < 1) throw ValidationError("staircase size must be at least 1");
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(i);
    return fromPartition(std::move(parts));
}

ColumnArrangedShape reflectHorizontal(const FerrersShape& shape) {
    std::vector<int> heights = shape.partition().conjugate();
    std::reverse(heights.begin(), heights.end());
    return ColumnArrangedShape(std::move(heights));
}

GridShape reflectVertical(const GridShape& shape) {
    std::vector<std::uint64_t> masks = shape.rowMasks();
    std::reverse(masks.begin(), masks.end());
    return GridShape::fromRowMasks(std::move(masks));
}

GridShape reflectVertical(const FerrersShape& shape) {
    return reflectVertical(shape.geometry());
}

ColumnArrangedShape permuteColumns(const FerrersShape& shape, std::span<const int> perm) {
    const int k = shape.cols();
    if (static_cast<int>(perm.size()) != k) {
        throw ValidationError("column permutation has " + std::to_string(perm.size()) +
                              " entries; shape has " + std::to_string(k) + " columns");
    }
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int p : perm) {
        if (p < 1 || p > k || seen[static_cast<std::size_t>(p)]) {
            throw ValidationError("column permutation is not a bijection on 1.." + std::to_string(k));
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
    const std::vector<int> heights = shape.partition().conjugate();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int p : perm) out.push_back(heights[static_cast<std::size_t>(p - 1)]);
    return ColumnArrangedShape(std::move(out));
}

FerrersShape restrictColumns(const FerrersShape& shape, LabelSet labels) {
    if (!labels.subsetOf(shape.colLabels())) {
        throw ValidationError("labels " + toString(labels - shape.colLabels()) +
                              " are not column labels of shape " + shape.partition().toString());
    }
    const int k = shape.cols();
    // kept[p] = number of kept columns among left-to-right positions 1..p
    std::vector<int> keptPrefix(static_cast<std::size_t>(k) + 1, 0);
    for (int p = 1; p <= k; ++p) {
        const int j = k - p + 1;
        keptPrefix[static_cast<std::size_t>(p)] =
            keptPrefix[static_cast<std::size_t>(p - 1)] + (labels.contains(shape.colLabel(j)) ? 1 : 0);
    }
    std::vector<int> parts;
    for (int part : shape.partition().parts()) {
        const int len = keptPrefix[static_cast<std::size_t>(part)];
        if (len > 0) parts.push_back(len);
    }
    return fromPartition(std::move(parts));
}

FerrersShape rect(const FerrersShape& shape) {
    if (shape.empty()) throw ValidationError("rect of the empty shape is undefined");
    return fromPartition(std::vector<int>(static_cast<std::size_t>(shape.rows()), shape.cols()));
}

std::vector<Partition> partitionsOf(int total) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(total, total);
    return out;
}

std::vector<Partition> partitionsUpTo(int maxCells) {
    std::vector<Partition> out;
    for (int t = 0; t <= maxCells; ++t) {
        auto ps = partitionsOf(t);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace ferrers
