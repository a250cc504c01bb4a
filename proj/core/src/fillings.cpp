#include "ferrers/fillings.hpp"

#include <algorithm>
#include <bit>

#include "ferrers/error.hpp"

namespace ferrers {

namespace {

std::uint64_t below(int bit) { return (std::uint64_t{1} << bit) - 1; }

const FerrersShape& requireFerrers(const Filling& f, const char* what) {
    const FerrersShape* s = f.ferrers();
    if (s == nullptr) {
        throw ValidationError(std::string(what) + " needs a Ferrers shape; canonical labels are "
                              "undefined for other shapes");
    }
    return *s;
}

}  // namespace

GridShape geometryOf(const AnyShape& shape) {
    return std::visit([](const auto& s) -> GridShape {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GridShape>) {
            return s;
        } else {
            return s.geometry();
        }
    }, shape);
}

Filling::Filling(AnyShape shape)
    : shape_(std::move(shape)), geometry_(geometryOf(shape_)),
      bits_(static_cast<std::size_t>(geometry_.rows()), 0) {}

Filling::Filling(AnyShape shape, std::vector<std::uint64_t> rowBits)
    : shape_(std::move(shape)), geometry_(geometryOf(shape_)), bits_(std::move(rowBits)) {
    if (static_cast<int>(bits_.size()) != geometry_.rows()) {
        throw ValidationError("filling has " + std::to_string(bits_.size()) + " rows; shape has " +
                              std::to_string(geometry_.rows()));
    }
    for (int r = 1; r <= geometry_.rows(); ++r) {
        if ((this->rowBits(r) & ~geometry_.rowMask(r)) != 0) {
            throw ValidationError("filling sets a cell outside the shape in row " + std::to_string(r));
        }
    }
}

Filling Filling::allOnes(AnyShape shape) {
    GridShape g = geometryOf(shape);
    return Filling(std::move(shape), g.rowMasks());
}

bool Filling::at(int row, int col) const {
    if (!geometry_.contains(row, col)) {
        throw ValidationError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                              ") is not in the shape");
    }
    return ((rowBits(row) >> (col - 1)) & 1u) != 0;
}

void Filling::set(int row, int col, bool value) {
    if (!geometry_.contains(row, col)) {
        throw ValidationError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                              ") is not in the shape");
    }
    auto& word = bits_[static_cast<std::size_t>(row - 1)];
    const std::uint64_t bit = std::uint64_t{1} << (col - 1);
    word = value ? (word | bit) : (word & ~bit);
}

bool isGammaFree(const Filling& f) {
    // Rows are scanned bottom-up; `onesBelow` holds every column with a 1 in a
    // lower row.
    std::uint64_t onesBelow = 0;
    for (int r = 1; r <= f.rows(); ++r) {
        const std::uint64_t row = f.rowBits(r);
        for (std::uint64_t m = row & onesBelow; m; m &= m - 1) {
            const int b = std::countr_zero(m);
            if ((row & below(b)) != 0) return false;
        }
        onesBelow |= row;
    }
    return true;
}

bool isLonesum(const Filling& f) {
    const GridShape& g = f.geometry();
    for (int top = 2; top <= f.rows(); ++top) {
        const std::uint64_t topMask = g.rowMask(top);
        const std::uint64_t topRow = f.rowBits(top);
        for (int low = 1; low < top; ++low) {
            const std::uint64_t common = topMask & g.rowMask(low);
            const std::uint64_t lowRow = f.rowBits(low);
            // Columns where the two rows differ, split by which row holds the 1.
            const std::uint64_t topOnly = common & topRow & ~lowRow;
            const std::uint64_t lowOnly = common & lowRow & ~topRow;
            if (topOnly != 0 && lowOnly != 0) return false;
        }
    }
    return true;
}

bool isComplete(const Filling& f) {
    const GridShape& g = f.geometry();
    std::uint64_t cols = 0;
    std::uint64_t ones = 0;
    for (int r = 1; r <= f.rows(); ++r) {
        cols |= g.rowMask(r);
        ones |= f.rowBits(r);
    }
    return cols == ones;
}

bool allRowsNonzero(const Filling& f) {
    for (int r = 1; r <= f.rows(); ++r) {
        if (f.geometry().rowMask(r) != 0 && f.rowBits(r) == 0) return false;
    }
    return true;
}

LabelSet nonzeroRowLabels(const Filling& f) {
    const FerrersShape& s = requireFerrers(f, "nonzeroRowLabels");
    LabelSet out;
    for (int r = 1; r <= f.rows(); ++r) {
        if (f.rowBits(r) != 0) out.insert(s.rowLabel(r));
    }
    return out;
}

LabelSet nonzeroColLabels(const Filling& f) {
    const FerrersShape& s = requireFerrers(f, "nonzeroColLabels");
    std::uint64_t ones = 0;
    for (int r = 1; r <= f.rows(); ++r) ones |= f.rowBits(r);
    LabelSet out;
    for (std::uint64_t m = ones; m; m &= m - 1) out.insert(s.colLabel(std::countr_zero(m) + 1));
    return out;
}

std::vector<Cell> topOnes(const Filling& f) {
    std::vector<Cell> out;
    std::uint64_t seen = 0;
    for (int r = f.rows(); r >= 1; --r) {
        for (std::uint64_t m = f.rowBits(r) & ~seen; m; m &= m - 1) {
            out.push_back({r, std::countr_zero(m) + 1});
        }
        seen |= f.rowBits(r);
    }
    std::sort(out.begin(), out.end(), [](Cell a, Cell b) { return a.col < b.col; });
    return out;
}

std::vector<int> rowSums(const Filling& f) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(f.rows()));
    for (int r = 1; r <= f.rows(); ++r) out.push_back(std::popcount(f.rowBits(r)));
    return out;
}

std::vector<int> colSums(const Filling& f) {
    std::vector<int> out(static_cast<std::size_t>(f.cols()), 0);
    for (int r = 1; r <= f.rows(); ++r) {
        for (std::uint64_t m = f.rowBits(r); m; m &= m - 1) ++out[static_cast<std::size_t>(std::countr_zero(m))];
    }
    return out;
}

std::optional<Filling> reconstructLonesum(const FerrersShape& shape, const std::vector<int>& rowSums,
                                          const std::vector<int>& colSums) {
    const int n = shape.rows();
    const int k = shape.cols();
    if (static_cast<int>(rowSums.size()) != n || static_cast<int>(colSums.size()) != k) {
        throw ValidationError("margin vectors do not match the shape's " + std::to_string(n) +
                              " rows and " + std::to_string(k) + " columns");
    }
    const GridShape g = shape.geometry();
    for (int r = 1; r <= n; ++r) {
        const int v = rowSums[static_cast<std::size_t>(r - 1)];
        if (v < 0 || v > std::popcount(g.rowMask(r))) return std::nullopt;
    }
    for (int j = 1; j <= k; ++j) {
        const int v = colSums[static_cast<std::size_t>(j - 1)];
        if (v < 0 || v > shape.columnHeight(j)) return std::nullopt;
    }

    // Peel rows that must be all ones and columns that must be all zeros. Every
    // lonesum filling of a Ferrers shape always has one of the two, so the
    // peeling order is forced and the result unique.
    std::vector<int> rowLeft(rowSums);
    std::vector<int> colLeft(colSums);
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(n), 0);
    std::vector<bool> rowAlive(static_cast<std::size_t>(n), true);
    std::uint64_t colAlive = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    int rowsLeft = n;

    while (rowsLeft > 0 || colAlive != 0) {
        bool progress = false;
        for (int r = 1; r <= n; ++r) {
            auto ri = static_cast<std::size_t>(r - 1);
            if (!rowAlive[ri]) continue;
            const std::uint64_t live = g.rowMask(r) & colAlive;
            if (rowLeft[ri] == std::popcount(live)) {
                bits[ri] |= live;
                for (std::uint64_t m = live; m; m &= m - 1) --colLeft[static_cast<std::size_t>(std::countr_zero(m))];
                rowLeft[ri] = 0;
                rowAlive[ri] = false;
                --rowsLeft;
                progress = true;
            }
        }
        for (std::uint64_t m = colAlive; m; m &= m - 1) {
            const int b = std::countr_zero(m);
            const int left = colLeft[static_cast<std::size_t>(b)];
            if (left < 0) return std::nullopt;
            if (left == 0) {
                colAlive &= ~(std::uint64_t{1} << b);
                progress = true;
            }
        }
        if (!progress) return std::nullopt;
    }

    Filling out(shape, std::move(bits));
    if (ferrers::rowSums(out) != rowSums || ferrers::colSums(out) != colSums || !isLonesum(out)) {
        return std::nullopt;
    }
    return out;
}

}  // namespace ferrers
