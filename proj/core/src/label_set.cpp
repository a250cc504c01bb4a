#include "ferrers/label_set.hpp"

#include <ostream>
#include <sstream>

#include "ferrers/error.hpp"

namespace ferrers {

namespace {

void checkLabel(int label) {
    if (label < 1 || label > LabelSet::kMaxLabel) {
        throw ValidationError("label " + std::to_string(label) + " outside 1.." +
                              std::to_string(LabelSet::kMaxLabel));
    }
}

}  // namespace

LabelSet::LabelSet(std::initializer_list<int> labels) {
    for (int l : labels) insert(l);
}

LabelSet LabelSet::range(int n) {
    if (n < 0 || n > kMaxLabel) {
        throw ValidationError("label range 1.." + std::to_string(n) + " unsupported");
    }
    return fromBits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

LabelSet LabelSet::fromVector(const std::vector<int>& labels) {
    LabelSet s;
    for (int l : labels) s.insert(l);
    return s;
}

void LabelSet::insert(int label) {
    checkLabel(label);
    bits_ |= std::uint64_t{1} << (label - 1);
}

void LabelSet::erase(int label) {
    if (label >= 1 && label <= kMaxLabel) bits_ &= ~(std::uint64_t{1} << (label - 1));
}

std::vector<int> LabelSet::toVector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int l : *this) out.push_back(l);
    return out;
}

std::string toString(LabelSet s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, LabelSet s) {
    os << '{';
    bool first = true;
    for (int l : s) {
        if (!first) os << ',';
        os << l;
        first = false;
    }
    return os << '}';
}

}  // namespace ferrers
