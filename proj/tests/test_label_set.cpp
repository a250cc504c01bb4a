#include <gtest/gtest.h>

#include "ferrers/error.hpp"
#include "ferrers/label_set.hpp"

using ferrers::LabelSet;

TEST(LabelSet, BasicMembership) {
    LabelSet s{3, 1, 9};
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(9));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.min(), 1);
    EXPECT_EQ(s.max(), 9);
    EXPECT_EQ(s.toVector(), (std::vector<int>{1, 3, 9}));
    EXPECT_EQ(ferrers::toString(s), "{1,3,9}");
}

TEST(LabelSet, SetAlgebra) {
    const LabelSet a{1, 2, 3};
    const LabelSet b{3, 4};
    EXPECT_EQ(a | b, (LabelSet{1, 2, 3, 4}));
    EXPECT_EQ(a & b, (LabelSet{3}));
    EXPECT_EQ(a - b, (LabelSet{1, 2}));
    EXPECT_TRUE((LabelSet{1, 2}).subsetOf(a));
    EXPECT_TRUE((LabelSet{1, 2}).disjoint(b));
    EXPECT_EQ(LabelSet::range(4), (LabelSet{1, 2, 3, 4}));
}

TEST(LabelSet, HighestLabelAndRange) {
    LabelSet s;
    s.insert(64);
    EXPECT_EQ(s.max(), 64);
    EXPECT_THROW(s.insert(65), ferrers::ValidationError);
    EXPECT_THROW(s.insert(0), ferrers::ValidationError);
    s.erase(64);
    EXPECT_TRUE(s.empty());
}
