#include <gtest/gtest.h>

#include "schurlab/error.hpp"
#include "schurlab/partition.hpp"

using namespace schurlab;

namespace {

std::vector<Partition> all_up_to(int max_size) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d)
    for (auto& p : enumerate_partitions(d)) out.push_back(p);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchurError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no SchurError thrown";
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST(Partition, ParsesShorthandAndCanonicalText) {
  EXPECT_EQ(parse_partition("5,3^2,2"), Partition({5, 3, 3, 2}));
  EXPECT_EQ(parse_partition(" 3 , 1 "), Partition({3, 1}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_EQ(parse_partition("2,1,0,0"), Partition({2, 1}));
  EXPECT_EQ(parse_partition("4^3").to_string(), "4,4,4");
  EXPECT_EQ(Partition().to_string(), "");
}

TEST(Partition, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { parse_partition("2,x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_partition("-1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_partition("1,2"); }), ErrorCode::NotMonotone);
  EXPECT_EQ(code_of([] { parse_partition("2,0,1"); }), ErrorCode::NotMonotone);
}

TEST(Partition, CanonicalOrderIsReverseLex) {
  EXPECT_LT(Partition({3}), Partition({2, 1}));
  EXPECT_LT(Partition({2, 1}), Partition({1, 1, 1}));
  auto parts = enumerate_partitions(4);
  std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(parts, expected);
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(enumerate_partitions(d).size(), static_cast<std::size_t>(p[d])) << d;
}

TEST(Partition, FilterRestrictsEnumeration) {
  PartitionFilter f;
  f.max_length = 2;
  EXPECT_EQ(enumerate_partitions(4, f).size(), 3u);
  f = {};
  f.contained_in = Partition({2, 2});
  EXPECT_EQ(enumerate_partitions(2, f), (std::vector<Partition>{{2}, {1, 1}}));
  f = {};
  f.max_part = 1;
  EXPECT_EQ(enumerate_partitions(3, f), (std::vector<Partition>{{1, 1, 1}}));
}

TEST(Partition, CornersAndRemovals) {
  const Partition l{3, 3, 2};
  EXPECT_EQ(corners(l), (CornerSet{2, 3}));
  EXPECT_EQ(remove_corner(l, 2), Partition({3, 2, 2}));
  EXPECT_EQ(remove_corner(l, 3), Partition({3, 3, 1}));
  EXPECT_EQ(remove_two_corners(l, 2, 3), Partition({3, 2, 1}));
  EXPECT_EQ(remove_up(l, 2), Partition({2, 2, 2}));
  EXPECT_FALSE(remove_up(l, 3).has_value());
  EXPECT_EQ(remove_left(l, 3), Partition({3, 3}));
  EXPECT_FALSE(remove_left(l, 2).has_value());
  EXPECT_EQ(code_of([&] { remove_corner(l, 1); }), ErrorCode::NotACorner);
  EXPECT_EQ(code_of([&] { remove_two_corners(l, 3, 2); }), ErrorCode::BadOrder);
  EXPECT_EQ(corners(rectangle(4, 3)), (CornerSet{3}));
  EXPECT_EQ(corners(hook(3, 3)), (CornerSet{1, 3}));
}

TEST(Partition, SortPairAndHalfSum) {
  EXPECT_EQ(sort_pair(Partition({2}), Partition({1, 1})), std::make_pair(Partition({2, 1}), Partition({1})));
  EXPECT_EQ(half_sum(Partition({3, 3, 2}), Partition({3, 3})), Partition({3, 3, 1}));
  EXPECT_EQ(half_sum(Partition({2, 1}), Partition({2, 1})), Partition({2, 1}));
  EXPECT_FALSE(half_sum(Partition({2, 1}), Partition({1})).has_value());
}

TEST(Partition, SkewShapeGeometry) {
  SkewShape s(Partition({4, 3, 3, 2}), Partition({3, 3, 1}));
  EXPECT_EQ(s.cell_count(), 5);
  EXPECT_EQ(s.non_empty_row_indices(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(s.column_heights(), (std::vector<int>{1, 2, 1, 1}));
  EXPECT_TRUE(s.has_cell(3, 2));
  EXPECT_FALSE(s.has_cell(2, 3));
  EXPECT_EQ(code_of([] { SkewShape(Partition({2}), Partition({1, 1})); }), ErrorCode::NotContained);
}

TEST(PartitionProperty, ConjugationIsAnInvolution) {
  for (const auto& l : all_up_to(10)) {
    const Partition c = conjugate(l);
    EXPECT_EQ(conjugate(c), l);
    EXPECT_EQ(c.size(), l.size());
    EXPECT_EQ(c.length(), l.part(1));
  }
}

TEST(PartitionProperty, CornersTransportUnderConjugation) {
  for (const auto& l : all_up_to(9)) {
    const Partition c = conjugate(l);
    CornerSet mapped;
    for (int j : corners(l)) mapped.push_back(l.part(j));
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(corners(c), mapped) << l.to_string();
    for (int j : corners(l)) {
      EXPECT_EQ(conjugate(remove_corner(l, j)), remove_corner(c, l.part(j)));
      const auto up = remove_up(l, j);
      const auto left = remove_left(c, l.part(j));
      ASSERT_EQ(up.has_value(), left.has_value()) << l.to_string() << " j=" << j;
      if (up) EXPECT_EQ(conjugate(*up), *left);
    }
  }
}

TEST(PartitionProperty, TwoCornerRemovalCommutes) {
  for (const auto& l : all_up_to(9)) {
    const auto js = corners(l);
    for (std::size_t a = 0; a < js.size(); ++a)
      for (std::size_t b = a + 1; b < js.size(); ++b) {
        const Partition both = remove_two_corners(l, js[a], js[b]);
        EXPECT_EQ(both, remove_corner(remove_corner(l, js[a]), js[b]));
        EXPECT_EQ(both, remove_corner(remove_corner(l, js[b]), js[a]));
      }
  }
}

TEST(PartitionProperty, DominanceRefinesReverseLex) {
  for (int d = 1; d <= 8; ++d) {
    const auto ps = enumerate_partitions(d);
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (a != b && dominates(a, b)) EXPECT_LT(a, b);
  }
}
