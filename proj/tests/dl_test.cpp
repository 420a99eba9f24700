#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "staircase/dl.hpp"
#include "staircase/error.hpp"

using namespace staircase;

namespace {

std::set<std::vector<int>> value_set(const DLPoset& dl) {
  std::set<std::vector<int>> out;
  for (const DLArray& a : dl.arrays()) out.insert(a.values());
  return out;
}

std::set<std::pair<int, int>> as_pairs(const std::vector<Transposition>& ts) {
  std::set<std::pair<int, int>> out;
  for (Transposition t : ts) out.insert({std::min(t.i, t.j), std::max(t.i, t.j)});
  return out;
}

}  // namespace

TEST(DL, EnumerationOn233355) {
  const DLPoset dl(parse_shape("2,3,3,3,5,5"), Partition{2, 2, 2, 1, 1});
  const std::set<std::vector<int>> want{{2, 2, 2, 1, 1}, {2, 2, 1, 2, 1}, {2, 1, 1, 2, 2}, {1, 2, 1, 2, 2}};
  EXPECT_EQ(value_set(dl), want);
}

TEST(DL, ChainFor2211) {
  const DLPoset dl(parse_shape("2,3,3,4"), Partition{2, 2, 1, 1});
  ASSERT_EQ(dl.size(), 3u);
  std::set<Composition> vrts;
  for (const DLArray& a : dl.arrays()) vrts.insert(a.vrt());
  EXPECT_EQ(vrts, (std::set<Composition>{{2, 2, 1, 1}, {2, 1, 1, 2}, {1, 2, 1, 2}}));
  EXPECT_EQ(dl.poset().covers().size(), 2u);
  EXPECT_TRUE(dl_order_agreement(dl).ok);
  MobiusTable mu(dl.poset());
  const std::size_t bottom = *dl.poset().bottom(), top = *dl.poset().top();
  EXPECT_EQ(mu(bottom, top), 0);
}

TEST(DL, RectangleHasOneArray) {
  for (const Partition& lambda : {Partition{3, 1, 1}, Partition{2, 2}, Partition{1}})
    EXPECT_EQ(DLPoset(parse_shape("3,3,3,3"), lambda).size(), 1u) << lambda.to_string();
}

TEST(DL, HorVrtOfArray) {
  const auto cp = std::make_shared<const CornerPoset>(staircase_corners(parse_shape("2,3,3,3,5,5")));
  const DLArray a(cp, {2, 3, 1, 4, 1});
  EXPECT_EQ(a.hor(), (Composition{1, 2, 3, 1, 4}));
  EXPECT_EQ(a.vrt(), (Composition{2, 3, 1, 0, 4, 1}));
  EXPECT_EQ(a.weight(), 11);
  EXPECT_EQ(dl_from_vrt(cp, {2, 3, 1, 0, 4, 1}), a);
  EXPECT_EQ(dl_from_hor(cp, {1, 2, 3, 1, 4}), a);
  const DLArray zero(cp, {0, 0, 0, 0, 0});
  EXPECT_EQ(zero.hor(), Composition(std::vector<int>(5, 0)));
  EXPECT_EQ(zero.vrt(), Composition(std::vector<int>(6, 0)));
}

TEST(DL, WeightDoubleCounting) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> h;
    int cur = 1 + rng() % 3;
    for (int c = 0, cols = 1 + rng() % 6; c < cols; ++c) h.push_back(cur += rng() % 2);
    const auto cp = std::make_shared<const CornerPoset>(staircase_corners(StaircaseShape(h)));
    std::vector<int> v;
    for (std::size_t i = 0; i < cp->size(); ++i) v.push_back(rng() % 5);
    const DLArray a(cp, v);
    ASSERT_EQ(a.hor().weight(), a.weight());
    ASSERT_EQ(a.vrt().weight(), a.weight());
  }
}

TEST(DL, FromWeightRoundTripsAndRejects) {
  const StaircaseShape shape = parse_shape("2,3,3,4");
  for (const Partition& lambda : {Partition{4, 3, 2, 1}, Partition{2, 2, 1, 1}, Partition{3, 1}}) {
    const DLPoset dl(shape, lambda);
    for (const DLArray& a : dl.arrays()) {
      EXPECT_EQ(dl_from_vrt(shape, a.vrt()), a);
      EXPECT_EQ(dl_from_hor(shape, a.hor()), a);
    }
  }
  // columns 1 and 3 hold comparable corners: (1,3) < (2,1)
  EXPECT_THROW(dl_from_vrt(shape, {1, 0, 2, 0}), DomainError);
}

TEST(DL, MinimalDisorderExample) {
  const auto cp = std::make_shared<const CornerPoset>(staircase_corners(parse_shape("2,3,3,4")));
  ASSERT_EQ(cp->corners(), (std::vector<Cell>{{2, 1}, {3, 2}, {1, 3}, {4, 4}}));
  const DLArray a(cp, {2, 2, 1, 1});
  const auto d = minimal_dl_disorders(a);
  const std::pair<Cell, Cell> minimal{{3, 2}, {4, 4}}, not_minimal{{2, 1}, {4, 4}};
  EXPECT_NE(std::find(d.begin(), d.end(), minimal), d.end());
  EXPECT_EQ(std::find(d.begin(), d.end(), not_minimal), d.end());
  EXPECT_TRUE(minimal_dl_disorders(DLArray(cp, {1, 2, 1, 3})).empty());
  EXPECT_THROW(minimal_dl_disorders(DLArray(cp, {1, 1, 2, 1})), DomainError);
}

// DL disorders read through columns and through rows give the minimal
// disorders of the vertical and horizontal sides.
TEST(DL, DisordersMatchBothSides) {
  for (const auto& shape : canonical_shapes(4))
    for (int w = 1; w <= 5; ++w) {
      const CornerPoset cp = staircase_corners(shape);
      for (const Partition& lambda : partitions_of(w, cp.size())) {
        const DLPoset dl(shape, lambda);
        for (const DLArray& a : dl.arrays()) {
          std::set<std::pair<int, int>> cols, rows;
          for (auto [s, t] : minimal_dl_disorders(a)) {
            cols.insert({std::min(s.col, t.col), std::max(s.col, t.col)});
            rows.insert({std::min(s.row, t.row), std::max(s.row, t.row)});
          }
          ASSERT_EQ(cols, as_pairs(minimal_disorders(cp.vertical(), a.vrt()))) << a.to_string();
          ASSERT_EQ(rows, as_pairs(minimal_disorders(cp.horizontal(), a.hor()))) << a.to_string();
        }
      }
    }
}

TEST(DL, BijectionWithHorizontalDominantSet) {
  for (const auto& shape : canonical_shapes(4)) {
    const CornerPoset cp = staircase_corners(shape);
    for (const Partition& lambda : partitions_of(5, cp.size())) {
      const DLPoset dl(shape, lambda);
      const DominantSet h(cp.horizontal().flipped(), lambda);
      ASSERT_EQ(h.size(), dl.size());
      for (const DLArray& a : dl.arrays()) {
        ASSERT_TRUE(h.index_of(a.hor().reversed())) << a.to_string();
        ASSERT_TRUE(is_dominant(cp.horizontal(), a.hor()));
      }
    }
  }
}

TEST(DL, RegularCountIsLinearExtensions) {
  for (const auto& shape : canonical_shapes(5)) {
    const CornerPoset cp = staircase_corners(shape);
    std::vector<int> parts;
    for (int k = static_cast<int>(cp.size()); k >= 1; --k) parts.push_back(k);
    const DLPoset dl(shape, Partition(parts));
    ASSERT_EQ(dl.size(), count_linear_extensions(cp.poset())) << shape.to_string();
  }
}

TEST(DL, OrderAgreementExamples) {
  EXPECT_TRUE(dl_order_agreement(DLPoset(parse_shape("2,3,3,4"), Partition{4, 3, 2, 1})).ok);
  EXPECT_EQ(DLPoset(parse_shape("2,3,3,4"), Partition{4, 3, 2, 1}).size(), 8u);
  EXPECT_TRUE(dl_order_agreement(DLPoset(parse_shape("1"), Partition{3})).ok);
  for (const auto& shape : canonical_shapes(4))
    for (int w = 1; w <= 5; ++w)
      for (const Partition& lambda : partitions_of(w, staircase_corners(shape).size())) {
        const AgreementReport r = dl_order_agreement(DLPoset(shape, lambda));
        ASSERT_TRUE(r.ok) << shape.to_string() << " " << lambda.to_string();
      }
}

TEST(DL, EmptyWhenLambdaTooLong) {
  EXPECT_EQ(DLPoset(parse_shape("1,2"), Partition{1, 1, 1}).size(), 0u);
}

TEST(DL, DotNodesAreArrays) {
  const DLPoset dl(parse_shape("2,3,3,4"), Partition{2, 2, 1, 1});
  const std::string dot = dl_to_dot(dl);
  EXPECT_EQ(dot.rfind("digraph dl {", 0), 0u);
  for (const DLArray& a : dl.arrays()) EXPECT_NE(dot.find(a.to_string()), std::string::npos);
}
