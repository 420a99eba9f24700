#include <gtest/gtest.h>

#include <set>

#include "staircase/arbor.hpp"
#include "staircase/error.hpp"
#include "staircase/shapes.hpp"

using namespace staircase;

namespace {

std::vector<Cell> cells(std::initializer_list<std::pair<int, int>> l) {
  std::vector<Cell> out;
  for (auto [i, j] : l) out.push_back({i, j});
  return out;
}

// Weakly increasing heights in [1, max_h], up to max_cols columns.
std::vector<StaircaseShape> all_shapes(int max_cols, int max_h) {
  std::vector<StaircaseShape> out;
  std::vector<int> h;
  auto rec = [&](auto&& self, int lo) -> void {
    if (!h.empty()) out.emplace_back(h);
    if (static_cast<int>(h.size()) == max_cols) return;
    for (int v = lo; v <= max_h; ++v) {
      h.push_back(v);
      self(self, v);
      h.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::pair<Cell, Cell>> hasse(const CornerPoset& cp) {
  std::vector<std::pair<Cell, Cell>> out;
  for (auto [a, b] : cp.poset().covers()) out.push_back({cp.corners()[a], cp.corners()[b]});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Corners, Shape233355) {
  const CornerPoset cp = staircase_corners(parse_shape("2,3,3,3,5,5"));
  EXPECT_EQ(cp.corners(), cells({{2, 1}, {3, 2}, {1, 3}, {5, 5}, {4, 6}}));
  std::vector<std::pair<Cell, Cell>> want{{{1, 3}, {2, 1}}, {{1, 3}, {3, 2}}, {{4, 6}, {5, 5}}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(hasse(cp), want);
  EXPECT_FALSE(cp.in_column(4));
}

TEST(Corners, RectangleIsChain) {
  const CornerPoset cp = staircase_corners(StaircaseShape({3, 3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(cp.corners(), cells({{3, 1}, {2, 2}, {1, 3}}));
  std::vector<std::pair<Cell, Cell>> want{{{1, 3}, {2, 2}}, {{2, 2}, {3, 1}}};
  EXPECT_EQ(hasse(cp), want);
}

TEST(Corners, TriangleIsAntichain) {
  const CornerPoset cp = staircase_corners(StaircaseShape({1, 2, 3, 4, 4, 4, 4}));
  EXPECT_EQ(cp.corners(), cells({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
  EXPECT_TRUE(cp.poset().covers().empty());
}

TEST(Corners, StructuralPropertiesOnAllSmallShapes) {
  for (const StaircaseShape& shape : all_shapes(7, 7)) {
    const CornerPoset cp = staircase_corners(shape);
    const auto& cs = cp.corners();
    std::set<int> rows, cols;
    for (Cell c : cs) {
      ASSERT_TRUE(shape.contains(c));
      ASSERT_TRUE(rows.insert(c.row).second) << shape.to_string();
      ASSERT_TRUE(cols.insert(c.col).second) << shape.to_string();
    }
    // jump cells are corners
    for (int j = 1; j <= static_cast<int>(shape.columns()); ++j) {
      const int prev = j == 1 ? 0 : shape.height(j - 1);
      if (shape.height(j) > prev) { ASSERT_TRUE(cp.index_of({shape.height(j), j})) << shape.to_string(); }
    }
    const FinitePoset& p = cp.poset();
    for (std::size_t s = 0; s < cs.size(); ++s) {
      ASSERT_LE(p.lower_covers(s).size(), 1u);
      // up-sets land on intervals of columns and of rows
      std::vector<int> vc, hr;
      for (std::size_t t = 0; t < cs.size(); ++t)
        if (p.leq(s, t)) {
          vc.push_back(cs[t].col);
          hr.push_back(cs[t].row);
        }
      for (auto* v : {&vc, &hr}) {
        const int lo = *std::min_element(v->begin(), v->end());
        const int hi = *std::max_element(v->begin(), v->end());
        std::set<int> members(v->begin(), v->end());
        for (std::size_t t = 0; t < cs.size(); ++t) {
          const int val = v == &vc ? cs[t].col : cs[t].row;
          if (val >= lo && val <= hi) { ASSERT_TRUE(members.count(val)) << shape.to_string(); }
        }
      }
      for (std::size_t t = 0; t < cs.size(); ++t)
        if (!p.comparable(s, t)) { ASSERT_EQ(cs[s].col < cs[t].col, cs[s].row < cs[t].row); }
    }
  }
}

TEST(Corners, RoundTripThroughShapeFromPoset) {
  for (const StaircaseShape& shape : all_shapes(6, 6)) {
    const CornerPoset cp = staircase_corners(shape);
    const ShapeFromPoset back = shape_from_antilinearized_poset(cp.vertical());
    const CornerPoset again = staircase_corners(back.shape);
    ASSERT_EQ(back.psi.size(), cp.size());
    for (std::size_t s = 0; s < cp.size(); ++s) {
      ASSERT_EQ(back.psi[s].col, cp.corners()[s].col);
      for (std::size_t t = 0; t < cp.size(); ++t) {
        const auto a = again.index_of(back.psi[s]), b = again.index_of(back.psi[t]);
        ASSERT_TRUE(a && b);
        ASSERT_EQ(again.poset().leq(*a, *b), cp.poset().leq(s, t)) << shape.to_string();
      }
    }
  }
}

TEST(EraseRowCol, Examples) {
  EXPECT_EQ(erase_row_col(StaircaseShape({2, 3, 3}), {2, 1}), StaircaseShape({2, 2}));
  EXPECT_EQ(erase_row_col(StaircaseShape({1}), {1, 1}).columns(), 0u);
  EXPECT_EQ(erase_row_col(StaircaseShape({2, 3, 3, 3, 5, 5}), {1, 3}), StaircaseShape({1, 2, 2, 4, 4}));
  EXPECT_THROW(erase_row_col(StaircaseShape({2, 3}), {3, 1}), DomainError);
}

TEST(EraseRowCol, CellMapsInvert) {
  const Cell erased{2, 3};
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      const auto img = erased_cell_map(erased, {i, j});
      if (i == erased.row || j == erased.col) {
        EXPECT_FALSE(img);
        continue;
      }
      ASSERT_TRUE(img);
      EXPECT_EQ(unerased_cell_map(erased, *img), (Cell{i, j}));
    }
}

TEST(ShapeFromPoset, Examples) {
  const auto vee = AntilinearizedPoset::from_slots(3, {1, 2, 3}, {{3, 1}, {3, 2}});
  EXPECT_EQ(shape_from_antilinearized_poset(vee).shape, StaircaseShape({2, 3, 3}));
  const auto one = AntilinearizedPoset::from_slots(1, {1}, {});
  EXPECT_EQ(shape_from_antilinearized_poset(one).shape, StaircaseShape({1}));
  const auto anti = AntilinearizedPoset::from_slots(2, {1, 2}, {});
  const ShapeFromPoset r = shape_from_antilinearized_poset(anti);
  EXPECT_EQ(r.shape, StaircaseShape({1, 2}));
  EXPECT_EQ(r.psi, cells({{1, 1}, {2, 2}}));
}

TEST(ShapeFromPoset, RejectsInconsistentSlots) {
  // 1 above 3 with the unrelated 2 slotted in between
  try {
    AntilinearizedPoset::from_slots(3, {1, 2, 3}, {{3, 1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2,3)"), std::string::npos) << e.what();
  }
  // order-preserving instead of reversing
  EXPECT_THROW(AntilinearizedPoset::from_slots(2, {1, 2}, {{1, 2}}), ValidationError);
}

TEST(DropEmpty, Examples) {
  EXPECT_EQ(drop_empty_rows_cols(StaircaseShape({2, 3, 3, 3, 5, 5})), StaircaseShape({2, 3, 3, 5, 5}));
  EXPECT_EQ(drop_empty_rows_cols(StaircaseShape({3, 3, 3})), StaircaseShape({3, 3, 3}));
  EXPECT_EQ(drop_empty_rows_cols(StaircaseShape({1})), StaircaseShape({1}));
  for (const StaircaseShape& shape : all_shapes(6, 6)) {
    const StaircaseShape d = drop_empty_rows_cols(shape);
    const CornerPoset a = staircase_corners(shape), b = staircase_corners(d);
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(d.columns(), b.size());
    ASSERT_EQ(static_cast<std::size_t>(d.rows()), b.size());
    ASSERT_EQ(a.poset().covers().size(), b.poset().covers().size());
  }
}

TEST(CanonicalShapes, CatalanCounts) {
  const auto shapes = canonical_shapes(5);
  std::size_t by_size[6] = {};
  for (const auto& s : shapes) {
    ASSERT_EQ(drop_empty_rows_cols(s), s);
    ++by_size[staircase_corners(s).size()];
  }
  EXPECT_EQ(by_size[1], 1u);
  EXPECT_EQ(by_size[2], 2u);
  EXPECT_EQ(by_size[3], 5u);
  EXPECT_EQ(by_size[4], 14u);
  EXPECT_EQ(by_size[5], 42u);
}

TEST(ParseShape, Errors) {
  EXPECT_THROW(parse_shape("3,2"), DomainError);
  EXPECT_THROW(parse_shape("0,2"), DomainError);
  EXPECT_THROW(parse_shape("1,x"), ParseError);
  EXPECT_THROW(parse_shape(""), DomainError);
  EXPECT_EQ(parse_shape("2,3,3,4").to_string(), "2,3,3,4");
}
