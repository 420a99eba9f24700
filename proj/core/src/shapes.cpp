#include "staircase/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "staircase/composition.hpp"
#include "staircase/error.hpp"

namespace staircase {

std::string Cell::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

StaircaseShape::StaircaseShape(std::vector<int> heights) : heights_(std::move(heights)) {
  for (std::size_t k = 0; k < heights_.size(); ++k) {
    if (heights_[k] < 0) throw DomainError("column heights must be nonnegative");
    if (k && heights_[k] < heights_[k - 1])
      throw DomainError("column heights must be weakly increasing");
  }
}

bool StaircaseShape::contains(Cell c) const {
  return c.col >= 1 && static_cast<std::size_t>(c.col) <= columns() && c.row >= 1 &&
         c.row <= height(c.col);
}

std::size_t StaircaseShape::cell_count() const {
  return static_cast<std::size_t>(std::accumulate(heights_.begin(), heights_.end(), 0));
}

std::vector<Cell> StaircaseShape::cells() const {
  std::vector<Cell> out;
  for (std::size_t j = 0; j < columns(); ++j)
    for (int i = 1; i <= heights_[j]; ++i) out.push_back({i, static_cast<int>(j + 1)});
  return out;
}

std::string StaircaseShape::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < heights_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(heights_[k]);
  }
  return s;
}

StaircaseShape parse_shape(const std::string& text) {
  std::vector<int> h = parse_int_list(text);
  if (h.empty()) throw DomainError("shape needs at least one column");
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] <= 0) throw DomainError("column heights must be positive: " + text);
    if (k && h[k] < h[k - 1]) throw DomainError("column heights must be weakly increasing: " + text);
  }
  return StaircaseShape(std::move(h));
}

CornerPoset::CornerPoset(StaircaseShape shape, std::vector<Cell> corners)
    : shape_(std::move(shape)), corners_(std::move(corners)) {
  std::sort(corners_.begin(), corners_.end(),
            [](Cell a, Cell b) { return a.col < b.col; });
  std::vector<Relation> rel;
  for (std::size_t a = 0; a < corners_.size(); ++a)
    for (std::size_t b = 0; b < corners_.size(); ++b)
      if (a != b && geq(corners_[b], corners_[a])) rel.push_back({a, b});
  poset_ = transitive_reduce(corners_.size(), rel);
}

std::optional<std::size_t> CornerPoset::index_of(Cell c) const {
  for (std::size_t k = 0; k < corners_.size(); ++k)
    if (corners_[k] == c) return k;
  return std::nullopt;
}

std::optional<std::size_t> CornerPoset::in_column(int col) const {
  for (std::size_t k = 0; k < corners_.size(); ++k)
    if (corners_[k].col == col) return k;
  return std::nullopt;
}

std::optional<std::size_t> CornerPoset::in_row(int row) const {
  for (std::size_t k = 0; k < corners_.size(); ++k)
    if (corners_[k].row == row) return k;
  return std::nullopt;
}

AntilinearizedPoset CornerPoset::vertical() const {
  std::vector<int> v;
  for (Cell c : corners_) v.push_back(c.col);
  return AntilinearizedPoset(poset_, v, shape_.columns());
}

LinearizedPoset CornerPoset::horizontal() const {
  std::vector<int> h;
  for (Cell c : corners_) h.push_back(c.row);
  return LinearizedPoset(poset_, h, static_cast<std::size_t>(shape_.rows()));
}

StaircaseShape erase_row_col(const StaircaseShape& shape, Cell cell) {
  if (!shape.contains(cell)) throw DomainError("cell " + cell.to_string() + " is outside the shape");
  const auto& n = shape.heights();
  const std::size_t m = n.size();
  const std::size_t j = static_cast<std::size_t>(cell.col);
  std::vector<int> out;
  out.reserve(m - 1);
  for (std::size_t k = 1; k < m; ++k) {
    if (k < j) out.push_back(n[k - 1] < cell.row ? n[k - 1] : n[k - 1] - 1);
    else out.push_back(n[k] - 1);
  }
  return StaircaseShape(std::move(out));
}

std::optional<Cell> erased_cell_map(Cell erased, Cell c) {
  if (c.row == erased.row || c.col == erased.col) return std::nullopt;
  return Cell{c.row > erased.row ? c.row - 1 : c.row, c.col > erased.col ? c.col - 1 : c.col};
}

Cell unerased_cell_map(Cell erased, Cell c) {
  return Cell{c.row >= erased.row ? c.row + 1 : c.row, c.col >= erased.col ? c.col + 1 : c.col};
}

namespace {
// The lowest cell of the first nonempty column is a corner; erase its row
// and column and recurse.
std::vector<Cell> corner_cells(const StaircaseShape& shape) {
  const auto& n = shape.heights();
  auto it = std::find_if(n.begin(), n.end(), [](int h) { return h > 0; });
  if (it == n.end()) return {};
  const Cell first{*it, static_cast<int>(it - n.begin()) + 1};
  std::vector<Cell> out{first};
  for (Cell c : corner_cells(erase_row_col(shape, first))) out.push_back(unerased_cell_map(first, c));
  return out;
}
}  // namespace

CornerPoset staircase_corners(const StaircaseShape& shape) {
  return CornerPoset(shape, corner_cells(shape));
}

ShapeFromPoset shape_from_antilinearized_poset(const AntilinearizedPoset& base) {
  const std::size_t size = base.size();
  const FinitePoset& p = base.poset();

  std::vector<std::size_t> comp(size);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (auto [x, y] : p.covers()) comp[find(x)] = find(y);
  for (std::size_t s = 0; s < size; ++s)
    for (std::size_t t = 0; t < size; ++t) {
      if (find(s) != find(t) || base.v(s) >= base.v(t)) continue;
      for (int k = base.v(s) + 1; k < base.v(t); ++k) {
        auto r = base.at(k);
        if (!r || find(*r) != find(s))
          throw ValidationError("component of slot " + std::to_string(base.v(s)) +
                                " does not occupy an interval of slots (gap at " +
                                std::to_string(k) + ")");
      }
    }

  std::vector<int> heights;
  for (std::size_t k = 1; k <= base.m(); ++k) {
    int below = 0;
    for (std::size_t t = 0; t < size; ++t) below += base.v(t) < static_cast<int>(k);
    if (auto s = base.at(static_cast<int>(k))) {
      for (std::size_t t = 0; t < size; ++t) below += p.leq(t, *s);
    }
    heights.push_back(below);
  }
  ShapeFromPoset out{StaircaseShape(heights), {}};
  const CornerPoset cp = staircase_corners(out.shape);
  if (cp.size() != size) throw ValidationError("shape has the wrong number of corners");
  for (std::size_t s = 0; s < size; ++s) {
    auto c = cp.in_column(base.v(s));
    if (!c) throw ValidationError("no corner in column " + std::to_string(base.v(s)));
    out.psi.push_back(cp.corners()[*c]);
  }
  for (std::size_t s = 0; s < size; ++s)
    for (std::size_t t = 0; t < size; ++t)
      if (p.leq(s, t) != CornerPoset::geq(out.psi[t], out.psi[s]))
        throw ValidationError("corner poset is not isomorphic to the input");
  return out;
}

StaircaseShape drop_empty_rows_cols(const StaircaseShape& shape) {
  const CornerPoset cp = staircase_corners(shape);
  std::vector<int> empty_rows;
  for (int r = 1; r <= shape.rows(); ++r)
    if (!cp.in_row(r)) empty_rows.push_back(r);
  std::vector<int> out;
  for (std::size_t j = 1; j <= shape.columns(); ++j) {
    if (!cp.in_column(static_cast<int>(j))) continue;
    const int h = shape.height(static_cast<int>(j));
    const auto removed = std::upper_bound(empty_rows.begin(), empty_rows.end(), h) - empty_rows.begin();
    out.push_back(h - static_cast<int>(removed));
  }
  return StaircaseShape(std::move(out));
}

std::vector<StaircaseShape> canonical_shapes(std::size_t max_corners) {
  std::vector<StaircaseShape> out;
  for (std::size_t c = 1; c <= max_corners; ++c) {
    const int ci = static_cast<int>(c);
    std::vector<int> h(c, 1);
    h.back() = ci;
    // odometer over weakly increasing h[0..c-2] in [1, c]
    while (true) {
      StaircaseShape s(h);
      if (drop_empty_rows_cols(s) == s) out.push_back(s);
      int k = ci - 2;
      while (k >= 0 && h[k] == ci) --k;
      if (k < 0) break;
      ++h[k];
      for (int t = k + 1; t < ci - 1; ++t) h[t] = h[k];
    }
  }
  return out;
}

}  // namespace staircase
