#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "staircase/arbor.hpp"
#include "staircase/poset.hpp"

namespace staircase {

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
  std::string to_string() const;  // "(i,j)"
};

// Column heights n_1 <= ... <= n_m. Zero heights are tolerated because
// erasing rows and columns can produce them; parse_shape rejects them.
class StaircaseShape {
 public:
  StaircaseShape() = default;
  explicit StaircaseShape(std::vector<int> heights);

  const std::vector<int>& heights() const { return heights_; }
  std::size_t columns() const { return heights_.size(); }
  int rows() const { return heights_.empty() ? 0 : heights_.back(); }
  int height(int col) const { return heights_.at(col - 1); }  // 1-based
  bool contains(Cell c) const;
  std::size_t cell_count() const;
  std::vector<Cell> cells() const;  // column by column
  std::string to_string() const;    // "2,3,3,4"

  friend auto operator<=>(const StaircaseShape&, const StaircaseShape&) = default;

 private:
  std::vector<int> heights_;
};

// User-facing parse: comma list of positive weakly increasing heights.
StaircaseShape parse_shape(const std::string& text);

// Corners with the order (i,j) >= (i',j') iff i >= i' and j <= j'.
class CornerPoset {
 public:
  CornerPoset() = default;
  CornerPoset(StaircaseShape shape, std::vector<Cell> corners);

  const StaircaseShape& shape() const { return shape_; }
  // Sorted by column.
  const std::vector<Cell>& corners() const { return corners_; }
  std::size_t size() const { return corners_.size(); }
  // Element indices follow corners().
  const FinitePoset& poset() const { return poset_; }
  std::optional<std::size_t> index_of(Cell c) const;
  std::optional<std::size_t> in_column(int col) const;
  std::optional<std::size_t> in_row(int row) const;

  static bool geq(Cell a, Cell b) { return a.row >= b.row && a.col <= b.col; }

  // v = vrt (column), m = number of columns.
  AntilinearizedPoset vertical() const;
  // h = hor (row), n = n_m.
  LinearizedPoset horizontal() const;

 private:
  StaircaseShape shape_;
  std::vector<Cell> corners_;
  FinitePoset poset_;
};

CornerPoset staircase_corners(const StaircaseShape& shape);

// Shape with row i and column j removed; throws DomainError outside the shape.
StaircaseShape erase_row_col(const StaircaseShape& shape, Cell cell);
// Image of `c` under the reindexing after erasing `erased`; nullopt when c
// shares its row or column.
std::optional<Cell> erased_cell_map(Cell erased, Cell c);
// Inverse of erased_cell_map.
Cell unerased_cell_map(Cell erased, Cell c);

struct ShapeFromPoset {
  StaircaseShape shape;
  std::vector<Cell> psi;  // corner assigned to each element, vrt(psi(s)) = v(s)
};

// Throws ValidationError if a connected component of S misses part of its
// slot interval or the corner poset does not come out isomorphic.
ShapeFromPoset shape_from_antilinearized_poset(const AntilinearizedPoset& base);

StaircaseShape drop_empty_rows_cols(const StaircaseShape& shape);

// Shapes fixed by drop_empty_rows_cols with 1..max_corners corners,
// sorted by (corner count, heights).
std::vector<StaircaseShape> canonical_shapes(std::size_t max_corners);

}  // namespace staircase
