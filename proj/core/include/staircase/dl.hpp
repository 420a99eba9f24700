#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/bruhat.hpp"
#include "staircase/composition.hpp"
#include "staircase/dominant.hpp"
#include "staircase/shapes.hpp"

namespace staircase {

// Nonnegative labels on the corners of a shape (zero elsewhere).
class DLArray {
 public:
  DLArray(std::shared_ptr<const CornerPoset> corners, std::vector<int> values);

  const StaircaseShape& shape() const { return corners_->shape(); }
  const CornerPoset& corners() const { return *corners_; }
  const std::shared_ptr<const CornerPoset>& corners_ptr() const { return corners_; }
  // Aligned with corners().corners().
  const std::vector<int>& values() const { return values_; }
  int value(Cell c) const;  // 0 off the corners
  int weight() const;
  // Monotone for "down-left is bigger".
  bool is_dense() const;
  Composition hor() const;  // row sums, length n_m
  Composition vrt() const;  // column sums, length m
  std::string to_string() const;  // "(2,1)=2 (3,2)=3 ..."

  friend bool operator==(const DLArray& a, const DLArray& b) {
    return a.shape() == b.shape() && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const CornerPoset> corners_;
  std::vector<int> values_;
};

inline Composition hor(const DLArray& a) { return a.hor(); }
inline Composition vrt(const DLArray& a) { return a.vrt(); }

// Inverse of vrt (resp. hor) on dominant weights; throws DomainError otherwise.
DLArray dl_from_vrt(std::shared_ptr<const CornerPoset> corners, const Composition& d);
DLArray dl_from_hor(std::shared_ptr<const CornerPoset> corners, const Composition& e);
DLArray dl_from_vrt(const StaircaseShape& shape, const Composition& d);
DLArray dl_from_hor(const StaircaseShape& shape, const Composition& e);

// Incomparable corners (i,j), (i',j') with i < i', j < j', A_ij > A_i'j'
// such that corners down-left of either are >= A_ij, corners up-right of
// either are <= A_i'j', and corners strictly inside the box avoid
// [A_i'j', A_ij]. Throws DomainError on a non-dense array.
std::vector<std::pair<Cell, Cell>> minimal_dl_disorders(const DLArray& a);

// DL_n(lambda) with the order generated by minimal DL-disorders.
class DLPoset {
 public:
  DLPoset(const StaircaseShape& shape, const Partition& lambda);

  const StaircaseShape& shape() const { return corners_->shape(); }
  const CornerPoset& corners() const { return *corners_; }
  const Partition& lambda() const { return lambda_; }
  // Lexicographic in the vrt weight.
  const std::vector<DLArray>& arrays() const { return arrays_; }
  std::size_t size() const { return arrays_.size(); }
  const FinitePoset& poset() const { return dominant_.poset(); }
  // Column transpositions per cover.
  const std::vector<Transposition>& labels() const { return dominant_.labels(); }
  const DominantSet& vertical() const { return dominant_; }
  std::optional<std::size_t> index_of_vrt(const Composition& d) const { return dominant_.index_of(d); }

 private:
  std::shared_ptr<const CornerPoset> corners_;
  Partition lambda_;
  DominantSet dominant_;
  std::vector<DLArray> arrays_;
};

inline DLPoset enumerate_dl(const StaircaseShape& shape, const Partition& lambda) {
  return DLPoset(shape, lambda);
}

struct AgreementReport {
  bool ok = true;
  std::size_t pairs = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// hor(A) <= hor(B) iff vrt(A) <= vrt(B) iff A <= B, for all pairs.
AgreementReport dl_order_agreement(const DLPoset& dl);

std::string dl_to_dot(const DLPoset& dl);

}  // namespace staircase
