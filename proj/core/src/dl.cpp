#include "staircase/dl.hpp"

#include <numeric>

#include "staircase/error.hpp"

namespace staircase {

DLArray::DLArray(std::shared_ptr<const CornerPoset> corners, std::vector<int> values)
    : corners_(std::move(corners)), values_(std::move(values)) {
  if (values_.size() != corners_->size()) throw DomainError("one value per corner required");
  for (int v : values_)
    if (v < 0) throw DomainError("array values must be nonnegative");
}

int DLArray::value(Cell c) const {
  auto k = corners_->index_of(c);
  return k ? values_[*k] : 0;
}

int DLArray::weight() const { return std::accumulate(values_.begin(), values_.end(), 0); }

bool DLArray::is_dense() const {
  const FinitePoset& p = corners_->poset();
  for (auto [x, y] : p.covers())
    if (values_[x] > values_[y]) return false;
  return true;
}

Composition DLArray::hor() const {
  std::vector<int> out(static_cast<std::size_t>(shape().rows()), 0);
  for (std::size_t k = 0; k < values_.size(); ++k) out[corners_->corners()[k].row - 1] += values_[k];
  return Composition(std::move(out));
}

Composition DLArray::vrt() const {
  std::vector<int> out(shape().columns(), 0);
  for (std::size_t k = 0; k < values_.size(); ++k) out[corners_->corners()[k].col - 1] += values_[k];
  return Composition(std::move(out));
}

std::string DLArray::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ' ';
    s += corners_->corners()[k].to_string() + "=" + std::to_string(values_[k]);
  }
  return s;
}

DLArray dl_from_vrt(std::shared_ptr<const CornerPoset> corners, const Composition& d) {
  if (!is_dominant(corners->vertical(), d))
    throw DomainError(d.to_string() + " is not a dominant vertical weight");
  std::vector<int> values;
  for (Cell c : corners->corners()) values.push_back(d.at(c.col));
  return DLArray(std::move(corners), std::move(values));
}

DLArray dl_from_hor(std::shared_ptr<const CornerPoset> corners, const Composition& e) {
  if (!is_dominant(corners->horizontal(), e))
    throw DomainError(e.to_string() + " is not a dominant horizontal weight");
  std::vector<int> values;
  for (Cell c : corners->corners()) values.push_back(e.at(c.row));
  return DLArray(std::move(corners), std::move(values));
}

DLArray dl_from_vrt(const StaircaseShape& shape, const Composition& d) {
  return dl_from_vrt(std::make_shared<const CornerPoset>(staircase_corners(shape)), d);
}

DLArray dl_from_hor(const StaircaseShape& shape, const Composition& e) {
  return dl_from_hor(std::make_shared<const CornerPoset>(staircase_corners(shape)), e);
}

std::vector<std::pair<Cell, Cell>> minimal_dl_disorders(const DLArray& a) {
  if (!a.is_dense()) throw DomainError("array is not DL-dense");
  const auto& cs = a.corners().corners();
  const auto& val = a.values();
  std::vector<std::pair<Cell, Cell>> out;
  for (std::size_t s = 0; s < cs.size(); ++s)
    for (std::size_t t = 0; t < cs.size(); ++t) {
      const Cell p = cs[s], q = cs[t];
      if (!(p.row < q.row && p.col < q.col) || val[s] <= val[t]) continue;
      bool minimal = true;
      for (std::size_t r = 0; r < cs.size() && minimal; ++r) {
        if (r == s || r == t) continue;
        const Cell c = cs[r];
        const int x = val[r];
        const bool down_left = (c.row > p.row && c.col < p.col) || (c.row > q.row && c.col < q.col);
        const bool up_right = (c.row < p.row && c.col > p.col) || (c.row < q.row && c.col > q.col);
        const bool inside = p.row < c.row && c.row < q.row && p.col < c.col && c.col < q.col;
        if (down_left && x < val[s]) minimal = false;
        if (up_right && x > val[t]) minimal = false;
        if (inside && val[t] <= x && x <= val[s]) minimal = false;
      }
      if (minimal) out.push_back({p, q});
    }
  return out;
}

DLPoset::DLPoset(const StaircaseShape& shape, const Partition& lambda)
    : corners_(std::make_shared<const CornerPoset>(staircase_corners(shape))),
      lambda_(lambda),
      dominant_(corners_->vertical(), lambda) {
  for (const Composition& d : dominant_.elements()) arrays_.push_back(dl_from_vrt(corners_, d));
}

AgreementReport dl_order_agreement(const DLPoset& dl) {
  AgreementReport r;
  std::vector<Composition> h, v;
  for (const DLArray& a : dl.arrays()) {
    h.push_back(a.hor());
    v.push_back(a.vrt());
  }
  for (std::size_t x = 0; x < dl.size(); ++x)
    for (std::size_t y = 0; y < dl.size(); ++y) {
      ++r.pairs;
      const bool by_hor = bruhat_leq_criterion(h[x], h[y]);
      const bool by_vrt = bruhat_leq_criterion(v[x], v[y]);
      if (by_hor != by_vrt || by_vrt != dl.poset().leq(x, y)) {
        r.ok = false;
        r.witness = std::pair{x, y};
        return r;
      }
    }
  return r;
}

std::string dl_to_dot(const DLPoset& dl) {
  std::vector<std::string> names;
  for (const DLArray& a : dl.arrays()) names.push_back(a.to_string());
  DotOptions opt;
  opt.graph_name = "dl";
  for (Transposition t : dl.labels()) opt.edge_labels.push_back(t.to_string());
  return to_dot(dl.poset(), names, opt);
}

}  // namespace staircase
