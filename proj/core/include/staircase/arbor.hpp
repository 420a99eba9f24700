#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "staircase/poset.hpp"

namespace staircase {

// Arborescent poset S with an order-reversing injection v : S -> [1, m]
// such that every up-set S_{>=s} lands on an interval (checked as: v(s) <
// v(t) < v(r) and s > r imply t > r).
class AntilinearizedPoset {
 public:
  AntilinearizedPoset() = default;
  // Element s of `poset` sits at slot v[s]. Throws ValidationError.
  AntilinearizedPoset(FinitePoset poset, std::vector<int> v, std::size_t m);
  // Elements named by their slots; covers (a, b) mean slot a is covered by slot b.
  static AntilinearizedPoset from_slots(std::size_t m, const std::vector<int>& slots,
                                        const std::vector<std::pair<int, int>>& covers);

  std::size_t m() const { return m_; }
  std::size_t size() const { return v_.size(); }
  const FinitePoset& poset() const { return poset_; }
  int v(std::size_t s) const { return v_[s]; }
  const std::vector<int>& v() const { return v_; }
  // Element at 1-based slot k.
  std::optional<std::size_t> at(int k) const;
  // s strictly above t.
  bool above(std::size_t s, std::size_t t) const { return poset_.less(t, s); }
  // #S_{<=k} = #{s : v(s) <= k}.
  std::size_t count_upto(int k) const;

 private:
  FinitePoset poset_;
  std::vector<int> v_;
  std::vector<std::optional<std::size_t>> slot_;  // index k-1
  std::size_t m_ = 0;
};

// Mirror image: h : S -> [1, n] order-preserving, stored through the flip
// op(l) = n - l + 1 which turns it into an anti-linearization.
class LinearizedPoset {
 public:
  LinearizedPoset() = default;
  LinearizedPoset(FinitePoset poset, std::vector<int> h, std::size_t n);

  std::size_t n() const { return flipped_.m(); }
  std::size_t size() const { return h_.size(); }
  const FinitePoset& poset() const { return flipped_.poset(); }
  int h(std::size_t s) const { return h_[s]; }
  const std::vector<int>& h() const { return h_; }
  std::optional<std::size_t> at(int k) const;
  const AntilinearizedPoset& flipped() const { return flipped_; }

 private:
  std::vector<int> h_;
  AntilinearizedPoset flipped_;
};

}  // namespace staircase
