#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "staircase/arbor.hpp"
#include "staircase/bruhat.hpp"
#include "staircase/composition.hpp"
#include "staircase/poset.hpp"

namespace staircase {

// Nine slots, S = {1,2,3,5,6,7,8}; covers 3<1, 3<2, 8<5, 7<6, 8<7.
AntilinearizedPoset example_arbor();
// Four slots, 1 above 2, 3 and 4 isolated.
AntilinearizedPoset example_nongrad();

// #{j <= k : d_j > 0} <= #S_{<=k} for all k.
bool is_admissible(const AntilinearizedPoset& base, const Composition& d);
// S[l]: d_l = 0 off v(S); otherwise every s above the element at l has d_{v(s)} >= d_l.
bool is_dominant_at(const AntilinearizedPoset& base, const Composition& d, int l);
bool is_dominant_upto(const AntilinearizedPoset& base, const Composition& d, int k);
bool is_dominant(const AntilinearizedPoset& base, const Composition& d);
// Mirror notion for an order-preserving h.
bool is_dominant(const LinearizedPoset& base, const Composition& d);

// Minimal S-disorders (i, j) of a dominant d; throws DomainError otherwise.
std::vector<Transposition> minimal_disorders(const AntilinearizedPoset& base, const Composition& d);
// Same notion on the linearized side, slots h(s) < h(t) with d bigger at h(s).
std::vector<Transposition> minimal_disorders(const LinearizedPoset& base, const Composition& d);

// Pairs of elements (s, t), slot(s) < slot(t), incomparable, value(s) > value(t),
// such that everything above either is >= value(s), everything below either
// is <= value(t) and incomparable elements slotted between avoid
// [value(t), value(s)]. Works for either orientation of the slot map.
std::vector<std::pair<std::size_t, std::size_t>> minimal_disorders_symmetric(
    const FinitePoset& poset, const std::vector<int>& slots, const std::vector<int>& values);

class DominantSet {
 public:
  DominantSet(AntilinearizedPoset base, Partition lambda);

  const AntilinearizedPoset& base() const { return base_; }
  const Partition& lambda() const { return lambda_; }
  // Lexicographically increasing.
  const std::vector<Composition>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const Composition& d) const;
  // Generated by the minimal-disorder moves.
  const FinitePoset& poset() const { return poset_; }
  const std::vector<Transposition>& labels() const { return labels_; }
  EdgeLabelling el_labelling() const;
  // Number of minimal-disorder moves that transitive reduction discarded
  // (zero when every move is a cover).
  std::size_t redundant_moves() const { return redundant_moves_; }

 private:
  AntilinearizedPoset base_;
  Partition lambda_;
  std::vector<Composition> elements_;
  std::unordered_map<Composition, std::size_t> index_;
  FinitePoset poset_;
  std::vector<Transposition> labels_;
  std::size_t redundant_moves_ = 0;
};

inline DominantSet dominant_set(const AntilinearizedPoset& base, const Partition& lambda) {
  return DominantSet(base, lambda);
}

struct BubbleSortResult {
  Composition output;
  std::vector<Transposition> swaps;
};

// One pass at slot k. Requires d admissible and S[<k]-dominant.
Composition bubble_sort_step(const AntilinearizedPoset& base, const Composition& d, int k,
                             std::vector<Transposition>* swaps = nullptr);
BubbleSortResult bubble_sort_trace(const AntilinearizedPoset& base, const Composition& d);
Composition bubble_sort(const AntilinearizedPoset& base, const Composition& d);
// reverse(bubble_sort(flip, reverse(d)))
Composition bubble_sort_op(const LinearizedPoset& base, const Composition& d);

// Calls fn on every distinct rearrangement of `multiset`, in lexicographic
// decreasing order. Stops early when fn returns false.
template <class Fn>
void for_each_arrangement(const Composition& multiset, Fn&& fn);

// Admissible rearrangements of lambda padded to m, lexicographically increasing.
std::vector<Composition> admissible_set(const AntilinearizedPoset& base, const Partition& lambda);
// bbs fibers keyed by dominant image.
std::map<Composition, std::vector<Composition>> bbs_fibers(const AntilinearizedPoset& base,
                                                           const Partition& lambda);
// Fibers of bubble_sort_op: rearrangements b with reverse(b) admissible for
// the flip, keyed by image.
std::map<Composition, std::vector<Composition>> bbs_op_fibers(const LinearizedPoset& base,
                                                              const Partition& lambda);

struct PropertyReport {
  std::size_t size = 0;
  bool regular = false;
  bool bounded = false;
  bool graded = false;
  std::optional<Relation> nongraded_witness;
  bool thin = false;
  bool subthin = false;
  // Induced transposition labelling under el_label_order.
  ELReport el_printed_order;
  // Some total order on the transposition labels gives an EL labelling.
  bool el_shellable = false;
  bool el_search_complete = true;
  std::vector<Transposition> el_certificate;  // smallest label first
  std::int64_t mobius_min = 0;
  std::int64_t mobius_max = 0;
  bool mobius_formula_checked = false;
  bool mobius_formula_ok = true;
  std::optional<Relation> mobius_formula_witness;
};

PropertyReport property_report(const DominantSet& set);

struct ParabolicSquareReport {
  bool ok = true;  // both squares commute strictly
  bool projection_ok = true;
  bool lift_ok = true;
  // psi+ o bbs^k <= bbs^k o psi+ and pi o bbs^k o psi+ = bbs^k; the strict
  // lift square can fail when bbs^k moves a repeated value past its twin.
  bool lift_lax_ok = true;
  std::size_t checked = 0;
  std::string witness;      // first failure of either strict square
  std::string lax_witness;
};

// pi o bbs^k = bbs^k o pi on AD_{S[<k]}(lambda + delta) and
// psi+ o bbs^k = bbs^k o psi+ on AD_{S[<k]}(lambda), exhaustively.
ParabolicSquareReport check_parabolic_square(const AntilinearizedPoset& base, const Partition& lambda,
                                             int k);

template <class Fn>
void for_each_arrangement(const Composition& multiset, Fn&& fn) {
  std::vector<int> cur = multiset.sorted_decreasing().entries();
  do {
    if (!fn(Composition(cur))) return;
  } while (std::prev_permutation(cur.begin(), cur.end()));
}

}  // namespace staircase
