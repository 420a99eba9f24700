#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/poset.hpp"

namespace staircase {

struct Transposition {
  int i = 0;
  int j = 0;  // 1 <= i < j
  friend bool operator==(const Transposition&, const Transposition&) = default;
  std::string to_string() const;  // "(i,j)"
};

// (i l) before (j k) iff l < k, or l == k and i > j.
std::strong_ordering el_label_order(Transposition a, Transposition b);
// Integer key realizing el_label_order (for EdgeLabelling).
std::int64_t el_label_key(Transposition t);

// #{i < j : nu_i < nu_j}
int length(const Composition& nu);

// Bruhat comparison by prefix counts: nu <= mu iff for all p and t,
// #{j <= p : nu_j >= t} >= #{j <= p : mu_j >= t}. Same multiset assumed.
bool bruhat_leq_criterion(const Composition& nu, const Composition& mu);

// nu covered by (i j)nu: nu_i > nu_j and no i < k < j has nu_k in [nu_j, nu_i].
bool is_bruhat_cover_move(const Composition& nu, Transposition t);

// Distinct rearrangements of lambda padded to m, with their Bruhat graph.
class Orbit {
 public:
  static constexpr std::size_t kMaxLength = 8;
  static constexpr std::size_t kMaxElements = 5040;

  Orbit(const Partition& lambda, std::size_t m);
  // Orbit of an arbitrary multiset (entries need not be a partition's).
  explicit Orbit(const Composition& any_arrangement);

  std::size_t m() const { return m_; }
  const Composition& dominant() const { return elements_.front(); }  // lambda_+
  const Composition& antidominant() const { return elements_.back(); }  // lambda_-
  // Lexicographically decreasing; front is lambda_+, back is lambda_-.
  const std::vector<Composition>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index_of(const Composition& nu) const;  // throws DomainError
  bool contains(const Composition& nu) const { return index_.count(nu) != 0; }

  const FinitePoset& poset() const { return poset_; }
  // Transposition per cover, aligned with poset().covers().
  const std::vector<Transposition>& labels() const { return labels_; }
  EdgeLabelling el_labelling() const;

 private:
  void build(Composition start);
  std::size_t m_ = 0;
  std::vector<Composition> elements_;
  std::unordered_map<Composition, std::size_t> index_;
  FinitePoset poset_;
  std::vector<Transposition> labels_;
};

// Reachability in the Hasse diagram; throws if either is not in the orbit.
bool bruhat_leq(const Orbit& orbit, const Composition& nu, const Composition& mu);

// lambda + delta on the nonzero parts: adds (l-1, ..., 1, 0) to the l
// nonzero parts and leaves the zero padding alone. With no zero parts this
// is lambda + (m-1, ..., 0).
Composition regularize(const Composition& lambda_plus);

// pi_lambda: orbit(regularize(lambda)) -> orbit(lambda).
Composition parabolic_project(const Composition& lambda_plus, const Composition& nu);
// Minimal (plus) and maximal (minus) length lifts along parabolic_project.
Composition psi_plus(const Composition& lambda_plus, const Composition& b);
Composition psi_minus(const Composition& lambda_plus, const Composition& b);

}  // namespace staircase
