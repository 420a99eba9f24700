#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace staircase {

using Relation = std::pair<std::size_t, std::size_t>;  // (x, y) means x < y

// Finite poset on 0..size()-1, stored as its Hasse diagram plus the full
// order relation. Immutable after construction.
class FinitePoset {
 public:
  FinitePoset() = default;

  std::size_t size() const { return n_; }
  // Sorted (x, y) pairs with y covering x.
  const std::vector<Relation>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_[x]; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_[x]; }
  bool leq(std::size_t x, std::size_t y) const {
    return (leq_[x * words_ + y / 64] >> (y % 64)) & 1u;
  }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  bool is_cover(std::size_t x, std::size_t y) const;
  // Index of the cover (x, y) in covers(), if it is one.
  std::optional<std::size_t> cover_index(std::size_t x, std::size_t y) const;

  // Closed interval [x, y], in a linear-extension order.
  std::vector<std::size_t> interval(std::size_t x, std::size_t y) const;
  // A fixed linear extension of the whole poset.
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  friend FinitePoset transitive_reduce(std::size_t n, const std::vector<Relation>& relations);

 private:
  std::size_t n_ = 0;
  std::vector<Relation> covers_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> leq_;  // row x = bitset of {y : x <= y}
  std::vector<std::size_t> topo_;
};

// Builds the poset generated by `relations` (pairs x < y, redundant pairs
// allowed). Throws ValidationError naming a cycle if the relation is cyclic.
FinitePoset transitive_reduce(std::size_t n, const std::vector<Relation>& relations);

struct GradedReport {
  bool graded = true;
  // Interval with maximal chains of different lengths, when not graded.
  std::optional<Relation> witness;
  int shortest = 0;
  int longest = 0;
};

bool is_bounded(const FinitePoset& p);
GradedReport graded_report(const FinitePoset& p);
inline bool is_graded(const FinitePoset& p) { return graded_report(p).graded; }
// Rank function; requires a bounded graded poset.
std::vector<int> rank(const FinitePoset& p);

struct ThinReport {
  bool thin = true;
  bool subthin = true;
  // First length-2 interval with a middle count other than 2.
  std::optional<Relation> witness;
  std::size_t witness_middle = 0;
};

// Throws DomainError on non-graded input.
ThinReport thin_report(const FinitePoset& p);
inline bool is_thin(const FinitePoset& p) { return thin_report(p).thin; }
inline bool is_subthin(const FinitePoset& p) { return thin_report(p).subthin; }

// Full Moebius table, filled row by row on demand. Thread-compatible only:
// build one per thread or fill it eagerly first.
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& p);
  // mu(x, y); zero when x is not below y.
  std::int64_t operator()(std::size_t x, std::size_t y);
  void fill_all();

 private:
  const std::vector<std::int64_t>& row(std::size_t x);
  const FinitePoset* p_;
  std::vector<std::vector<std::int64_t>> rows_;
};

std::int64_t mobius(const FinitePoset& p, std::size_t x, std::size_t y);
// Philip Hall form: alternating count of chains x = x0 < ... < xk = y.
std::int64_t mobius_via_chains(const FinitePoset& p, std::size_t x, std::size_t y);

// One label per cover, aligned with FinitePoset::covers(). Labels compare
// as integers; callers encode other total orders into them.
struct EdgeLabelling {
  std::vector<std::int64_t> labels;
};

struct ELReport {
  bool ok = true;
  std::optional<Relation> witness;
  std::string reason;
};

ELReport is_el_labelling(const FinitePoset& p, const EdgeLabelling& e);

struct ELOrderSearch {
  bool found = false;
  // False when there were too many distinct labels to try every order.
  bool complete = true;
  // Label ids from smallest to largest, when found.
  std::vector<std::size_t> order;
  std::size_t tried = 0;
};

// Looks for a total order on label ids (one id per cover, aligned with
// covers()) under which the labelling is EL. Exhaustive up to max_distinct ids.
ELOrderSearch search_el_order(const FinitePoset& p, const std::vector<std::size_t>& label_ids,
                              std::size_t max_distinct = 8);

// Down-set dynamic program; guarded at 40 elements.
std::uint64_t count_linear_extensions(const FinitePoset& p);

struct DotOptions {
  std::string graph_name = "hasse";
  std::vector<std::string> edge_labels;  // aligned with covers(), may be empty
  std::vector<bool> highlighted;         // per element, may be empty
};

// Hasse diagram in DOT; nodes and edges sorted by node name for byte stable output.
std::string to_dot(const FinitePoset& p, const std::vector<std::string>& names,
                   const DotOptions& options = {});

}  // namespace staircase
