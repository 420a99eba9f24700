#include "staircase/dominant.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "staircase/error.hpp"

namespace staircase {

AntilinearizedPoset example_arbor() {
  return AntilinearizedPoset::from_slots(9, {1, 2, 3, 5, 6, 7, 8},
                                         {{3, 1}, {3, 2}, {8, 5}, {7, 6}, {8, 7}});
}

AntilinearizedPoset example_nongrad() {
  return AntilinearizedPoset::from_slots(4, {1, 2, 3, 4}, {{2, 1}});
}

namespace {

void check_length(const AntilinearizedPoset& base, const Composition& d) {
  if (d.size() != base.m())
    throw DomainError("composition " + d.to_string() + " must have length " + std::to_string(base.m()));
}

}  // namespace

bool is_admissible(const AntilinearizedPoset& base, const Composition& d) {
  check_length(base, d);
  std::size_t nonzero = 0;
  for (std::size_t k = 1; k <= d.size(); ++k) {
    nonzero += d[k - 1] > 0;
    if (nonzero > base.count_upto(static_cast<int>(k))) return false;
  }
  return true;
}

bool is_dominant_at(const AntilinearizedPoset& base, const Composition& d, int l) {
  check_length(base, d);
  auto t = base.at(l);
  if (!t) return d.at(l) == 0;
  for (std::size_t s = 0; s < base.size(); ++s)
    if (base.above(s, *t) && d.at(base.v(s)) < d.at(l)) return false;
  return true;
}

bool is_dominant_upto(const AntilinearizedPoset& base, const Composition& d, int k) {
  for (int l = 1; l <= k; ++l)
    if (!is_dominant_at(base, d, l)) return false;
  return true;
}

bool is_dominant(const AntilinearizedPoset& base, const Composition& d) {
  return is_dominant_upto(base, d, static_cast<int>(base.m()));
}

bool is_dominant(const LinearizedPoset& base, const Composition& d) {
  if (d.size() != base.n()) throw DomainError("composition has the wrong length");
  for (int l = 1; l <= static_cast<int>(base.n()); ++l)
    if (!base.at(l) && d.at(l) != 0) return false;
  const FinitePoset& p = base.poset();
  for (std::size_t s = 0; s < base.size(); ++s)
    for (std::size_t t = 0; t < base.size(); ++t)
      if (p.less(t, s) && d.at(base.h(s)) < d.at(base.h(t))) return false;
  return true;
}

std::vector<Transposition> minimal_disorders(const AntilinearizedPoset& base, const Composition& d) {
  if (!is_dominant(base, d)) throw DomainError(d.to_string() + " is not dominant");
  std::vector<Transposition> out;
  const int m = static_cast<int>(base.m());
  for (int i = 1; i <= m; ++i) {
    auto s = base.at(i);
    if (!s) continue;
    for (int j = i + 1; j <= m; ++j) {
      auto t = base.at(j);
      if (!t || base.poset().comparable(*s, *t)) continue;
      const int di = d.at(i), dj = d.at(j);
      if (di <= dj) continue;
      bool minimal = true;
      for (int l = i + 1; l < j && minimal; ++l) {
        auto r = base.at(l);
        if (!r) continue;
        const int dl = d.at(l);
        if (base.above(*s, *r)) minimal = dl <= dj;
        else if (base.above(*r, *t)) minimal = dl >= di;
        else if (!base.poset().comparable(*r, *s) && !base.poset().comparable(*r, *t))
          minimal = dl < dj || dl > di;
      }
      if (minimal) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> minimal_disorders_symmetric(
    const FinitePoset& p, const std::vector<int>& slots, const std::vector<int>& values) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (slots[s] >= slots[t] || p.comparable(s, t) || values[s] <= values[t]) continue;
      bool minimal = true;
      for (std::size_t r = 0; r < n && minimal; ++r) {
        if (r == s || r == t) continue;
        const int x = values[r];
        if (p.less(s, r) || p.less(t, r)) minimal = minimal && x >= values[s];
        if (p.less(r, s) || p.less(r, t)) minimal = minimal && x <= values[t];
        if (!p.comparable(r, s) && !p.comparable(r, t) && slots[s] < slots[r] && slots[r] < slots[t])
          minimal = minimal && (x < values[t] || x > values[s]);
      }
      if (minimal) out.push_back({s, t});
    }
  std::sort(out.begin(), out.end(), [&](auto a, auto b) {
    return std::pair(slots[a.first], slots[a.second]) < std::pair(slots[b.first], slots[b.second]);
  });
  return out;
}

std::vector<Transposition> minimal_disorders(const LinearizedPoset& base, const Composition& d) {
  if (!is_dominant(base, d)) throw DomainError(d.to_string() + " is not dominant");
  std::vector<int> values;
  for (std::size_t s = 0; s < base.size(); ++s) values.push_back(d.at(base.h(s)));
  std::vector<Transposition> out;
  for (auto [s, t] : minimal_disorders_symmetric(base.poset(), base.h(), values))
    out.push_back({base.h(s), base.h(t)});
  return out;
}

DominantSet::DominantSet(AntilinearizedPoset base, Partition lambda)
    : base_(std::move(base)), lambda_(std::move(lambda)) {
  if (lambda_.length() <= base_.size()) {
    std::map<int, int> remaining;
    for (int e : lambda_.padded(base_.size())) ++remaining[e];
    const int m = static_cast<int>(base_.m());
    std::vector<int> cur(base_.m(), 0);
    // slots in increasing order: everything above an element sits earlier
    auto rec = [&](auto&& self, int l) -> void {
      if (l > m) {
        elements_.emplace_back(cur);
        return;
      }
      auto t = base_.at(l);
      if (!t) {
        cur[l - 1] = 0;
        self(self, l + 1);
        return;
      }
      int cap = std::numeric_limits<int>::max();
      for (std::size_t s = 0; s < base_.size(); ++s)
        if (base_.above(s, *t)) cap = std::min(cap, cur[base_.v(s) - 1]);
      for (auto& [value, count] : remaining) {
        if (count == 0 || value > cap) continue;
        --count;
        cur[l - 1] = value;
        self(self, l + 1);
        ++count;
      }
    };
    rec(rec, 1);
  }
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);

  std::vector<Relation> rel;
  for (std::size_t x = 0; x < elements_.size(); ++x)
    for (Transposition t : minimal_disorders(base_, elements_[x])) {
      auto y = index_of(elements_[x].swapped(t.i, t.j));
      if (!y) throw std::logic_error("minimal disorder move left the dominant set");
      rel.push_back({x, *y});
    }
  poset_ = transitive_reduce(elements_.size(), rel);
  redundant_moves_ = rel.size() - poset_.covers().size();
  for (auto [x, y] : poset_.covers()) {
    Transposition t;
    for (std::size_t k = 0; k < base_.m(); ++k)
      if (elements_[x][k] != elements_[y][k]) (t.i ? t.j : t.i) = static_cast<int>(k + 1);
    labels_.push_back(t);
  }
}

std::optional<std::size_t> DominantSet::index_of(const Composition& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EdgeLabelling DominantSet::el_labelling() const {
  EdgeLabelling e;
  for (Transposition t : labels_) e.labels.push_back(el_label_key(t));
  return e;
}

Composition bubble_sort_step(const AntilinearizedPoset& base, const Composition& d, int k,
                             std::vector<Transposition>* swaps) {
  if (!is_admissible(base, d)) throw DomainError(d.to_string() + " is not admissible");
  if (!is_dominant_upto(base, d, k - 1))
    throw DomainError(d.to_string() + " is not dominant below slot " + std::to_string(k));
  Composition cur = d;
  while (!is_dominant_at(base, cur, k)) {
    // maximal elements of {s : v(s) < k, d_{v(s)} < d_k}; take the largest slot
    std::vector<std::size_t> smaller;
    for (std::size_t s = 0; s < base.size(); ++s)
      if (base.v(s) < k && cur.at(base.v(s)) < cur.at(k)) smaller.push_back(s);
    int j = 0;
    for (std::size_t s : smaller) {
      bool maximal = std::none_of(smaller.begin(), smaller.end(),
                                  [&](std::size_t r) { return base.above(r, s); });
      if (maximal) j = std::max(j, base.v(s));
    }
    if (j == 0) throw std::logic_error("bubble sort found no slot to swap with");
    cur = cur.swapped(j, k);
    if (swaps) swaps->push_back({j, k});
  }
  return cur;
}

BubbleSortResult bubble_sort_trace(const AntilinearizedPoset& base, const Composition& d) {
  if (!is_admissible(base, d)) throw DomainError(d.to_string() + " is not admissible");
  BubbleSortResult r{d, {}};
  for (int k = 1; k <= static_cast<int>(base.m()); ++k)
    r.output = bubble_sort_step(base, r.output, k, &r.swaps);
  return r;
}

Composition bubble_sort(const AntilinearizedPoset& base, const Composition& d) {
  return bubble_sort_trace(base, d).output;
}

Composition bubble_sort_op(const LinearizedPoset& base, const Composition& d) {
  return bubble_sort(base.flipped(), d.reversed()).reversed();
}

std::vector<Composition> admissible_set(const AntilinearizedPoset& base, const Partition& lambda) {
  std::vector<Composition> out;
  if (lambda.length() > base.size()) return out;
  for_each_arrangement(lambda.padded(base.m()), [&](const Composition& c) {
    if (is_admissible(base, c)) out.push_back(c);
    return true;
  });
  std::reverse(out.begin(), out.end());
  return out;
}

std::map<Composition, std::vector<Composition>> bbs_fibers(const AntilinearizedPoset& base,
                                                           const Partition& lambda) {
  std::map<Composition, std::vector<Composition>> out;
  for (const Composition& c : admissible_set(base, lambda)) out[bubble_sort(base, c)].push_back(c);
  return out;
}

std::map<Composition, std::vector<Composition>> bbs_op_fibers(const LinearizedPoset& base,
                                                              const Partition& lambda) {
  std::map<Composition, std::vector<Composition>> out;
  for (const Composition& c : admissible_set(base.flipped(), lambda)) {
    const Composition b = c.reversed();
    out[bubble_sort_op(base, b)].push_back(b);
  }
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

PropertyReport property_report(const DominantSet& set) {
  PropertyReport r;
  const FinitePoset& p = set.poset();
  const AntilinearizedPoset& base = set.base();
  r.size = set.size();
  r.regular = set.lambda().length() <= base.size() && set.lambda().is_regular(base.size());
  r.bounded = is_bounded(p);
  const GradedReport g = graded_report(p);
  r.graded = g.graded;
  r.nongraded_witness = g.witness;
  if (r.graded) {
    const ThinReport t = thin_report(p);
    r.thin = t.thin;
    r.subthin = t.subthin;
  }
  r.el_printed_order = is_el_labelling(p, set.el_labelling());
  if (r.el_printed_order.ok) {
    r.el_shellable = true;
    std::vector<Transposition> sorted = set.labels();
    std::sort(sorted.begin(), sorted.end(),
              [](auto a, auto b) { return el_label_order(a, b) < 0; });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    r.el_certificate = sorted;
  } else {
    std::vector<Transposition> distinct;
    std::vector<std::size_t> ids;
    for (Transposition t : set.labels()) {
      auto it = std::find(distinct.begin(), distinct.end(), t);
      ids.push_back(static_cast<std::size_t>(it - distinct.begin()));
      if (it == distinct.end()) distinct.push_back(t);
    }
    const ELOrderSearch search = search_el_order(p, ids);
    r.el_shellable = search.found;
    r.el_search_complete = search.complete;
    for (std::size_t id : search.order) r.el_certificate.push_back(distinct[id]);
  }

  MobiusTable mu(p);
  bool first = true;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      const std::int64_t v = mu(x, y);
      r.mobius_min = first ? v : std::min(r.mobius_min, v);
      r.mobius_max = first ? v : std::max(r.mobius_max, v);
      first = false;
    }

  if (r.regular && r.bounded && r.graded && p.size() > 0 && base.size() <= 7) {
    // Compare intervals in D_S with those of the ambient orbit on the S slots.
    r.mobius_formula_checked = true;
    std::vector<int> slots;
    for (int k = 1; k <= static_cast<int>(base.m()); ++k)
      if (base.at(k)) slots.push_back(k);
    auto compress = [&](const Composition& d) {
      std::vector<int> out;
      for (int k : slots) out.push_back(d.at(k));
      return Composition(std::move(out));
    };
    std::vector<Composition> small;
    for (const Composition& d : set.elements()) small.push_back(compress(d));
    const Orbit ambient(set.lambda(), base.size());
    const std::vector<int> rk = rank(p);
    for (std::size_t x = 0; x < p.size() && r.mobius_formula_ok; ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) continue;
        std::size_t inside = 0, ambient_count = 0;
        for (std::size_t z = 0; z < p.size(); ++z) inside += p.leq(x, z) && p.leq(z, y);
        for (const Composition& c : ambient.elements())
          ambient_count += bruhat_leq_criterion(small[x], c) && bruhat_leq_criterion(c, small[y]);
        const std::int64_t expected =
            inside == ambient_count ? ((rk[y] - rk[x]) % 2 ? -1 : 1) : 0;
        if (mu(x, y) != expected) {
          r.mobius_formula_ok = false;
          r.mobius_formula_witness = Relation{x, y};
          break;
        }
      }
  }
  return r;
}

ParabolicSquareReport check_parabolic_square(const AntilinearizedPoset& base, const Partition& lambda,
                                             int k) {
  ParabolicSquareReport r;
  if (lambda.length() > base.size()) return r;
  const Composition low = lambda.padded(base.m());
  const Composition high = regularize(low);
  auto in_domain = [&](const Composition& c) {
    return is_admissible(base, c) && is_dominant_upto(base, c, k - 1);
  };
  auto note = [&](std::string& slot, const std::string& what, const Composition& c) {
    if (slot.empty()) slot = what + " at " + c.to_string() + ", k=" + std::to_string(k);
  };
  for_each_arrangement(high, [&](const Composition& a) {
    if (!in_domain(a)) return true;
    ++r.checked;
    const Composition lhs = parabolic_project(low, bubble_sort_step(base, a, k));
    const Composition rhs = bubble_sort_step(base, parabolic_project(low, a), k);
    if (!(lhs == rhs)) {
      r.projection_ok = false;
      note(r.witness, "projection square", a);
    }
    return true;
  });
  for_each_arrangement(low, [&](const Composition& b) {
    if (!in_domain(b)) return true;
    ++r.checked;
    const Composition sorted = bubble_sort_step(base, b, k);
    const Composition lifted = psi_plus(low, b);
    if (!in_domain(lifted)) {
      r.lift_ok = r.lift_lax_ok = false;
      note(r.witness, "lift leaves the domain", b);
      note(r.lax_witness, "lift leaves the domain", b);
      return true;
    }
    const Composition lhs = psi_plus(low, sorted);
    const Composition rhs = bubble_sort_step(base, lifted, k);
    if (!(lhs == rhs)) {
      r.lift_ok = false;
      note(r.witness, "lift square", b);
    }
    if (!bruhat_leq_criterion(lhs, rhs) || !(parabolic_project(low, rhs) == sorted)) {
      r.lift_lax_ok = false;
      note(r.lax_witness, "lax lift square", b);
    }
    return true;
  });
  r.ok = r.projection_ok && r.lift_ok;
  return r;
}

}  // namespace staircase
