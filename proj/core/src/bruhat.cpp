#include "staircase/bruhat.hpp"

#include <algorithm>
#include <map>

#include "staircase/error.hpp"

namespace staircase {

std::string Transposition::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::strong_ordering el_label_order(Transposition a, Transposition b) {
  if (a.j != b.j) return a.j <=> b.j;
  return b.i <=> a.i;
}

std::int64_t el_label_key(Transposition t) {
  return static_cast<std::int64_t>(t.j) * 4096 + (4095 - t.i);
}

int length(const Composition& nu) {
  int l = 0;
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (std::size_t j = i + 1; j < nu.size(); ++j) l += nu[i] < nu[j];
  return l;
}

bool bruhat_leq_criterion(const Composition& nu, const Composition& mu) {
  if (nu.size() != mu.size()) throw DomainError("compositions of different lengths");
  if (nu.sorted_decreasing() != mu.sorted_decreasing())
    throw DomainError("compositions lie in different orbits");
  int top = 0;
  for (int e : nu) top = std::max(top, e);
  for (int t = 1; t <= top; ++t) {
    int cn = 0, cm = 0;
    for (std::size_t p = 0; p < nu.size(); ++p) {
      cn += nu[p] >= t;
      cm += mu[p] >= t;
      if (cn < cm) return false;
    }
  }
  return true;
}

bool is_bruhat_cover_move(const Composition& nu, Transposition t) {
  const int a = nu.at(t.i), b = nu.at(t.j);
  if (!(t.i < t.j) || a <= b) return false;
  for (int k = t.i + 1; k < t.j; ++k) {
    const int c = nu.at(k);
    if (b <= c && c <= a) return false;
  }
  return true;
}

Orbit::Orbit(const Partition& lambda, std::size_t m) : m_(m) {
  if (lambda.length() > m)
    throw DomainError("partition " + lambda.to_string() + " does not fit in " + std::to_string(m) + " slots");
  build(lambda.padded(m));
}

Orbit::Orbit(const Composition& any_arrangement) : m_(any_arrangement.size()) {
  build(any_arrangement.sorted_decreasing());
}

void Orbit::build(Composition start) {
  if (m_ > kMaxLength) throw SizeLimitError("orbits are limited to m <= 8");
  // multinomial size check before materializing
  std::map<int, int> mult;
  for (int e : start) ++mult[e];
  double count = 1;
  int placed = 0;
  for (auto [v, k] : mult)
    for (int r = 1; r <= k; ++r) count = count * (++placed) / r;
  if (count > static_cast<double>(kMaxElements) + 0.5)
    throw SizeLimitError("orbit of " + start.to_string() + " is too large");

  std::vector<int> cur = start.entries();
  do {
    elements_.emplace_back(cur);
  } while (std::prev_permutation(cur.begin(), cur.end()));
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);

  std::vector<Relation> rel;
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    const Composition& nu = elements_[x];
    for (int i = 1; i <= static_cast<int>(m_); ++i)
      for (int j = i + 1; j <= static_cast<int>(m_); ++j)
        if (is_bruhat_cover_move(nu, {i, j})) rel.push_back({x, index_.at(nu.swapped(i, j))});
  }
  poset_ = transitive_reduce(elements_.size(), rel);
  for (auto [x, y] : poset_.covers()) {
    Transposition t;
    for (std::size_t k = 0; k < m_; ++k)
      if (elements_[x][k] != elements_[y][k]) (t.i ? t.j : t.i) = static_cast<int>(k + 1);
    labels_.push_back(t);
  }
}

std::size_t Orbit::index_of(const Composition& nu) const {
  auto it = index_.find(nu);
  if (it == index_.end()) throw DomainError(nu.to_string() + " is not in the orbit");
  return it->second;
}

EdgeLabelling Orbit::el_labelling() const {
  EdgeLabelling e;
  for (Transposition t : labels_) e.labels.push_back(el_label_key(t));
  return e;
}

bool bruhat_leq(const Orbit& orbit, const Composition& nu, const Composition& mu) {
  return orbit.poset().leq(orbit.index_of(nu), orbit.index_of(mu));
}

Composition regularize(const Composition& lambda_plus) {
  if (!lambda_plus.is_weakly_decreasing()) throw DomainError("expected a weakly decreasing composition");
  std::vector<int> out = lambda_plus.entries();
  int l = 0;
  for (int e : out) l += e > 0;
  for (int r = 0; r < l; ++r) out[r] += l - 1 - r;
  return Composition(std::move(out));
}

namespace {

void check_same_orbit(const Composition& a, const Composition& b) {
  if (a.sorted_decreasing() != b.sorted_decreasing())
    throw DomainError(b.to_string() + " is not a rearrangement of " + a.to_string());
}

Composition lift(const Composition& lambda_plus, const Composition& b, bool minimal) {
  check_same_orbit(lambda_plus, b);
  const Composition up = regularize(lambda_plus);
  // lifted values available per value of lambda, largest first
  std::map<int, std::vector<int>> pool;
  for (std::size_t r = 0; r < up.size(); ++r)
    if (lambda_plus[r] > 0) pool[lambda_plus[r]].push_back(up[r]);
  std::map<int, std::size_t> used;
  std::vector<int> out(b.size(), 0);
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (b[p] == 0) continue;
    const auto& vals = pool[b[p]];
    const std::size_t k = used[b[p]]++;
    out[p] = minimal ? vals[k] : vals[vals.size() - 1 - k];
  }
  return Composition(std::move(out));
}

}  // namespace

Composition parabolic_project(const Composition& lambda_plus, const Composition& nu) {
  const Composition up = regularize(lambda_plus);
  check_same_orbit(up, nu);
  std::map<int, int> down;
  for (std::size_t r = 0; r < up.size(); ++r) down[up[r]] = lambda_plus[r];
  std::vector<int> out;
  for (int e : nu) out.push_back(down.at(e));
  return Composition(std::move(out));
}

Composition psi_plus(const Composition& lambda_plus, const Composition& b) {
  return lift(lambda_plus, b, true);
}

Composition psi_minus(const Composition& lambda_plus, const Composition& b) {
  return lift(lambda_plus, b, false);
}

}  // namespace staircase
