#include "staircase/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "staircase/error.hpp"

namespace staircase {

int Monomial::degree() const {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

std::string Monomial::to_string() const {
  std::string s;
  auto put = [&](char var, std::size_t idx, int p) {
    if (!p) return;
    if (!s.empty()) s += '*';
    s += var + std::to_string(idx);
    if (p > 1) s += '^' + std::to_string(p);
  };
  for (std::size_t i = 1; i <= kMaxX; ++i) put('x', i, x(i));
  for (std::size_t j = 1; j <= kMaxY; ++j) put('y', j, y(j));
  return s.empty() ? "1" : s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
  return static_cast<std::size_t>(h);
}

MultiPoly::MultiPoly(std::size_t nx, std::size_t ny, std::optional<int> bound)
    : nx_(nx), ny_(ny), bound_(bound) {
  if (nx > kMaxX || ny > kMaxY) throw SizeLimitError("at most 12 variables per alphabet");
}

MultiPoly MultiPoly::constant(long c, std::size_t nx, std::size_t ny, std::optional<int> bound) {
  MultiPoly p(nx, ny, bound);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::x_power(const Composition& exps, std::size_t nx) {
  if (exps.size() > nx) throw DomainError("exponent vector longer than the alphabet");
  MultiPoly p(nx, 0);
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.e[i] = static_cast<std::uint8_t>(exps[i]);
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::y_power(const Composition& exps, std::size_t ny) {
  if (exps.size() > ny) throw DomainError("exponent vector longer than the alphabet");
  MultiPoly p(0, ny);
  Monomial m;
  for (std::size_t j = 0; j < exps.size(); ++j) m.e[kMaxX + j] = static_cast<std::uint8_t>(exps[j]);
  p.add_term(m, 1);
  return p;
}

mpz_class MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::vector<std::pair<Monomial, mpz_class>> MultiPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, mpz_class>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void MultiPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  if (bound_ && m.degree() > *bound_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {
void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nx() != b.nx() || a.ny() != b.ny()) throw DomainError("polynomial alphabets differ");
}

std::optional<int> min_bound(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Two alphabets combine when equal or when one side is empty.
std::size_t join(std::size_t a, std::size_t b) {
  if (a != b && a != 0 && b != 0) throw DomainError("polynomial alphabets differ");
  return std::max(a, b);
}
}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(*this, o);
  bound_ = min_bound(bound_, o.bound_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  if (bound_) *this = truncated(*bound_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(*this, o);
  bound_ = min_bound(bound_, o.bound_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  if (bound_) *this = truncated(*bound_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(join(a.nx_, b.nx_), join(a.ny_, b.ny_), min_bound(a.bound_, b.bound_));
  const int cap = out.bound_.value_or(1 << 30);
  out.terms_.reserve(a.terms_.size() * 2);
  mpz_class prod;
  for (const auto& [ma, ca] : a.terms_) {
    const int da = ma.degree();
    if (da > cap) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (da + mb.degree() > cap) continue;
      Monomial m;
      bool overflow = false;
      for (std::size_t k = 0; k < m.e.size(); ++k) {
        const int s = ma.e[k] + mb.e[k];
        overflow |= s > 255;
        m.e[k] = static_cast<std::uint8_t>(s);
      }
      if (overflow) throw SizeLimitError("exponent exceeds 255");
      prod = ca * cb;
      out.add_term(m, prod);
    }
  }
  return out;
}

MultiPoly MultiPoly::swap_x(std::size_t i) const {
  if (i < 1 || i + 1 > nx_) throw DomainError("swap index out of range");
  MultiPoly out(nx_, ny_, bound_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    std::swap(s.e[i - 1], s.e[i]);
    out.add_term(s, c);
  }
  return out;
}

MultiPoly MultiPoly::truncated(int bound) const {
  MultiPoly out(nx_, ny_, min_bound(bound_, bound));
  for (const auto& [m, c] : terms_)
    if (m.degree() <= bound) out.terms_.emplace(m, c);
  return out;
}

MultiPoly MultiPoly::widened(std::size_t nx, std::size_t ny) const {
  if (nx < nx_ || ny < ny_) throw DomainError("cannot narrow an alphabet");
  MultiPoly out(nx, ny, bound_);
  out.terms_ = terms_;
  return out;
}

MultiPoly MultiPoly::x_to_reversed_y() const {
  if (ny_ != 0) throw DomainError("expected a polynomial in x only");
  MultiPoly out(0, nx_, bound_);
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (std::size_t k = 1; k <= nx_; ++k) r.e[kMaxX + nx_ - k] = m.e[k - 1];
    out.add_term(r, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::string mono = m.to_string();
    if (mono == "1") s += a.get_str();
    else if (a == 1) s += mono;
    else s += a.get_str() + "*" + mono;
  }
  return s;
}

std::optional<Discrepancy> first_difference(const MultiPoly& a, const MultiPoly& b) {
  std::vector<Monomial> keys;
  for (const auto& [m, c] : a.terms()) keys.push_back(m);
  for (const auto& [m, c] : b.terms()) keys.push_back(m);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const Monomial& m : keys) {
    mpz_class ca = a.coefficient(m), cb = b.coefficient(m);
    if (ca != cb) return Discrepancy{m, ca, cb};
  }
  return std::nullopt;
}

MultiPoly demazure_pi(std::size_t i, const MultiPoly& f) {
  if (i < 1 || i + 1 > f.nx()) throw DomainError("Demazure operator index out of range");
  MultiPoly out(f.nx(), f.ny(), f.bound());
  // x_i^p x_{i+1}^q maps to sum_{k=0}^{p-q} x_i^{p-k} x_{i+1}^{q+k} when p >= q,
  // and to -sum_{k=1}^{q-p-1} x_i^{p+k} x_{i+1}^{q-k} when p < q.
  for (const auto& [m, c] : f.terms()) {
    const int p = m.e[i - 1], q = m.e[i];
    Monomial t = m;
    if (p >= q) {
      for (int k = 0; k <= p - q; ++k) {
        t.e[i - 1] = static_cast<std::uint8_t>(p - k);
        t.e[i] = static_cast<std::uint8_t>(q + k);
        out.add_term(t, c);
      }
    } else {
      const mpz_class neg = -c;
      for (int k = 1; k <= q - p - 1; ++k) {
        t.e[i - 1] = static_cast<std::uint8_t>(p + k);
        t.e[i] = static_cast<std::uint8_t>(q - k);
        out.add_term(t, neg);
      }
    }
  }
  return out;
}

MultiPoly demazure_pibar(std::size_t i, const MultiPoly& f) { return demazure_pi(i, f) - f; }

namespace {

struct Cache {
  std::mutex mu;
  std::map<std::pair<std::vector<int>, std::size_t>, MultiPoly> table;
};

MultiPoly demazure_rec(Cache& cache, const Composition& nu, std::size_t n, bool atoms) {
  const Composition full = nu.padded(n);
  const auto key = std::pair{full.entries(), n};
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  MultiPoly result;
  std::size_t i = 1;
  while (i < n && full.at(i) >= full.at(i + 1)) ++i;
  if (i >= n) {
    result = MultiPoly::x_power(full, n);
  } else {
    const MultiPoly prev = demazure_rec(cache, full.swapped(i, i + 1), n, atoms);
    result = atoms ? demazure_pibar(i, prev) : demazure_pi(i, prev);
  }
  std::lock_guard lock(cache.mu);
  cache.table.emplace(key, result);
  return result;
}

Cache& key_cache() {
  static Cache c;
  return c;
}
Cache& atom_cache() {
  static Cache c;
  return c;
}

}  // namespace

MultiPoly key_polynomial(const Composition& nu, std::size_t n) {
  return demazure_rec(key_cache(), nu, n, false);
}

MultiPoly atom(const Composition& nu, std::size_t n) { return demazure_rec(atom_cache(), nu, n, true); }

MultiPoly opposite_key(const Composition& nu, std::size_t m) {
  return key_polynomial(nu.padded(m).reversed(), m).x_to_reversed_y();
}

MultiPoly opposite_atom(const Composition& nu, std::size_t m) {
  return atom(nu.padded(m).reversed(), m).x_to_reversed_y();
}

MultiPoly cauchy_lhs(const StaircaseShape& shape, int N) {
  if (N < 0) throw DomainError("degree must be nonnegative");
  const std::size_t nx = static_cast<std::size_t>(shape.rows()), ny = shape.columns();
  MultiPoly acc = MultiPoly::constant(1, nx, ny, 2 * N);
  for (Cell c : shape.cells()) {
    MultiPoly series(nx, ny, 2 * N);
    for (int k = 0; k <= N; ++k) {
      Monomial m;
      m.e[c.row - 1] = static_cast<std::uint8_t>(k);
      m.e[kMaxX + c.col - 1] = static_cast<std::uint8_t>(k);
      series.add_term(m, 1);
    }
    acc = acc * series;
  }
  return acc;
}

}  // namespace staircase
