#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/shapes.hpp"

namespace staircase {

inline constexpr std::size_t kMaxX = 12;
inline constexpr std::size_t kMaxY = 12;

// Exponents of x_1..x_12 then y_1..y_12.
struct Monomial {
  std::array<std::uint8_t, kMaxX + kMaxY> e{};

  int x(std::size_t i) const { return e[i - 1]; }  // 1-based
  int y(std::size_t j) const { return e[kMaxX + j - 1]; }
  int degree() const;
  std::string to_string() const;  // "x1^2*y2", "1" for the constant
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Sparse polynomial in x_1..x_nx, y_1..y_ny with integer coefficients and an
// optional total-degree bound; terms above the bound are dropped eagerly.
class MultiPoly {
 public:
  using Terms = std::unordered_map<Monomial, mpz_class, MonomialHash>;

  MultiPoly(std::size_t nx = 0, std::size_t ny = 0, std::optional<int> bound = std::nullopt);
  static MultiPoly constant(long c, std::size_t nx, std::size_t ny,
                            std::optional<int> bound = std::nullopt);
  static MultiPoly x_power(const Composition& exps, std::size_t nx);  // x^exps
  static MultiPoly y_power(const Composition& exps, std::size_t ny);  // y^exps

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::optional<int> bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Monomial& m) const;
  // Terms in increasing lexicographic order of exponents.
  std::vector<std::pair<Monomial, mpz_class>> sorted_terms() const;

  void add_term(const Monomial& m, const mpz_class& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const mpz_class& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= -1; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.terms_ == b.terms_;
  }

  // Exchange x_i and x_{i+1}.
  MultiPoly swap_x(std::size_t i) const;
  MultiPoly truncated(int bound) const;
  // Same terms over a wider alphabet.
  MultiPoly widened(std::size_t nx, std::size_t ny) const;
  // x_k -> y_{nx+1-k}; the result lives in the y alphabet.
  MultiPoly x_to_reversed_y() const;
  std::string to_string() const;

 private:
  std::size_t nx_, ny_;
  std::optional<int> bound_;
  Terms terms_;
};

// First monomial (lexicographic) where the two differ.
struct Discrepancy {
  Monomial monomial;
  mpz_class lhs, rhs;
};
std::optional<Discrepancy> first_difference(const MultiPoly& a, const MultiPoly& b);

// pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})
MultiPoly demazure_pi(std::size_t i, const MultiPoly& f);
MultiPoly demazure_pibar(std::size_t i, const MultiPoly& f);

// Memoized, thread-safe. Results over x_1..x_n.
MultiPoly key_polynomial(const Composition& nu, std::size_t n);
MultiPoly atom(const Composition& nu, std::size_t n);
// kappa^nu(y_1..y_m) = kappa_{rev nu}(y_m..y_1); same for atoms.
MultiPoly opposite_key(const Composition& nu, std::size_t m);
MultiPoly opposite_atom(const Composition& nu, std::size_t m);

// Product over cells (i,j) of sum_k (x_i y_j)^k, keeping |A| <= N, i.e.
// total degree <= 2N. Alphabets x_1..x_{n_m}, y_1..y_m.
MultiPoly cauchy_lhs(const StaircaseShape& shape, int N);

}  // namespace staircase
