#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "staircase/bruhat.hpp"
#include "staircase/error.hpp"
#include "staircase/poly.hpp"

using namespace staircase;

namespace {

MultiPoly xs(std::initializer_list<std::initializer_list<int>> monos, std::size_t n) {
  MultiPoly out(n, 0);
  for (auto m : monos) out += MultiPoly::x_power(Composition(std::vector<int>(m)), n);
  return out;
}

MultiPoly var_x(std::size_t i, std::size_t n) {
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  return MultiPoly::x_power(Composition(e), n);
}

MultiPoly random_poly(std::mt19937& rng, std::size_t n, int max_deg) {
  MultiPoly out(n, 0);
  for (int t = 0; t < 6; ++t) {
    std::vector<int> e(n);
    int left = rng() % (max_deg + 1);
    for (auto& v : e) {
      v = rng() % (left + 1);
      left -= v;
    }
    MultiPoly term = MultiPoly::x_power(Composition(e), n);
    term *= static_cast<long>(rng() % 7) - 3;
    out += term;
  }
  return out;
}

bool nonnegative(const MultiPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (c < 0) return false;
  return true;
}

}  // namespace

TEST(Poly, ArithmeticAndPrinting) {
  const MultiPoly x1 = var_x(1, 2), x2 = var_x(2, 2);
  const MultiPoly s = (x1 + x2) * (x1 - x2);
  EXPECT_EQ(s, xs({{2, 0}}, 2) - xs({{0, 2}}, 2));
  EXPECT_EQ(s.to_string(), "-x2^2 + x1^2");
  EXPECT_EQ(MultiPoly::constant(0, 2, 0).to_string(), "0");
  EXPECT_EQ(MultiPoly::constant(3, 1, 0).to_string(), "3");
  EXPECT_TRUE((x1 - x1).is_zero());
  MultiPoly mixed = x1 * MultiPoly::y_power({0, 2}, 2);
  EXPECT_EQ(mixed.to_string(), "x1*y2^2");
  EXPECT_THROW(var_x(1, 2) + var_x(1, 3), DomainError);
  EXPECT_EQ((MultiPoly::constant(1, 0, 0) * x1).nx(), 2u);
  EXPECT_THROW(MultiPoly::constant(1, 0, 0) + x1, DomainError);
}

TEST(Poly, BoundDropsHighTerms) {
  MultiPoly f(2, 0, 2);
  f += xs({{1, 0}, {2, 1}, {0, 2}}, 2);
  EXPECT_EQ(f, xs({{1, 0}, {0, 2}}, 2));
  const MultiPoly g = xs({{1, 1}, {3, 0}}, 2).truncated(2);
  EXPECT_EQ(g, xs({{1, 1}}, 2));
  EXPECT_EQ((f * f), xs({{2, 0}}, 2).truncated(2));
}

TEST(Poly, SwapAndFirstDifference) {
  EXPECT_EQ(xs({{2, 1, 0}}, 3).swap_x(2), xs({{2, 0, 1}}, 3));
  EXPECT_EQ(xs({{1, 0}}, 2).x_to_reversed_y(), MultiPoly::y_power({0, 1}, 2));
  const auto d = first_difference(xs({{1, 0}, {0, 1}}, 2), xs({{1, 0}}, 2));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->monomial.to_string(), "x2");
  EXPECT_EQ(d->lhs, 1);
  EXPECT_EQ(d->rhs, 0);
  EXPECT_FALSE(first_difference(var_x(1, 2), var_x(1, 2)));
}

TEST(Poly, DemazureExamples) {
  EXPECT_EQ(demazure_pi(1, xs({{1, 0}}, 2)), xs({{1, 0}, {0, 1}}, 2));
  EXPECT_EQ(demazure_pi(1, xs({{0, 1}}, 2)), MultiPoly::constant(0, 2, 0));
  EXPECT_EQ(demazure_pi(1, xs({{2, 0}}, 2)), xs({{2, 0}, {1, 1}, {0, 2}}, 2));
  EXPECT_EQ(demazure_pi(1, MultiPoly::constant(1, 2, 0)), MultiPoly::constant(1, 2, 0));
  EXPECT_EQ(demazure_pibar(1, xs({{1, 0}}, 2)), xs({{0, 1}}, 2));
}

// (x_i - x_{i+1}) pi_i f = x_i f - x_{i+1} s_i f, and the operators are
// idempotent / satisfy pibar^2 = -pibar and the braid relation.
TEST(Poly, DemazureRelations) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly f = random_poly(rng, 3, 4);
    for (std::size_t i = 1; i <= 2; ++i) {
      const MultiPoly xi = var_x(i, 3), xj = var_x(i + 1, 3);
      const MultiPoly p = demazure_pi(i, f);
      ASSERT_EQ((xi - xj) * p, xi * f - xj * f.swap_x(i)) << f.to_string();
      ASSERT_EQ(demazure_pi(i, p), p);
      ASSERT_EQ(p.swap_x(i), p);
      const MultiPoly q = demazure_pibar(i, f);
      ASSERT_EQ(demazure_pibar(i, q), -q);
    }
    ASSERT_EQ(demazure_pi(1, demazure_pi(2, demazure_pi(1, f))),
              demazure_pi(2, demazure_pi(1, demazure_pi(2, f))));
  }
}

TEST(Poly, KeyAndAtomExamples) {
  EXPECT_EQ(key_polynomial({1, 0}, 2), xs({{1, 0}}, 2));
  EXPECT_EQ(key_polynomial({0, 1}, 2), xs({{1, 0}, {0, 1}}, 2));
  EXPECT_EQ(atom({0, 1}, 2), xs({{0, 1}}, 2));
  EXPECT_EQ(key_polynomial({1, 0, 1}, 3), xs({{1, 1, 0}, {1, 0, 1}}, 3));
  EXPECT_EQ(atom({1, 0, 1}, 3), xs({{1, 0, 1}}, 3));
  EXPECT_EQ(key_polynomial({0, 2, 1}, 3), xs({{2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {0, 2, 1}}, 3));
  EXPECT_EQ(key_polynomial({0, 0}, 2), MultiPoly::constant(1, 2, 0));
}

TEST(Poly, AntidominantKeyIsSchur) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int w = 0; w <= 5; ++w)
      for (const Partition& lambda : partitions_of(w, n))
        ASSERT_EQ(key_polynomial(lambda.padded(n).sorted_increasing(), n), oracle::schur(lambda, n))
            << lambda.to_string() << " n=" << n;
}

// Atoms over an orbit partition the Schur polynomial, and a key is the sum of
// the atoms below it.
TEST(Poly, DemazureFiltration) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (int w = 1; w <= 5; ++w)
      for (const Partition& lambda : partitions_of(w, m)) {
        const Orbit orbit(lambda, m);
        MultiPoly total(m, 0);
        for (const Composition& nu : orbit.elements()) {
          const MultiPoly a = atom(nu, m);
          ASSERT_TRUE(nonnegative(a));
          ASSERT_EQ(a.coefficient(MultiPoly::x_power(nu, m).sorted_terms().front().first), 1);
          total += a;
          MultiPoly below(m, 0);
          for (const Composition& mu : orbit.elements())
            if (bruhat_leq(orbit, mu, nu)) below += atom(mu, m);
          const MultiPoly k = key_polynomial(nu, m);
          ASSERT_EQ(k, below) << nu.to_string();
          ASSERT_TRUE(nonnegative(k));
        }
        ASSERT_EQ(total, oracle::schur(lambda, m)) << lambda.to_string();
      }
}

TEST(Poly, OppositeKeys) {
  EXPECT_EQ(opposite_key({1, 0}, 2), MultiPoly::y_power({1, 0}, 2) + MultiPoly::y_power({0, 1}, 2));
  EXPECT_EQ(opposite_key({0, 1}, 2), MultiPoly::y_power({0, 1}, 2));
  EXPECT_EQ(opposite_atom({1, 0}, 2), MultiPoly::y_power({1, 0}, 2));
  EXPECT_EQ(opposite_key({2, 1, 0}, 3), oracle::schur_y(Partition{2, 1}, 3));
  EXPECT_EQ(opposite_key({0, 1, 0}, 3), MultiPoly::y_power({0, 1, 0}, 3) + MultiPoly::y_power({0, 0, 1}, 3));
}

TEST(Poly, CauchyLhsExamples) {
  MultiPoly one_cell(1, 1, 4);
  for (int k = 0; k <= 2; ++k) one_cell += MultiPoly::x_power({k}, 1) * MultiPoly::y_power({k}, 1);
  EXPECT_EQ(cauchy_lhs(parse_shape("1"), 2), one_cell);
  const MultiPoly f = cauchy_lhs(parse_shape("1,2"), 3);
  EXPECT_EQ(f.nx(), 2u);
  EXPECT_EQ(f.ny(), 2u);
}

TEST(Poly, CauchyLhsCountsArrays) {
  for (const char* s : {"1", "1,2", "2,2", "1,2,3", "2,3,3,4", "1,1,3", "3,3"})
    for (int N = 0; N <= 4; ++N) {
      const StaircaseShape shape = parse_shape(s);
      ASSERT_EQ(cauchy_lhs(shape, N), oracle::array_count(shape, N)) << s << " N=" << N;
    }
}
