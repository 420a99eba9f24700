#include <gtest/gtest.h>

#include "oracles.hpp"
#include "staircase/error.hpp"
#include "staircase/identities.hpp"

using namespace staircase;

TEST(Identities, CauchySmallShapes) {
  for (const char* s : {"1", "1,2", "2,2", "1,1,2", "1,2,3", "2,3,3,4"})
    for (int N : {0, 1, 3}) {
      const StaircaseShape shape = parse_shape(s);
      const auto bs = verify_cauchy_bs(shape, N);
      EXPECT_TRUE(bs.passed()) << bs.summary();
      const auto mo = verify_cauchy_moebius(shape, N);
      EXPECT_TRUE(mo.passed()) << mo.summary();
      EXPECT_EQ(cauchy_rhs_bs(shape, N), cauchy_rhs_moebius(shape, N)) << s;
    }
}

// On a rectangle the identity is the classical Cauchy identity.
TEST(Identities, RectangleIsClassicalCauchy) {
  for (const char* s : {"2,2,2", "3,3", "1,1,1"}) {
    const StaircaseShape shape = parse_shape(s);
    const std::size_t n = shape.rows(), m = shape.columns();
    const int N = 4;
    MultiPoly want(n, m, 2 * N);
    for (int w = 0; w <= N; ++w)
      for (const Partition& lambda : partitions_of(w, std::min(n, m)))
        want += (oracle::schur(lambda, n) * oracle::schur_y(lambda, m)).truncated(2 * N);
    EXPECT_EQ(cauchy_lhs(shape, N), want) << s;
    EXPECT_EQ(cauchy_rhs_moebius(shape, N), want) << s;
  }
}

TEST(Identities, TransposedPairingDiffersOffRectangles) {
  const StaircaseShape shape = parse_shape("1,2");
  EXPECT_NE(cauchy_rhs_moebius_transposed(shape, 2), cauchy_lhs(shape, 2));
  const auto r = verify_cauchy_moebius(shape, 2);
  ASSERT_TRUE(r.passed());
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("x2*y2"), std::string::npos) << r.notes.front();
}

TEST(Identities, SummaryFormat) {
  const auto r = verify_cauchy_moebius(parse_shape("1,2"), 2);
  EXPECT_EQ(r.summary(), "PASS cauchy-moebius shape=1,2 N=2");
  EXPECT_EQ(to_string(Status::Fail), "FAIL");
  EXPECT_EQ(default_degree(parse_shape("2,3,3,3,5,5")), 4);
  EXPECT_EQ(default_degree(parse_shape("2,3,3,4")), 6);
}

TEST(Identities, VanDerKallenCharacters) {
  for (const char* s : {"1,2", "2,2", "1,2,3", "1,3,3,4"})
    for (int w = 1; w <= 4; ++w) {
      const StaircaseShape shape = parse_shape(s);
      for (const Partition& lambda : partitions_of(w, staircase_corners(shape).size())) {
        const auto r = verify_vdk(shape, lambda);
        EXPECT_TRUE(r.passed()) << r.summary();
      }
    }
  EXPECT_THROW(verify_vdk(parse_shape("1,2"), Partition{1, 1, 1}), DomainError);
}

TEST(Identities, SmallSweep) {
  const SweepSummary s = conjecture_sweep(3, 4, 2);
  EXPECT_EQ(s.shapes, 8u);
  EXPECT_FALSE(s.theorem_failed());
  EXPECT_FALSE(s.conjecture_violated());
  // deterministic regardless of thread count
  const SweepSummary t = conjecture_sweep(3, 4, 1);
  ASSERT_EQ(s.instances.size(), t.instances.size());
  for (std::size_t i = 0; i < s.instances.size(); ++i) {
    EXPECT_EQ(s.instances[i].shape, t.instances[i].shape);
    EXPECT_EQ(s.instances[i].lambda, t.instances[i].lambda);
    EXPECT_EQ(s.instances[i].mobius_min, t.instances[i].mobius_min);
  }
}
