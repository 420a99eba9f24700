#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/poly.hpp"
#include "staircase/shapes.hpp"

namespace staircase {

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct VerificationReport {
  std::string identity;   // "vdk", "cauchy-bs", "cauchy-moebius"
  std::string shape;
  std::string parameter;  // "lambda=(2,1)" or "N=6"
  Status status = Status::Pass;
  // Set whenever status is Fail.
  std::optional<Discrepancy> discrepancy;
  std::string context;  // which array / side failed
  std::size_t checked = 0;  // arrays or monomials compared
  double seconds = 0;
  std::vector<std::string> notes;

  bool passed() const { return status == Status::Pass; }
  std::string summary() const;  // one line
};

// For each A in DL(lambda):
//   sum over bbs fiber of vrt(A) of a^d(y) = sum_{B >= A} mu(A,B) kappa^{vrt(B)}(y)
//   sum over opposite fiber of hor(A) of a_b(x) = sum_{C <= A} mu(C,A) kappa_{hor(C)}(x)
VerificationReport verify_vdk(const StaircaseShape& shape, const Partition& lambda);

// Product of 1/(1 - x_i y_j) against
// sum_A kappa_{hor(A)}(x) * sum_{bbs(d) = vrt(A)} a^d(y), through |A| <= N.
VerificationReport verify_cauchy_bs(const StaircaseShape& shape, int N);

// Same left side against sum_{A <= B} mu(A,B) kappa_{hor(A)}(x) kappa^{vrt(B)}(y).
// The transposed pairing mu(B,A) kappa_{hor(A)} kappa^{vrt(B)}, B <= A, is
// evaluated too and its first disagreement recorded in the notes.
VerificationReport verify_cauchy_moebius(const StaircaseShape& shape, int N);

// Right-hand sides alone, for cross-checks.
MultiPoly cauchy_rhs_bs(const StaircaseShape& shape, int N);
MultiPoly cauchy_rhs_moebius(const StaircaseShape& shape, int N);
MultiPoly cauchy_rhs_moebius_transposed(const StaircaseShape& shape, int N);

// 6 for shapes with at most 5 columns, 4 beyond.
int default_degree(const StaircaseShape& shape);

struct SweepInstance {
  std::string shape;
  std::string lambda;
  std::size_t size = 0;
  bool regular = false;
  bool graded = false;
  std::int64_t mobius_min = 0;
  std::int64_t mobius_max = 0;
  bool el_printed_order = false;
  bool el_shellable = false;
  bool el_search_complete = true;
  bool mobius_formula_checked = false;
  bool mobius_formula_ok = true;
  bool order_agreement = true;

  bool mobius_violation() const { return mobius_min < -1 || mobius_max > 1; }
};

struct SweepSummary {
  std::size_t max_corners = 0;
  int max_weight = 0;
  std::size_t shapes = 0;
  std::vector<SweepInstance> instances;  // shape order, then lambda order
  std::vector<std::size_t> mobius_violations;  // indices into instances
  std::vector<std::size_t> el_inconclusive;
  std::vector<std::size_t> formula_failures;
  std::vector<std::size_t> agreement_failures;
  double seconds = 0;

  bool conjecture_violated() const { return !mobius_violations.empty(); }
  // Proven statements that failed; these are real defects.
  bool theorem_failed() const { return !formula_failures.empty() || !agreement_failures.empty(); }
};

// Every canonical shape with at most max_corners corners and every lambda
// with 1 <= |lambda| <= max_weight fitting the corners. jobs = 0 picks the
// hardware concurrency.
SweepSummary conjecture_sweep(std::size_t max_corners, int max_weight, unsigned jobs = 0);

}  // namespace staircase
