#include "staircase/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "staircase/dl.hpp"
#include "staircase/dominant.hpp"
#include "staircase/error.hpp"

namespace staircase {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string VerificationReport::summary() const {
  std::string s = to_string(status) + " " + identity + " shape=" + shape + " " + parameter;
  if (discrepancy) {
    s += " at " + discrepancy->monomial.to_string() + ": lhs=" + discrepancy->lhs.get_str() +
         " rhs=" + discrepancy->rhs.get_str();
    if (!context.empty()) s += " (" + context + ")";
  }
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t rows_of(const StaircaseShape& shape) { return static_cast<std::size_t>(shape.rows()); }

void fail(VerificationReport& r, Discrepancy d, std::string context) {
  r.status = Status::Fail;
  r.discrepancy = std::move(d);
  r.context = std::move(context);
}

// Partitions that fit the corners, |lambda| = 1..N.
std::vector<Partition> weights_upto(const CornerPoset& corners, int N) {
  std::vector<Partition> out;
  for (int d = 1; d <= N; ++d)
    for (Partition& p : partitions_of(d, corners.size())) out.push_back(std::move(p));
  return out;
}

// Sum of a^d(y) over each bbs fiber, keyed by dominant image.
std::map<Composition, MultiPoly> vrt_fiber_sums(const DLPoset& dl) {
  const std::size_t m = dl.shape().columns();
  std::map<Composition, MultiPoly> out;
  for (const auto& [image, fiber] : bbs_fibers(dl.vertical().base(), dl.lambda())) {
    MultiPoly sum(0, m);
    for (const Composition& d : fiber) sum += opposite_atom(d, m);
    out.emplace(image, std::move(sum));
  }
  return out;
}

std::map<Composition, MultiPoly> hor_fiber_sums(const DLPoset& dl) {
  const std::size_t n = rows_of(dl.shape());
  std::map<Composition, MultiPoly> out;
  for (const auto& [image, fiber] : bbs_op_fibers(dl.corners().horizontal(), dl.lambda())) {
    MultiPoly sum(n, 0);
    for (const Composition& b : fiber) sum += atom(b, n);
    out.emplace(image, std::move(sum));
  }
  return out;
}

const MultiPoly& fiber_sum(const std::map<Composition, MultiPoly>& sums, const Composition& key,
                           const MultiPoly& zero) {
  auto it = sums.find(key);
  return it == sums.end() ? zero : it->second;
}

MultiPoly one(const StaircaseShape& shape, int N) {
  return MultiPoly::constant(1, rows_of(shape), shape.columns(), 2 * N);
}

enum class Pairing { Derived, Transposed };

MultiPoly moebius_rhs(const StaircaseShape& shape, int N, Pairing pairing) {
  if (N < 0) throw DomainError("degree must be nonnegative");
  const std::size_t n = rows_of(shape), m = shape.columns();
  const CornerPoset corners = staircase_corners(shape);
  MultiPoly total = one(shape, N);
  for (const Partition& lambda : weights_upto(corners, N)) {
    const DLPoset dl(shape, lambda);
    const FinitePoset& p = dl.poset();
    MobiusTable mu(p);
    std::vector<MultiPoly> top;
    for (const DLArray& b : dl.arrays()) top.push_back(opposite_key(b.vrt(), m).widened(n, m));
    for (std::size_t a = 0; a < dl.size(); ++a) {
      MultiPoly inner(n, m);
      for (std::size_t b = 0; b < dl.size(); ++b) {
        std::int64_t coeff = 0;
        if (pairing == Pairing::Derived && p.leq(a, b)) coeff = mu(a, b);
        if (pairing == Pairing::Transposed && p.leq(b, a)) coeff = mu(b, a);
        if (!coeff) continue;
        MultiPoly term = top[b];
        term *= mpz_class(static_cast<long>(coeff));
        inner += term;
      }
      total += key_polynomial(dl.arrays()[a].hor(), n).widened(n, m) * inner;
    }
  }
  return total.truncated(2 * N);
}

}  // namespace

int default_degree(const StaircaseShape& shape) { return shape.columns() <= 5 ? 6 : 4; }

VerificationReport verify_vdk(const StaircaseShape& shape, const Partition& lambda) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "vdk";
  r.shape = shape.to_string();
  r.parameter = "lambda=" + lambda.to_string();
  const CornerPoset corners = staircase_corners(shape);
  if (lambda.length() > corners.size())
    throw DomainError("lambda has more parts than the shape has corners");
  const std::size_t n = rows_of(shape), m = shape.columns();
  const DLPoset dl(shape, lambda);
  const FinitePoset& p = dl.poset();
  MobiusTable mu(p);
  const auto vsums = vrt_fiber_sums(dl);
  const auto hsums = hor_fiber_sums(dl);
  const MultiPoly zero_y(0, m), zero_x(n, 0);

  for (std::size_t a = 0; a < dl.size() && r.passed(); ++a) {
    const DLArray& A = dl.arrays()[a];
    MultiPoly right_y(0, m), right_x(n, 0);
    for (std::size_t b = 0; b < dl.size(); ++b) {
      if (p.leq(a, b)) {
        MultiPoly t = opposite_key(dl.arrays()[b].vrt(), m);
        t *= mpz_class(static_cast<long>(mu(a, b)));
        right_y += t;
      }
      if (p.leq(b, a)) {
        MultiPoly t = key_polynomial(dl.arrays()[b].hor(), n);
        t *= mpz_class(static_cast<long>(mu(b, a)));
        right_x += t;
      }
    }
    if (auto d = first_difference(fiber_sum(vsums, A.vrt(), zero_y), right_y))
      fail(r, *d, "vertical side, array " + A.to_string());
    else if (auto d2 = first_difference(fiber_sum(hsums, A.hor(), zero_x), right_x))
      fail(r, *d2, "horizontal side, array " + A.to_string());
    ++r.checked;
  }
  // Every fiber image must be some vrt(A) / hor(A).
  for (const auto& [image, sum] : vsums)
    if (!dl.index_of_vrt(image)) r.notes.push_back("fiber image outside DL: " + image.to_string());
  if (!r.notes.empty() && r.passed()) r.status = Status::Fail;
  r.seconds = since(t0);
  return r;
}

MultiPoly cauchy_rhs_bs(const StaircaseShape& shape, int N) {
  if (N < 0) throw DomainError("degree must be nonnegative");
  const std::size_t n = rows_of(shape), m = shape.columns();
  const CornerPoset corners = staircase_corners(shape);
  MultiPoly total = one(shape, N);
  const MultiPoly zero_y(0, m);
  for (const Partition& lambda : weights_upto(corners, N)) {
    const DLPoset dl(shape, lambda);
    const auto sums = vrt_fiber_sums(dl);
    for (const DLArray& A : dl.arrays())
      total += key_polynomial(A.hor(), n).widened(n, m) *
               fiber_sum(sums, A.vrt(), zero_y).widened(n, m);
  }
  return total.truncated(2 * N);
}

MultiPoly cauchy_rhs_moebius(const StaircaseShape& shape, int N) {
  return moebius_rhs(shape, N, Pairing::Derived);
}

MultiPoly cauchy_rhs_moebius_transposed(const StaircaseShape& shape, int N) {
  return moebius_rhs(shape, N, Pairing::Transposed);
}

VerificationReport verify_cauchy_bs(const StaircaseShape& shape, int N) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "cauchy-bs";
  r.shape = shape.to_string();
  r.parameter = "N=" + std::to_string(N);
  const MultiPoly lhs = cauchy_lhs(shape, N);
  const MultiPoly rhs = cauchy_rhs_bs(shape, N);
  r.checked = std::max(lhs.size(), rhs.size());
  if (auto d = first_difference(lhs, rhs)) fail(r, *d, "");
  r.seconds = since(t0);
  return r;
}

VerificationReport verify_cauchy_moebius(const StaircaseShape& shape, int N) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = "cauchy-moebius";
  r.shape = shape.to_string();
  r.parameter = "N=" + std::to_string(N);
  const MultiPoly lhs = cauchy_lhs(shape, N);
  const MultiPoly rhs = cauchy_rhs_moebius(shape, N);
  r.checked = std::max(lhs.size(), rhs.size());
  if (auto d = first_difference(lhs, rhs)) fail(r, *d, "pairing mu(A,B), A <= B");
  const MultiPoly alt = cauchy_rhs_moebius_transposed(shape, N);
  if (auto d = first_difference(lhs, alt))
    r.notes.push_back("transposed pairing mu(B,A), B <= A, differs at " + d->monomial.to_string() +
                      ": lhs=" + d->lhs.get_str() + " rhs=" + d->rhs.get_str());
  else
    r.notes.push_back("transposed pairing mu(B,A), B <= A, also agrees");
  r.seconds = since(t0);
  return r;
}

SweepSummary conjecture_sweep(std::size_t max_corners, int max_weight, unsigned jobs) {
  if (max_corners < 1 || max_weight < 1) throw DomainError("sweep caps must be positive");
  const auto t0 = Clock::now();
  SweepSummary s;
  s.max_corners = max_corners;
  s.max_weight = max_weight;
  const std::vector<StaircaseShape> shapes = canonical_shapes(max_corners);
  s.shapes = shapes.size();

  struct Item {
    const StaircaseShape* shape;
    Partition lambda;
  };
  std::vector<Item> items;
  for (const StaircaseShape& shape : shapes) {
    const CornerPoset corners = staircase_corners(shape);
    for (Partition& lambda : weights_upto(corners, max_weight)) items.push_back({&shape, std::move(lambda)});
  }
  s.instances.resize(items.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        const DLPoset dl(*items[i].shape, items[i].lambda);
        const PropertyReport pr = property_report(dl.vertical());
        SweepInstance& out = s.instances[i];
        out.shape = items[i].shape->to_string();
        out.lambda = items[i].lambda.to_string();
        out.size = pr.size;
        out.regular = pr.regular;
        out.graded = pr.graded;
        out.mobius_min = pr.mobius_min;
        out.mobius_max = pr.mobius_max;
        out.el_printed_order = pr.el_printed_order.ok;
        out.el_shellable = pr.el_shellable;
        out.el_search_complete = pr.el_search_complete;
        out.mobius_formula_checked = pr.mobius_formula_checked;
        out.mobius_formula_ok = pr.mobius_formula_ok;
        out.order_agreement = dl_order_agreement(dl).ok;
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(items.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < s.instances.size(); ++i) {
    const SweepInstance& in = s.instances[i];
    if (in.mobius_violation()) s.mobius_violations.push_back(i);
    if (!in.el_shellable) s.el_inconclusive.push_back(i);
    if (in.mobius_formula_checked && !in.mobius_formula_ok) s.formula_failures.push_back(i);
    if (!in.order_agreement) s.agreement_failures.push_back(i);
  }
  s.seconds = since(t0);
  return s;
}

}  // namespace staircase
