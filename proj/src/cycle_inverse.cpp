#include "fiedler/cycle_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fiedler/classify.hpp"
#include "fiedler/densela.hpp"
#include "fiedler/error.hpp"

namespace fiedler {

std::vector<double> rotate(std::span<const double> x, std::size_t s) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[(i + s) % n];
  return out;
}

namespace {

// tail[j] = sum_{i in [j+1, n-1]} y_i, summed from the back.
std::vector<double> tail_sums(std::span<const double> y) {
  const std::size_t n = y.size();
  std::vector<double> tail(n, 0.0);
  for (std::size_t j = n - 1; j-- > 0;) tail[j] = tail[j + 1] + y[j + 1];
  return tail;
}

CycleVerdict require_realizable(const Cycle& cycle, std::span<const double> x) {
  CycleVerdict v = classify_cycle_vector(cycle, x);
  if (!v.periodic || !v.balanced)
    throw Error(ErrorKind::NotRealizable,
                std::string(v.periodic ? "vector is not balanced: " : "vector is not periodic: ") + v.reason,
                v.witness);
  return v;
}

HInterval interval_from_tail(std::span<const double> y, const std::vector<double>& tail, std::size_t q) {
  // Edges j < q descend: need h < -tail[j] there, tightest at j = 0 and j = q - 1.
  // Edges j >= q ascend: need h > -tail[j], tightest at j = q and j = n - 1.
  return {std::max(0.0, -tail[q]), std::min(y[0], -tail[q - 1])};
}

int sign3(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

HInterval feasible_h_interval(std::span<const double> y) {
  const Cycle cycle(y.size());
  const CycleVerdict v = require_realizable(cycle, y);
  if (v.two_peaks() || v.two_valleys())
    throw Error(ErrorKind::WrongCase, "the shift interval only exists with a unique peak and a unique valley",
                {v.p, v.q});
  if (v.p != 0)
    throw Error(ErrorKind::InvalidParameter, "vector must be rotated so that its peak is vertex 0", {v.p});
  return interval_from_tail(y, tail_sums(y), v.q);
}

CycleInverseResult cycle_inverse(const Cycle& cycle, std::span<const double> x, double lam, double zero_fill,
                                 std::optional<double> h) {
  if (!(lam > 0.0) || !std::isfinite(lam)) throw Error(ErrorKind::InvalidParameter, "lambda must be positive");
  if (!(zero_fill > 0.0) || !std::isfinite(zero_fill))
    throw Error(ErrorKind::InvalidParameter, "zero fill must be positive");
  if (h && !std::isfinite(*h)) throw Error(ErrorKind::InvalidParameter, "h must be finite");
  const std::size_t n = cycle.n();
  const CycleVerdict verdict = require_realizable(cycle, x);

  const std::size_t s = verdict.p_prime;
  const std::vector<double> y = rotate(x, s);
  const std::size_t q = (verdict.q + n - s) % n;
  const std::vector<double> tail = tail_sums(y);

  CycleInverseResult out{WeightAssignment(std::vector<double>{}), lam, 0.0, s, std::nullopt, 0, 0.0};
  if (verdict.two_peaks()) {
    out.h = 0.0;
  } else if (verdict.two_valleys()) {
    out.h = -tail[q];
  } else {
    out.interval = interval_from_tail(y, tail, q);
    if (!(out.interval->lo < out.interval->hi))
      throw Error(ErrorKind::DegenerateInput, "feasible interval for h is numerically empty");
    out.h = out.interval->midpoint();
  }
  if (h) out.h = *h;

  std::vector<double> z(n);
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    z[j] = lam * (out.h + tail[j]);
    d[j] = y[(j + 1) % n] - y[j];
  }
  // On plateau edges the suffix sum is zero exactly only in exact arithmetic;
  // accept the residue the classifier already tolerated.
  const double snap = kSumTol * lam * norm_1(y);
  for (std::size_t j = 0; j < n; ++j)
    if (d[j] == 0.0 && std::abs(z[j]) <= snap) z[j] = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    if (sign3(z[j]) != sign3(d[j])) {
      const std::size_t e = (j + s) % n;
      throw Error(h ? ErrorKind::InvalidParameter : ErrorKind::DegenerateInput,
                  "shifted suffix sum and edge difference disagree in sign on edge " + std::to_string(e),
                  {e, (e + 1) % n});
    }
  const std::vector<double> w_rot = entrywise_div(z, d, zero_fill);
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[(j + s) % n] = w_rot[j];
  out.weights = WeightAssignment(std::move(w));

  const WeightedLaplacian lap = laplacian(cycle, out.weights);
  const auto ax = lap.matrix().apply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(ax[i] - lam * x[i]));
  out.residual = r / norm_inf(x);

  const auto dec = eigh(lap.matrix());
  const auto cluster = eigenvalue_cluster(dec, lam);
  if (cluster.empty() || (cluster.front() != 1 && cluster.front() != 2))
    throw Error(ErrorKind::NumericalAmbiguity,
                "lambda is not the second or third eigenvalue of the constructed Laplacian");
  out.landed_index = cluster.front() + 1;
  return out;
}

}  // namespace fiedler
