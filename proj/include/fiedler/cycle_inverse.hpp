#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

struct HInterval {
  double lo = 0.0;
  double hi = 0.0;
  double midpoint() const { return 0.5 * (lo + hi); }
};

/// Open interval of shifts h for which h + sum_{i > j} y_i has the sign of
/// y_{j+1} - y_j on every edge. y must be periodic and balanced with a unique
/// peak at vertex 0 and a unique valley.
HInterval feasible_h_interval(std::span<const double> y);

/// Cyclic left rotation by s: out[i] = x[(i + s) mod n].
std::vector<double> rotate(std::span<const double> x, std::size_t s);

struct CycleInverseResult {
  WeightAssignment weights;     ///< edge j joins j and j+1, original labels
  double achieved_lambda = 0.0;
  double h = 0.0;               ///< shift, in rotated coordinates
  std::size_t rotation = 0;     ///< original label of rotated vertex 0
  std::optional<HInterval> interval;
  std::size_t landed_index = 0; ///< 2 or 3
  double residual = 0.0;        ///< |A x - lam x|_inf / |x|_inf
};

/// Weights on C_n making x an eigenvector for lam, which then sits at the
/// second or third smallest eigenvalue. Plateau edges, where both the shifted
/// suffix sum and the edge difference vanish, get zero_fill.
CycleInverseResult cycle_inverse(const Cycle& cycle, std::span<const double> x, double lam, double zero_fill = 1.0,
                                 std::optional<double> h = std::nullopt);

}  // namespace fiedler
