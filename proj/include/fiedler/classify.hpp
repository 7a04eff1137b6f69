#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fiedler/graph.hpp"

namespace fiedler {

/// Zero-sum tolerance, relative to |x|_1.
inline constexpr double kSumTol = 1e-12;

enum class Sign { Negative, Zero, Positive };

std::string_view to_string(Sign s);

struct TypeIVerdict {
  Vertex char_vertex = 0;
  std::vector<Sign> branch_signs;  ///< one per branch at char_vertex, in branches_at order
};

struct TypeIIVerdict {
  Vertex negative_end = 0;  ///< p, with x_p < 0
  Vertex positive_end = 0;  ///< q, with x_q > 0
};

struct Rejection {
  std::string reason;
  std::vector<Vertex> witness;
};

using FiedlerLikeVerdict = std::variant<TypeIVerdict, TypeIIVerdict, Rejection>;

struct ClassifyOptions {
  /// 0 means literal comparisons. A positive value treats |x_i| <= zero_tol * |x|_inf
  /// as zero and is meant for vectors that come out of an eigensolver.
  double zero_tol = 0.0;
};

FiedlerLikeVerdict classify_tree_vector(const Tree& tree, std::span<const double> x, ClassifyOptions opts = {});

inline bool is_rejected(const FiedlerLikeVerdict& v) { return std::holds_alternative<Rejection>(v); }

struct CycleVerdict {
  bool periodic = false;
  bool balanced = false;
  Vertex p = 0, p_prime = 0, q = 0, q_prime = 0;
  std::vector<Vertex> positive, negative, zero;  ///< V+ and V- in cycle order along their paths
  std::string reason;                            ///< why periodic or balanced failed; empty otherwise
  std::vector<Vertex> witness;

  bool two_peaks() const { return p != p_prime; }
  bool two_valleys() const { return q != q_prime; }
};

CycleVerdict classify_cycle_vector(const Cycle& cycle, std::span<const double> x, ClassifyOptions opts = {});

/// Sum of x over the cyclic interval from `from` to `to`, both ends included.
/// An empty interval is expressed by the caller, not here.
double cyclic_sum(std::span<const double> x, Vertex from, Vertex to);

bool classify_complete_vector(std::size_t n, std::span<const double> x);

}  // namespace fiedler
