#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/densela.hpp"
#include "fiedler/graph.hpp"

namespace fiedler {

/// An entry of a forward-computed eigenvector counts as zero when its
/// magnitude is at most kZeroTol times the largest magnitude.
inline constexpr double kZeroTol = 1e-7;

/// Strictly positive, finite weight for every edge id of a graph.
class WeightAssignment {
 public:
  explicit WeightAssignment(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](EdgeId e) const { return weights_.at(e); }
  std::span<const double> values() const noexcept { return weights_; }
  WeightAssignment scaled(double factor) const;

 private:
  std::vector<double> weights_;
};

class WeightedLaplacian {
 public:
  WeightedLaplacian(Graph graph, WeightAssignment weights);

  const Graph& graph() const noexcept { return graph_; }
  const WeightAssignment& weights() const noexcept { return weights_; }
  const SymMatrix& matrix() const noexcept { return matrix_; }
  double weight(Vertex a, Vertex b) const;

 private:
  Graph graph_;
  WeightAssignment weights_;
  SymMatrix matrix_;
};

/// Builds the Laplacian entry by entry.
WeightedLaplacian laplacian(const Graph& graph, const WeightAssignment& w);
inline WeightedLaplacian laplacian(const Tree& tree, const WeightAssignment& w) { return laplacian(tree.graph(), w); }
inline WeightedLaplacian laplacian(const Cycle& cycle, const WeightAssignment& w) {
  return laplacian(cycle.graph(), w);
}

/// N W N^T, the second construction of the same matrix.
SymMatrix laplacian_via_incidence(const Graph& graph, const WeightAssignment& w);

/// Principal submatrix with the boundary rows and columns removed. Remaining
/// vertices keep ascending order.
SymMatrix dirichlet_matrix(const WeightedLaplacian& lap, std::span<const Vertex> boundary);

struct PerronPair {
  double value = 0.0;
  std::vector<double> vector;  ///< unit length, entrywise positive
};

/// Smallest eigenpair of a positive definite irreducible Dirichlet matrix.
PerronPair perron_pair(const SymMatrix& d);

struct FiedlerData {
  double lambda2 = 0.0;
  std::size_t multiplicity = 0;
  std::vector<std::vector<double>> basis;  ///< orthonormal basis of the lambda2 eigenspace
  EigenDecomposition spectrum;
};

FiedlerData fiedler(const WeightedLaplacian& lap);

struct CharacteristicSet {
  enum class Kind { TypeI, TypeII };
  Kind kind = Kind::TypeI;
  std::vector<Vertex> vertices;  ///< one vertex, or the two ends of an edge in ascending order

  bool operator==(const CharacteristicSet&) const = default;
};

/// Characteristic set read off a single near-eigenvector x of a tree, with
/// entries of magnitude <= zero_tol * |x|_inf treated as zero.
CharacteristicSet characteristic_set_of(const Tree& tree, std::span<const double> x, double zero_tol = kZeroTol);

/// Locates the characteristic set of a weighted tree. With a repeated lambda2
/// the vertex comes from the eigenspace row norms and every basis vector is
/// checked against it: it must vanish there, and if it can be read on its own
/// it must give the same set.
CharacteristicSet locate_characteristic_set(const WeightedLaplacian& lap);
CharacteristicSet locate_characteristic_set(const Tree& tree, const FiedlerData& data);

/// |sum over edges leaving S of w(i,j)(x_i - x_j) - lam * sum_{i in S} x_i|.
double check_sum_identity(const WeightedLaplacian& lap, std::span<const double> x, double lam,
                          std::span<const Vertex> subset);

}  // namespace fiedler
