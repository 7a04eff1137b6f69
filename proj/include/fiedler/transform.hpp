#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

/// A weighted tree with its spectral data computed once at construction.
class WeightedTree {
 public:
  WeightedTree(Tree tree, WeightAssignment weights);

  const Tree& tree() const noexcept { return tree_; }
  const WeightAssignment& weights() const noexcept { return lap_.weights(); }
  const WeightedLaplacian& laplacian() const noexcept { return lap_; }
  const FiedlerData& spectral() const noexcept { return data_; }
  double lambda2() const noexcept { return data_.lambda2; }
  const CharacteristicSet& char_set() const noexcept { return char_set_; }

  /// Type I with the characteristic vertex of degree 2.
  bool in_type1_degree2() const;
  bool in_type2() const { return char_set_.kind == CharacteristicSet::Kind::TypeII; }

 private:
  Tree tree_;
  WeightedLaplacian lap_;
  FiedlerData data_;
  CharacteristicSet char_set_;
};

/// w1 w2 / (w1 + w2).
double series_weight(double w1, double w2);

struct MergeResult {
  Graph graph;
  std::vector<double> weights;
  std::vector<std::size_t> label_map;  ///< old label to new label, npos for the removed vertex
  EdgeId merged_edge = 0;
};

/// Removes a degree-2 vertex r with neighbors p, q and joins p and q by the
/// series weight. Labels above r shift down by one; the new edge takes the id
/// of the lower-numbered edge at r.
MergeResult merge_degree_two_vertex(const Graph& graph, std::span<const double> weights, Vertex r);

struct TransformResult {
  WeightedTree result;
  std::vector<std::size_t> label_map;  ///< input label to output label (npos when removed)
  std::size_t special = 0;             ///< contract: id of the merged edge; subdivide: label of the new vertex
};

/// Characteristic contraction. Throws not-in-domain unless the characteristic
/// set is a single vertex of degree 2.
TransformResult contract(const WeightedTree& wt);

/// Characteristic subdivision. Throws not-in-domain unless the characteristic
/// set is an edge. The new vertex is labelled n; the characteristic edge id
/// now joins its lower end to the new vertex and the other half is appended.
TransformResult subdivide(const WeightedTree& wt);

}  // namespace fiedler
