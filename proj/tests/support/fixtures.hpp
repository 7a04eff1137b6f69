#pragma once

// Worked examples, converted to 0-based labels (label k in a figure is k-1 here).

#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fixtures {

using fiedler::Edge;

// Nine-vertex tree: centre 1 with branches {2,3,4}, {5,6,7}, {8,9}.
inline fiedler::Tree type1_tree() {
  return fiedler::Tree(9, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {4, 5}, {4, 6}, {0, 7}, {7, 8}});
}
inline std::vector<double> type1_weights() { return {5, 2, 2, 4, 3, 3, 6, 4}; }
inline std::vector<double> type1_vector() { return {0, -1, -2, -2, 1.25, 1.875, 1.875, 0, 0}; }

// Six-vertex tree: edge 1-4 with leaves 2,3 on 1 and 5,6 on 4.
inline fiedler::Tree type2_tree() { return fiedler::Tree(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}, {0, 3}}); }
inline std::vector<double> type2_weights() { return {2, 2, 3, 3, 20.0 / 9.0}; }
inline std::vector<double> type2_vector() { return {-1, -2, -2, 1.25, 1.875, 1.875}; }

inline std::vector<std::vector<double>> type1_laplacian() {
  return {{15, -5, 0, 0, -4, 0, 0, -6, 0}, {-5, 9, -2, -2, 0, 0, 0, 0, 0}, {0, -2, 2, 0, 0, 0, 0, 0, 0},
          {0, -2, 0, 2, 0, 0, 0, 0, 0},    {-4, 0, 0, 0, 10, -3, -3, 0, 0}, {0, 0, 0, 0, -3, 3, 0, 0, 0},
          {0, 0, 0, 0, -3, 0, 3, 0, 0},    {-6, 0, 0, 0, 0, 0, 0, 10, -4}, {0, 0, 0, 0, 0, 0, 0, -4, 4}};
}

inline std::vector<std::vector<double>> type2_laplacian() {
  return {{56.0 / 9, -2, -2, -20.0 / 9, 0, 0}, {-2, 2, 0, 0, 0, 0},  {-2, 0, 2, 0, 0, 0},
          {-20.0 / 9, 0, 0, 74.0 / 9, -3, -3}, {0, 0, 0, -3, 3, 0}, {0, 0, 0, -3, 0, 3}};
}

// Four-vertex tree: boundary leaf 1, vertex 2 with leaves 3 and 4.
inline fiedler::Tree small_branch_tree() { return fiedler::Tree(4, {{0, 1}, {1, 2}, {1, 3}}); }

// Cycle examples.
inline std::vector<double> unbalanced_c12() { return {3, 5, 4, 3, 2, 0, -3, -4, -4, -3, -2, -1}; }
inline std::vector<double> balanced_c10() { return {1, 2, 3, 2, 1, 0, -2, -5, -2, 0}; }

// Realization of balanced_c10 at lambda 1 with the midpoint shift h = 3/2,
// computed in exact rational arithmetic and checked with an independent
// dense eigensolver (lambda lands at the third eigenvalue).
inline std::vector<double> balanced_c10_weights() {
  return {3.5, 1.5, 1.5, 3.5, 4.5, 2.25, 5.0 / 6.0, 5.0 / 6.0, 2.25, 4.5};
}

}  // namespace fixtures
