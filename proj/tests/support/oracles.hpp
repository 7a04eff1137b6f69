#pragma once

// Reference computations that share no code with the library: fraction-free
// determinants, dense LU, DFS subtree sums, brute-force tree enumeration and
// a linear-system solve for branch weights.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/int_matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

// Bareiss elimination; exact for the small 0/±1 matrices used here.
inline __int128 determinant(const fiedler::IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> lu_solve(Dense a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (a[piv][k] == 0.0) throw std::runtime_error("singular system");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

inline Dense to_dense(const fiedler::IntMatrix& m) {
  Dense d(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = static_cast<double>(m(i, j));
  return d;
}

// For every edge id, the sum of x over the vertices separated from r by that
// edge (NaN for edges not reached, which cannot happen in a tree).
inline std::vector<double> subtree_sums(const fiedler::Tree& t, fiedler::Vertex r, std::span<const double> x) {
  std::vector<double> out(t.num_edges(), std::nan(""));
  std::function<double(fiedler::Vertex, fiedler::Vertex)> visit = [&](fiedler::Vertex v, fiedler::Vertex parent) {
    double s = x[v];
    for (const auto& nb : t.neighbors(v)) {
      if (nb.vertex == parent) continue;
      const double below = visit(nb.vertex, v);
      out[nb.edge] = below;
      s += below;
    }
    return s;
  };
  visit(r, fiedler::npos);
  return out;
}

// Every labelled tree on n vertices via all n^(n-2) Prüfer sequences.
inline void for_each_tree(std::size_t n, const std::function<void(const fiedler::Tree&)>& fn) {
  if (n == 1) return fn(fiedler::Tree(1, {}));
  if (n == 2) return fn(fiedler::Tree(2, {{0, 1}}));
  std::vector<fiedler::Vertex> seq(n - 2, 0);
  while (true) {
    fn(fiedler::Tree::from_pruefer(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

// Weights on the edges of the part of t hanging off boundary r, found by
// solving the eigen-equations at every non-boundary vertex as a linear system
// in the unknown weights (x_r taken as 0). Indexed by edge id, NaN elsewhere.
inline std::vector<double> branch_weights_by_solve(const fiedler::Tree& t, fiedler::Vertex r, double lam,
                                                   std::span<const double> x_full) {
  std::vector<std::size_t> rows;
  for (fiedler::Vertex v = 0; v < t.n(); ++v)
    if (v != r) rows.push_back(v);
  const std::size_t m = t.num_edges();
  Dense a(rows.size(), std::vector<double>(m, 0.0));
  std::vector<double> b(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto v = rows[k];
    for (const auto& nb : t.neighbors(v)) a[k][nb.edge] = x_full[v] - (nb.vertex == r ? 0.0 : x_full[nb.vertex]);
    b[k] = lam * x_full[v];
  }
  return lu_solve(a, b);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double max_rel_diff(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]) / std::max(std::abs(a[i]), std::abs(b[i])));
  return d;
}

}  // namespace oracle
