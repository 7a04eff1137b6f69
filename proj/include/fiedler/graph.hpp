#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fiedler/int_matrix.hpp"

namespace fiedler {

using Vertex = std::size_t;
using EdgeId = std::size_t;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  Vertex vertex;
  EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1. Edge ids are positions in the
/// edge list given at construction.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph complete(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Neighbors sorted by vertex label.
  std::span<const Neighbor> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
  bool is_connected() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

class Tree {
 public:
  /// Rejects edge lists that are not spanning trees on n vertices.
  Tree(std::size_t n, std::vector<Edge> edges);
  explicit Tree(Graph graph);

  /// Decodes a Prüfer sequence over 0..seq.size()+1.
  static Tree from_pruefer(std::span<const Vertex> seq);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t n() const noexcept { return graph_.n(); }
  std::size_t num_edges() const noexcept { return graph_.num_edges(); }
  std::span<const Edge> edges() const noexcept { return graph_.edges(); }
  const Edge& edge(EdgeId e) const { return graph_.edge(e); }
  std::span<const Neighbor> neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  bool is_leaf(Vertex v) const { return graph_.degree(v) == 1; }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const { return graph_.edge_between(a, b); }

 private:
  Graph graph_;
};

/// C_n with vertices labelled by Z_n in cycle order; edge j joins j and j+1.
class Cycle {
 public:
  explicit Cycle(std::size_t n);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t n() const noexcept { return graph_.n(); }
  Vertex next(Vertex i) const { return (i + 1) % n(); }
  Vertex prev(Vertex i) const { return (i + n() - 1) % n(); }

 private:
  Graph graph_;
};

/// A branch of a tree: a subtree together with a boundary vertex r.
///
/// Interior vertices (V(B) minus r) are kept in ascending label order and
/// edges in ascending id order; these orders index the rows and columns of
/// the Dirichlet incidence and path matrices. Every interior vertex owns
/// exactly one edge, the one leading towards r.
class Branch {
 public:
  /// The whole tree viewed as a branch with boundary r. r need not be a
  /// leaf, but the Dirichlet matrices below require one.
  static Branch rooted(const Tree& tree, Vertex r);

  Vertex boundary() const noexcept { return boundary_; }
  std::size_t size() const noexcept { return interior_.size(); }
  std::span<const Vertex> interior() const noexcept { return interior_; }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t boundary_degree() const noexcept { return boundary_degree_; }
  std::size_t tree_size() const noexcept { return local_.size(); }

  bool contains(Vertex v) const { return v == boundary_ || (v < local_.size() && local_[v] != npos); }
  /// Row index of an interior vertex.
  std::size_t local_index(Vertex v) const;

  /// Neighbor of v on the way to the boundary, and the edge joining them
  /// (as a column index into edges()).
  Vertex parent(std::size_t local) const { return parent_[local]; }
  std::size_t parent_column(std::size_t local) const { return parent_col_[local]; }
  std::size_t depth(std::size_t local) const { return depth_[local]; }

  /// Row index of the endpoint of edges()[col] farther from the boundary.
  std::size_t edge_child(std::size_t col) const { return edge_child_[col]; }

  friend std::vector<Branch> branches_at(const Tree& tree, Vertex v);

 private:
  Branch(const Tree& tree, Vertex r, std::span<const Neighbor> starts);

  Vertex boundary_;
  std::size_t boundary_degree_ = 0;
  std::vector<Vertex> interior_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> parent_col_;
  std::vector<std::size_t> depth_;
  std::vector<EdgeId> edges_;
  std::vector<std::size_t> edge_child_;
  std::vector<std::size_t> local_;
};

/// Branches of the tree at v, ordered by the neighbor of v each contains.
std::vector<Branch> branches_at(const Tree& tree, Vertex v);

/// N_r: rows are interior vertices, columns are branch edges, every edge
/// oriented towards the boundary.
IntMatrix dirichlet_incidence(const Branch& branch);

/// P: entry (e, i) is 1 when e lies on the path from i to the boundary.
IntMatrix path_matrix(const Branch& branch);

/// Incidence matrix with edge {u, v} (u < v) oriented from u to v.
IntMatrix incidence_matrix(const Graph& graph);

}  // namespace fiedler
