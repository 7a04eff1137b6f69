#include "fiedler/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "fiedler/error.hpp"

namespace fiedler {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n)
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices", {v});
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
  if (n_ == 0) throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= n_ || v >= n_)
      throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " has an endpoint out of range", {u, v});
    if (u == v) throw Error(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(u), {u});
    if (!seen.emplace(u, v).second)
      throw Error(ErrorKind::InvalidGraph, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}",
                  {u, v});
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }
  for (auto& adj : adjacency_)
    std::sort(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

std::span<const Neighbor> Graph::neighbors(Vertex v) const {
  check_vertex(n_, v);
  return adjacency_[v];
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  for (const auto& nb : neighbors(a))
    if (nb.vertex == b) return nb.edge;
  return std::nullopt;
}

bool Graph::is_connected() const {
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency_[v]) {
      if (seen[nb.vertex]) continue;
      seen[nb.vertex] = true;
      ++count;
      stack.push_back(nb.vertex);
    }
  }
  return count == n_;
}

Tree::Tree(std::size_t n, std::vector<Edge> edges) : Tree(Graph(n, std::move(edges))) {}

Tree::Tree(Graph graph) : graph_(std::move(graph)) {
  if (graph_.num_edges() + 1 != graph_.n())
    throw Error(ErrorKind::InvalidGraph, "a tree on " + std::to_string(graph_.n()) + " vertices needs " +
                                             std::to_string(graph_.n() - 1) + " edges, got " +
                                             std::to_string(graph_.num_edges()));
  if (!graph_.is_connected()) throw Error(ErrorKind::InvalidGraph, "edge list is disconnected and contains a cycle");
}

Tree Tree::from_pruefer(std::span<const Vertex> seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    check_vertex(n, v);
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : seq) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree(n, std::move(edges));
}

namespace {

std::vector<Edge> cycle_edges(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidGraph, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (Vertex j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
  return edges;
}

}  // namespace

Cycle::Cycle(std::size_t n) : graph_(n, cycle_edges(n)) {}

Branch::Branch(const Tree& tree, Vertex r, std::span<const Neighbor> starts)
    : boundary_(r), boundary_degree_(starts.size()), local_(tree.n(), npos) {
  struct Visit {
    Vertex vertex;
    Vertex parent;
    EdgeId edge;
    std::size_t depth;
  };
  std::vector<Visit> order;
  std::vector<Visit> stack;
  for (const auto& s : starts) stack.push_back({s.vertex, r, s.edge, 1});
  while (!stack.empty()) {
    const Visit cur = stack.back();
    stack.pop_back();
    order.push_back(cur);
    for (const auto& nb : tree.neighbors(cur.vertex))
      if (nb.vertex != cur.parent) stack.push_back({nb.vertex, cur.vertex, nb.edge, cur.depth + 1});
  }
  std::sort(order.begin(), order.end(), [](const Visit& a, const Visit& b) { return a.vertex < b.vertex; });

  interior_.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    interior_.push_back(order[i].vertex);
    parent_.push_back(order[i].parent);
    depth_.push_back(order[i].depth);
    edges_.push_back(order[i].edge);
    local_[order[i].vertex] = i;
  }
  std::sort(edges_.begin(), edges_.end());
  parent_col_.resize(order.size());
  edge_child_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto col = static_cast<std::size_t>(std::lower_bound(edges_.begin(), edges_.end(), order[i].edge) -
                                              edges_.begin());
    parent_col_[i] = col;
    edge_child_[col] = i;
  }
}

Branch Branch::rooted(const Tree& tree, Vertex r) {
  check_vertex(tree.n(), r);
  return Branch(tree, r, tree.neighbors(r));
}

std::size_t Branch::local_index(Vertex v) const {
  if (v >= local_.size() || local_[v] == npos)
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " is not interior to the branch", {v});
  return local_[v];
}

std::vector<Branch> branches_at(const Tree& tree, Vertex v) {
  check_vertex(tree.n(), v);
  std::vector<Branch> out;
  const auto nbs = tree.neighbors(v);
  out.reserve(nbs.size());
  for (std::size_t i = 0; i < nbs.size(); ++i) out.push_back(Branch(tree, v, nbs.subspan(i, 1)));
  return out;
}

namespace {

void require_leaf_boundary(const Branch& branch) {
  if (branch.boundary_degree() != 1)
    throw Error(ErrorKind::BoundaryNotLeaf,
                "boundary vertex " + std::to_string(branch.boundary()) + " has degree " +
                    std::to_string(branch.boundary_degree()) + " inside the branch",
                {branch.boundary()});
}

}  // namespace

IntMatrix dirichlet_incidence(const Branch& branch) {
  require_leaf_boundary(branch);
  const std::size_t m = branch.size();
  IntMatrix n_r(m, m);
  for (std::size_t col = 0; col < m; ++col) {
    const std::size_t child = branch.edge_child(col);
    n_r(child, col) = 1;
    const Vertex up = branch.parent(child);
    if (up != branch.boundary()) n_r(branch.local_index(up), col) = -1;
  }
  return n_r;
}

IntMatrix path_matrix(const Branch& branch) {
  require_leaf_boundary(branch);
  const std::size_t m = branch.size();
  IntMatrix p(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t cur = i;
    while (true) {
      p(branch.parent_column(cur), i) = 1;
      const Vertex up = branch.parent(cur);
      if (up == branch.boundary()) break;
      cur = branch.local_index(up);
    }
  }
  return p;
}

IntMatrix incidence_matrix(const Graph& graph) {
  IntMatrix n(graph.n(), graph.num_edges());
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    n(graph.edge(e).u, e) = 1;
    n(graph.edge(e).v, e) = -1;
  }
  return n;
}

}  // namespace fiedler
