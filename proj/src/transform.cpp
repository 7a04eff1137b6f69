#include "fiedler/transform.hpp"

#include <algorithm>
#include <string>

#include "fiedler/error.hpp"

namespace fiedler {

WeightedTree::WeightedTree(Tree tree, WeightAssignment weights)
    : tree_(std::move(tree)),
      lap_(tree_.graph(), std::move(weights)),
      data_(fiedler(lap_)),
      char_set_(locate_characteristic_set(tree_, data_)) {}

bool WeightedTree::in_type1_degree2() const {
  return char_set_.kind == CharacteristicSet::Kind::TypeI && tree_.degree(char_set_.vertices.front()) == 2;
}

double series_weight(double w1, double w2) { return w1 * w2 / (w1 + w2); }

MergeResult merge_degree_two_vertex(const Graph& graph, std::span<const double> weights, Vertex r) {
  if (weights.size() != graph.num_edges()) throw Error(ErrorKind::DimensionMismatch, "weight count does not match");
  const auto nbs = graph.neighbors(r);
  if (nbs.size() != 2)
    throw Error(ErrorKind::NotInDomain, "vertex " + std::to_string(r) + " has degree " + std::to_string(nbs.size()),
                {r});
  const Vertex p = nbs[0].vertex;
  const Vertex q = nbs[1].vertex;
  if (graph.edge_between(p, q))
    throw Error(ErrorKind::InvalidGraph, "neighbors of the merged vertex are already adjacent", {p, q});

  MergeResult out{Graph(1, {}), {}, std::vector<std::size_t>(graph.n()), 0};
  for (Vertex v = 0; v < graph.n(); ++v) out.label_map[v] = v < r ? v : (v == r ? npos : v - 1);
  const EdgeId first = std::min(nbs[0].edge, nbs[1].edge);
  const EdgeId second = std::max(nbs[0].edge, nbs[1].edge);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    if (e == second) continue;
    if (e == first) {
      out.merged_edge = edges.size();
      edges.emplace_back(out.label_map[p], out.label_map[q]);
      out.weights.push_back(series_weight(weights[nbs[0].edge], weights[nbs[1].edge]));
    } else {
      edges.emplace_back(out.label_map[graph.edge(e).u], out.label_map[graph.edge(e).v]);
      out.weights.push_back(weights[e]);
    }
  }
  out.graph = Graph(graph.n() - 1, std::move(edges));
  return out;
}

TransformResult contract(const WeightedTree& wt) {
  if (!wt.in_type1_degree2())
    throw Error(ErrorKind::NotInDomain, "characteristic set is not a single vertex of degree 2",
                wt.char_set().vertices);
  const Vertex r = wt.char_set().vertices.front();
  auto merged = merge_degree_two_vertex(wt.tree().graph(), wt.weights().values(), r);
  return {WeightedTree(Tree(std::move(merged.graph)), WeightAssignment(std::move(merged.weights))),
          std::move(merged.label_map), merged.merged_edge};
}

TransformResult subdivide(const WeightedTree& wt) {
  if (!wt.in_type2()) throw Error(ErrorKind::NotInDomain, "characteristic set is not an edge", wt.char_set().vertices);
  const Vertex a = wt.char_set().vertices[0];
  const Vertex b = wt.char_set().vertices[1];
  const auto& x = wt.spectral().basis.front();
  const EdgeId k = *wt.tree().edge_between(a, b);
  const double w = wt.weights()[k];
  const std::size_t n = wt.tree().n();

  std::vector<Edge> edges(wt.tree().edges().begin(), wt.tree().edges().end());
  std::vector<double> weights(wt.weights().values().begin(), wt.weights().values().end());
  edges[k] = Edge(a, n);
  weights[k] = w * (1.0 - x[b] / x[a]);
  edges.emplace_back(b, n);
  weights.push_back(w * (1.0 - x[a] / x[b]));

  std::vector<std::size_t> label_map(n);
  for (Vertex v = 0; v < n; ++v) label_map[v] = v;
  return {WeightedTree(Tree(n + 1, std::move(edges)), WeightAssignment(std::move(weights))), std::move(label_map), n};
}

}  // namespace fiedler
