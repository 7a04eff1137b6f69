#include "fiedler/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "fiedler/error.hpp"

namespace fiedler {

WeightAssignment::WeightAssignment(std::vector<double> weights) : weights_(std::move(weights)) {
  for (std::size_t e = 0; e < weights_.size(); ++e)
    if (!(weights_[e] > 0.0) || !std::isfinite(weights_[e]))
      throw Error(ErrorKind::InvalidWeight,
                  "weight of edge " + std::to_string(e) + " must be positive, got " + std::to_string(weights_[e]),
                  {e});
}

WeightAssignment WeightAssignment::scaled(double factor) const {
  std::vector<double> w(weights_);
  for (double& v : w) v *= factor;
  return WeightAssignment(std::move(w));
}

namespace {

SymMatrix assemble(const Graph& graph, const WeightAssignment& w) {
  if (w.size() != graph.num_edges())
    throw Error(ErrorKind::DimensionMismatch, "graph has " + std::to_string(graph.num_edges()) +
                                                  " edges but " + std::to_string(w.size()) + " weights were given");
  SymMatrix a(graph.n());
  for (Vertex i = 0; i < graph.n(); ++i) {
    double diag = 0.0;
    for (const auto& nb : graph.neighbors(i)) {
      a.set(i, nb.vertex, -w[nb.edge]);
      diag += w[nb.edge];
    }
    a.set(i, i, diag);
  }
  return a;
}

}  // namespace

WeightedLaplacian::WeightedLaplacian(Graph graph, WeightAssignment weights)
    : graph_(std::move(graph)), weights_(std::move(weights)), matrix_(assemble(graph_, weights_)) {}

double WeightedLaplacian::weight(Vertex a, Vertex b) const {
  const auto e = graph_.edge_between(a, b);
  if (!e) throw Error(ErrorKind::InvalidVertex, "no edge between the given vertices", {a, b});
  return weights_[*e];
}

WeightedLaplacian laplacian(const Graph& graph, const WeightAssignment& w) { return WeightedLaplacian(graph, w); }

SymMatrix laplacian_via_incidence(const Graph& graph, const WeightAssignment& w) {
  if (w.size() != graph.num_edges()) throw Error(ErrorKind::DimensionMismatch, "weight count does not match edges");
  const IntMatrix n = incidence_matrix(graph);
  SymMatrix a(graph.n());
  for (std::size_t i = 0; i < graph.n(); ++i)
    for (std::size_t j = i; j < graph.n(); ++j) {
      double acc = 0.0;
      for (EdgeId e = 0; e < graph.num_edges(); ++e)
        acc += static_cast<double>(n(i, e)) * w[e] * static_cast<double>(n(j, e));
      a.set(i, j, acc);
    }
  return a;
}

SymMatrix dirichlet_matrix(const WeightedLaplacian& lap, std::span<const Vertex> boundary) {
  const std::size_t n = lap.graph().n();
  if (boundary.empty()) throw Error(ErrorKind::InvalidParameter, "boundary must be nonempty");
  std::vector<bool> drop(n, false);
  for (Vertex v : boundary) {
    if (v >= n) throw Error(ErrorKind::InvalidVertex, "boundary vertex out of range", {v});
    drop[v] = true;
  }
  std::vector<std::size_t> keep;
  for (Vertex v = 0; v < n; ++v)
    if (!drop[v]) keep.push_back(v);
  if (keep.empty()) throw Error(ErrorKind::EmptyMatrix, "boundary covers every vertex");
  return lap.matrix().principal_submatrix(keep);
}

PerronPair perron_pair(const SymMatrix& d) {
  const auto dec = eigh(d);
  const double value = dec.values.front();
  if (!(value > 0.0)) throw Error(ErrorKind::InvalidInput, "Dirichlet matrix is not positive definite");
  if (multiplicity_of(dec, value) != 1)
    throw Error(ErrorKind::DegeneratePerron, "smallest eigenvalue " + std::to_string(value) + " is not simple");
  std::vector<double> v = dec.vectors.front();
  if (sum(v) < 0.0)
    for (double& x : v) x = -x;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(v[i] > 0.0))
      throw Error(ErrorKind::DegeneratePerron, "Perron vector is not entrywise positive at row " + std::to_string(i),
                  {i});
  return {value, std::move(v)};
}

FiedlerData fiedler(const WeightedLaplacian& lap) {
  if (lap.graph().n() < 2) throw Error(ErrorKind::InvalidInput, "algebraic connectivity needs at least two vertices");
  if (!lap.graph().is_connected()) throw Error(ErrorKind::InvalidInput, "graph is not connected");
  FiedlerData out;
  out.spectrum = eigh(lap.matrix());
  out.lambda2 = out.spectrum.values[1];
  // Positive weights on a connected graph give lambda2 > 0; below the
  // eigensolver's noise floor it cannot be told apart from lambda1.
  const double floor = 100.0 * std::numeric_limits<double>::epsilon() * lap.matrix().norm_inf();
  if (!(out.lambda2 > floor))
    throw Error(ErrorKind::NumericalAmbiguity,
                "lambda2 = " + std::to_string(out.lambda2) + " is below the rounding level of the Laplacian");
  for (std::size_t k : eigenvalue_cluster(out.spectrum, out.lambda2)) out.basis.push_back(out.spectrum.vectors[k]);
  out.multiplicity = out.basis.size();
  return out;
}

CharacteristicSet characteristic_set_of(const Tree& tree, std::span<const double> x, double zero_tol) {
  if (x.size() != tree.n()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match the tree");
  const double tol = zero_tol * norm_inf(x);
  auto is_zero = [&](Vertex v) { return std::abs(x[v]) <= tol; };

  std::vector<Vertex> candidates;
  bool any_zero = false;
  for (Vertex v = 0; v < tree.n(); ++v) {
    if (!is_zero(v)) continue;
    any_zero = true;
    for (const auto& nb : tree.neighbors(v))
      if (!is_zero(nb.vertex)) {
        candidates.push_back(v);
        break;
      }
  }
  if (any_zero) {
    if (candidates.size() == 1) return {CharacteristicSet::Kind::TypeI, candidates};
    throw Error(ErrorKind::NumericalAmbiguity,
                std::to_string(candidates.size()) + " zero entries border nonzero entries", candidates);
  }
  std::vector<Vertex> changes;
  for (const auto& e : tree.edges())
    if ((x[e.u] < 0.0) != (x[e.v] < 0.0)) {
      changes.push_back(e.u);
      changes.push_back(e.v);
    }
  if (changes.size() == 2) return {CharacteristicSet::Kind::TypeII, changes};
  throw Error(ErrorKind::NumericalAmbiguity,
              "vector has no zero entry and " + std::to_string(changes.size() / 2) + " sign-change edges", changes);
}

CharacteristicSet locate_characteristic_set(const WeightedLaplacian& lap) {
  return locate_characteristic_set(Tree(lap.graph()), fiedler(lap));
}

CharacteristicSet locate_characteristic_set(const Tree& tree, const FiedlerData& data) {
  if (data.basis.size() == 1) return characteristic_set_of(tree, data.basis.front());

  // A repeated lambda2 only happens for Type I. Single basis vectors can then
  // carry a branch at the level of rounding noise, so the vertex is read off
  // the eigenspace row norms, which do not depend on the basis.
  std::vector<double> rows(tree.n(), 0.0);
  for (const auto& x : data.basis)
    for (Vertex v = 0; v < tree.n(); ++v) rows[v] += x[v] * x[v];
  for (double& r : rows) r = std::sqrt(r);
  const CharacteristicSet found = characteristic_set_of(tree, rows);
  if (found.kind != CharacteristicSet::Kind::TypeI)
    throw Error(ErrorKind::NumericalAmbiguity, "repeated lambda2 without a common zero vertex", found.vertices);
  const Vertex r = found.vertices.front();

  for (std::size_t k = 0; k < data.basis.size(); ++k) {
    const auto& x = data.basis[k];
    if (std::abs(x[r]) > kZeroTol * norm_inf(x))
      throw Error(ErrorKind::NumericalAmbiguity, "a lambda2 eigenvector does not vanish at the common zero vertex", {r});
    std::optional<CharacteristicSet> own;
    try {
      own = characteristic_set_of(tree, x);
    } catch (const Error&) {
      // Unreadable on its own (a branch sits at the zero threshold); the
      // vanishing check above is what this vector can confirm.
    }
    if (own && !(*own == found)) {
      std::vector<Vertex> witness = found.vertices;
      witness.insert(witness.end(), own->vertices.begin(), own->vertices.end());
      throw Error(ErrorKind::NumericalAmbiguity, "basis vectors of the lambda2 eigenspace disagree", witness);
    }
  }
  return found;
}

double check_sum_identity(const WeightedLaplacian& lap, std::span<const double> x, double lam,
                          std::span<const Vertex> subset) {
  const Graph& g = lap.graph();
  if (x.size() != g.n()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match the graph");
  std::vector<bool> in(g.n(), false);
  for (Vertex v : subset) {
    if (v >= g.n()) throw Error(ErrorKind::InvalidVertex, "subset vertex out of range", {v});
    in[v] = true;
  }
  double flow = 0.0;
  double mass = 0.0;
  for (Vertex i = 0; i < g.n(); ++i) {
    if (!in[i]) continue;
    mass += x[i];
    for (const auto& nb : g.neighbors(i))
      if (!in[nb.vertex]) flow += lap.weights()[nb.edge] * (x[i] - x[nb.vertex]);
  }
  return std::abs(flow - lam * mass);
}

}  // namespace fiedler
