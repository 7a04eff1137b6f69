#include <algorithm>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "fiedler/classify.hpp"
#include "fiedler/cycle_inverse.hpp"
#include "fiedler/error.hpp"
#include "fiedler/generate.hpp"
#include "fiedler/transform.hpp"
#include "fiedler/tree_inverse.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"

using namespace fiedler;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

double residual(const WeightedLaplacian& lap, std::span<const double> x, double lam) {
  const auto ax = lap.matrix().apply(x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(ax[i] - lam * x[i]));
  return worst / norm_inf(x);
}

// A random weighted tree whose characteristic vertex has degree 2.
WeightedTree random_type1_degree2(Rng& rng) {
  while (true) {
    const Tree t = random_tree(helpers::pick(rng, 3, 15), rng);
    std::vector<Vertex> deg2;
    for (Vertex v = 0; v < t.n(); ++v)
      if (t.degree(v) == 2) deg2.push_back(v);
    if (deg2.empty()) continue;
    const Vertex r = deg2[helpers::pick(rng, 0, deg2.size() - 1)];
    const auto x = random_type1_vector(t, r, rng);
    const double lam = std::exp(helpers::uniform(rng, -1.5, 1.5));
    return WeightedTree(t, general_lambda_rescale(type1_inverse(t, x), lam).weights);
  }
}

// Random weights almost surely give Type II; the loop guards the rare exception.
WeightedTree random_type2(Rng& rng) {
  while (true) {
    const Tree t = random_tree(helpers::pick(rng, 2, 14), rng);
    WeightedTree wt(t, random_weights(t.num_edges(), rng));
    if (wt.in_type2()) return wt;
  }
}

double weight_between(const WeightedTree& wt, Vertex a, Vertex b) { return wt.laplacian().weight(a, b); }

}  // namespace

TEST_CASE("series weight") {
  CHECK(series_weight(5, 4) == doctest::Approx(20.0 / 9.0).epsilon(1e-15));
  CHECK(series_weight(1, 1) == 0.5);
}

TEST_CASE("contraction of the seven-vertex tree gives the six-vertex example") {
  const Tree t(7, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {4, 5}, {4, 6}});
  const WeightedTree wt(t, WeightAssignment(std::vector<double>{5, 2, 2, 4, 3, 3}));
  REQUIRE(wt.in_type1_degree2());
  CHECK(wt.lambda2() == doctest::Approx(1.0).epsilon(1e-12));
  const auto out = contract(wt);
  CHECK(out.label_map == std::vector<std::size_t>{npos, 0, 1, 2, 3, 4, 5});
  CHECK(out.special == 0);
  const auto& res = out.result;
  CHECK(res.in_type2());
  CHECK(res.char_set().vertices == std::vector<Vertex>{0, 3});
  CHECK(weight_between(res, 0, 3) == doctest::Approx(20.0 / 9.0).epsilon(1e-14));
  CHECK(weight_between(res, 0, 1) == 2.0);
  CHECK(weight_between(res, 3, 5) == 3.0);
  CHECK(res.lambda2() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("contraction of the three-vertex path") {
  const WeightedTree wt(Tree(3, {{0, 1}, {1, 2}}), WeightAssignment(std::vector<double>{1, 1}));
  const auto out = contract(wt);
  CHECK(out.result.tree().n() == 2);
  CHECK(out.result.weights()[0] == 0.5);
}

TEST_CASE("subdivision of the six-vertex example") {
  const WeightedTree wt(fixtures::type2_tree(), WeightAssignment(fixtures::type2_weights()));
  const auto out = subdivide(wt);
  CHECK(out.special == 6);
  const auto& res = out.result;
  CHECK(res.tree().edge(4) == Edge(0, 6));
  CHECK(res.tree().edge(5) == Edge(3, 6));
  CHECK(res.weights()[4] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(res.weights()[5] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(res.in_type1_degree2());
  CHECK(res.char_set().vertices == std::vector<Vertex>{6});
}

TEST_CASE("subdivision of a symmetric single edge doubles the weight on both halves") {
  const WeightedTree wt(Tree(2, {{0, 1}}), WeightAssignment(std::vector<double>{1.5}));
  const auto out = subdivide(wt);
  CHECK(out.result.weights()[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(out.result.weights()[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("domain violations") {
  const WeightedTree type1(fixtures::type1_tree(), WeightAssignment(fixtures::type1_weights()));
  const WeightedTree type2(fixtures::type2_tree(), WeightAssignment(fixtures::type2_weights()));
  CHECK(kind_of([&] { (void)contract(type1); }) == ErrorKind::NotInDomain);  // degree 3
  CHECK(kind_of([&] { (void)contract(type2); }) == ErrorKind::NotInDomain);
  CHECK(kind_of([&] { (void)subdivide(type1); }) == ErrorKind::NotInDomain);

  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(kind_of([&] { (void)merge_degree_two_vertex(triangle, std::vector<double>{1, 1, 1}, 1); }) ==
        ErrorKind::InvalidGraph);
  CHECK(kind_of([&] { (void)merge_degree_two_vertex(Graph(2, {{0, 1}}), std::vector<double>{1}, 0); }) ==
        ErrorKind::NotInDomain);
}

TEST_CASE("contraction then subdivision is the identity on degree-2 Type I trees") {
  auto rng = helpers::make_rng(50);
  for (int trial = 0; trial < 200; ++trial) {
    const auto wt = random_type1_degree2(rng);
    const Vertex r = wt.char_set().vertices.front();
    const auto c = contract(wt);
    CHECK(c.result.in_type2());
    CHECK(c.result.lambda2() == doctest::Approx(wt.lambda2()).epsilon(1e-9));

    // Truncated Fiedler vector is an eigenvector of the contracted tree.
    const auto& x = wt.spectral().basis.front();
    std::vector<double> truncated;
    for (Vertex v = 0; v < wt.tree().n(); ++v)
      if (v != r) truncated.push_back(x[v]);
    CHECK(residual(c.result.laplacian(), truncated, wt.lambda2()) <= 1e-8);

    const auto s = subdivide(c.result);
    CHECK(s.result.in_type1_degree2());
    CHECK(s.result.lambda2() == doctest::Approx(wt.lambda2()).epsilon(1e-9));
    auto final_label = [&](Vertex v) { return v == r ? s.special : s.label_map[c.label_map[v]]; };
    for (const auto& e : wt.tree().edges()) {
      const double before = weight_between(wt, e.u, e.v);
      const double after = weight_between(s.result, final_label(e.u), final_label(e.v));
      CHECK(std::abs(after - before) <= 1e-10 * before);
    }
  }
}

TEST_CASE("subdivision then contraction is the identity on Type II trees") {
  auto rng = helpers::make_rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto wt = random_type2(rng);
    const auto s = subdivide(wt);
    CHECK(s.result.in_type1_degree2());
    CHECK(s.result.char_set().vertices.front() == s.special);
    CHECK(s.result.lambda2() == doctest::Approx(wt.lambda2()).epsilon(1e-9));

    // Padded Fiedler vector is an eigenvector of the subdivided tree.
    auto padded = wt.spectral().basis.front();
    padded.push_back(0.0);
    CHECK(residual(s.result.laplacian(), padded, wt.lambda2()) <= 1e-8);

    const auto c = contract(s.result);
    REQUIRE(c.result.tree().num_edges() == wt.tree().num_edges());
    for (EdgeId e = 0; e < wt.tree().num_edges(); ++e) {
      CHECK(c.result.tree().edge(e) == wt.tree().edge(e));
      CHECK(std::abs(c.result.weights()[e] - wt.weights()[e]) <= 1e-10 * wt.weights()[e]);
    }
  }
}

TEST_CASE("merging a degree-2 zero vertex keeps the eigenpair on trees and cycles") {
  auto rng = helpers::make_rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    // Trees: every degree-2 vertex where a Type I realization vanishes.
    const Tree t = random_tree(helpers::pick(rng, 3, 14), rng);
    const auto x = random_fiedler_like(t, FiedlerType::TypeI, rng);
    const auto w = type1_inverse(t, x).weights;
    for (Vertex r = 0; r < t.n(); ++r) {
      if (t.degree(r) != 2 || x[r] != 0.0) continue;
      const auto nbs = t.neighbors(r);
      if (t.edge_between(nbs[0].vertex, nbs[1].vertex)) continue;
      const auto m = merge_degree_two_vertex(t.graph(), w.values(), r);
      std::vector<double> y;
      for (Vertex v = 0; v < t.n(); ++v)
        if (v != r) y.push_back(x[v]);
      CHECK(residual(laplacian(m.graph, WeightAssignment(m.weights)), y, 1.0) <= 1e-10);
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    // Cycles: realize a periodic balanced vector with a zero, then merge it.
    const std::size_t n = helpers::pick(rng, 5, 16);
    const auto x = random_periodic_balanced(n, rng, 1);
    const Cycle c(n);
    const auto res = cycle_inverse(c, x, 1.0);
    const Vertex r = static_cast<Vertex>(std::find(x.begin(), x.end(), 0.0) - x.begin());
    const auto m = merge_degree_two_vertex(c.graph(), res.weights.values(), r);
    std::vector<double> y;
    for (Vertex v = 0; v < n; ++v)
      if (v != r) y.push_back(x[v]);
    CHECK(residual(laplacian(m.graph, WeightAssignment(m.weights)), y, 1.0) <= 1e-9);
  }
}
