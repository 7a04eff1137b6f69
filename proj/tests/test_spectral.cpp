#include <algorithm>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "fiedler/classify.hpp"
#include "fiedler/error.hpp"
#include "fiedler/spectral.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fiedler;

namespace {

double max_entry_diff(const SymMatrix& a, const SymMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

Graph random_connected_graph(std::size_t n, Rng& rng) {
  // A random spanning tree plus a few chords.
  const Tree t = random_tree(n, rng);
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  for (int extra = 0; extra < 3; ++extra) {
    const Vertex a = helpers::pick(rng, 0, n - 1);
    const Vertex b = helpers::pick(rng, 0, n - 1);
    if (a == b) continue;
    if (std::find(edges.begin(), edges.end(), Edge(a, b)) == edges.end()) edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

// Monotone-path property: along every path leaving v the values are strictly
// increasing, strictly decreasing, or all zero.
bool monotone_from(const Tree& t, Vertex v, std::span<const double> x, double tol) {
  std::vector<Vertex> path{v};
  bool ok = true;
  std::function<void(Vertex, Vertex)> walk = [&](Vertex u, Vertex parent) {
    bool leaf = true;
    for (const auto& nb : t.neighbors(u)) {
      if (nb.vertex == parent) continue;
      leaf = false;
      path.push_back(nb.vertex);
      walk(nb.vertex, u);
      path.pop_back();
    }
    if (!leaf || path.size() < 2) return;
    bool inc = true, dec = true, zero = true;
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!(x[path[i]] > x[path[i - 1]] + tol)) inc = false;
      if (!(x[path[i]] < x[path[i - 1]] - tol)) dec = false;
      if (std::abs(x[path[i]]) > tol) zero = false;
    }
    if (!(inc || dec || zero)) ok = false;
  };
  walk(v, npos);
  return ok;
}

}  // namespace

TEST_CASE("weights must be positive and finite") {
  CHECK_THROWS_AS(WeightAssignment(std::vector<double>{1.0, 0.0}), Error);
  CHECK_THROWS_AS(WeightAssignment(std::vector<double>{-2.0}), Error);
  CHECK_THROWS_AS(WeightAssignment(std::vector<double>{std::nan("")}), Error);
  CHECK_THROWS_AS(WeightAssignment(std::vector<double>{INFINITY}), Error);
  try {
    WeightAssignment(std::vector<double>{1.0, -1.0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidWeight);
    CHECK(e.witness() == std::vector<std::size_t>{1});
  }
  CHECK_THROWS_AS(laplacian(Tree(3, {{0, 1}, {1, 2}}), WeightAssignment(std::vector<double>{1.0})), Error);
}

TEST_CASE("nine-vertex Laplacian matches the printed matrix entry for entry") {
  const auto lap = laplacian(fixtures::type1_tree(), WeightAssignment(fixtures::type1_weights()));
  const auto expected = SymMatrix::from_rows(fixtures::type1_laplacian());
  CHECK(max_entry_diff(lap.matrix(), expected) == 0.0);
  CHECK(lap.weight(0, 7) == 6.0);
  CHECK(lap.weight(7, 0) == 6.0);
  CHECK_THROWS_AS(lap.weight(2, 3), Error);
}

TEST_CASE("six-vertex Laplacian matches the printed matrix") {
  const auto lap = laplacian(fixtures::type2_tree(), WeightAssignment(fixtures::type2_weights()));
  CHECK(max_entry_diff(lap.matrix(), SymMatrix::from_rows(fixtures::type2_laplacian())) < 1e-14);
}

TEST_CASE("single edge Laplacian") {
  const auto lap = laplacian(Tree(2, {{0, 1}}), WeightAssignment(std::vector<double>{2.5}));
  CHECK(max_entry_diff(lap.matrix(), SymMatrix::from_rows({{2.5, -2.5}, {-2.5, 2.5}})) == 0.0);
}

TEST_CASE("entrywise and incidence constructions agree; rows sum to zero") {
  auto rng = helpers::make_rng(20);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(helpers::pick(rng, 2, 14), rng);
    const auto w = random_weights(g.num_edges(), rng);
    const auto lap = laplacian(g, w);
    const auto via_n = laplacian_via_incidence(g, w);
    CHECK(max_entry_diff(lap.matrix(), via_n) <= 1e-13 * lap.matrix().norm_inf());
    const auto row_sums = lap.matrix().apply(std::vector<double>(g.n(), 1.0));
    CHECK(norm_inf(row_sums) <= 1e-12 * lap.matrix().norm_inf());
    for (const auto& e : g.edges()) CHECK(lap.matrix()(e.u, e.v) == -lap.weight(e.u, e.v));
  }
}

TEST_CASE("Dirichlet matrix of the small branch") {
  const auto lap = laplacian(fixtures::small_branch_tree(), WeightAssignment(std::vector<double>{5, 2, 2}));
  const std::vector<Vertex> boundary{0};
  const auto d = dirichlet_matrix(lap, boundary);
  CHECK(max_entry_diff(d, SymMatrix::from_rows({{9, -2, -2}, {-2, 2, 0}, {-2, 0, 2}})) == 0.0);

  const auto k2 = laplacian(Tree(2, {{0, 1}}), WeightAssignment(std::vector<double>{3.0}));
  CHECK(dirichlet_matrix(k2, boundary)(0, 0) == 3.0);

  const std::vector<Vertex> all{0, 1};
  try {
    (void)dirichlet_matrix(k2, all);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyMatrix);
  }
  CHECK_THROWS_AS(dirichlet_matrix(k2, std::vector<Vertex>{}), Error);
}

TEST_CASE("leaf-boundary Dirichlet matrices of weighted trees are positive definite") {
  auto rng = helpers::make_rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree t = random_tree(helpers::pick(rng, 2, 12), rng);
    const auto lap = laplacian(t, random_weights(t.num_edges(), rng));
    Vertex r = helpers::pick(rng, 0, t.n() - 1);
    while (!t.is_leaf(r)) r = (r + 1) % t.n();
    const std::vector<Vertex> boundary{r};
    CHECK(eigh(dirichlet_matrix(lap, boundary)).values.front() > 0.0);
  }
}

TEST_CASE("Perron pair of the small branch") {
  const auto pp = perron_pair(SymMatrix::from_rows({{9, -2, -2}, {-2, 2, 0}, {-2, 0, 2}}));
  CHECK(pp.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(abs_cosine(pp.vector, std::vector<double>{1, 2, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  for (double v : pp.vector) CHECK(v > 0.0);

  const auto one = perron_pair(SymMatrix::from_rows({{4.0}}));
  CHECK(one.value == 4.0);
  CHECK(one.vector == std::vector<double>{1.0});

  CHECK_THROWS_AS(perron_pair(SymMatrix::from_rows({{1, -1}, {-1, 1}})), Error);  // singular
  try {
    (void)perron_pair(SymMatrix::from_rows({{1, 0}, {0, 1}}));  // reducible, double
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegeneratePerron);
  }
}

TEST_CASE("Perron vectors increase away from the boundary") {
  auto rng = helpers::make_rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree t = random_tree(helpers::pick(rng, 2, 12), rng);
    const auto lap = laplacian(t, random_weights(t.num_edges(), rng));
    Vertex r = 0;
    while (!t.is_leaf(r)) ++r;
    const auto b = Branch::rooted(t, r);
    const std::vector<Vertex> boundary{r};
    const auto pp = perron_pair(dirichlet_matrix(lap, boundary));
    // dirichlet_matrix keeps ascending order, as does the branch interior.
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Vertex up = b.parent(i);
      if (up == r) continue;
      CHECK(pp.vector[i] > pp.vector[b.local_index(up)]);
    }
  }
}

TEST_CASE("Fiedler data of the two worked examples") {
  {
    const auto lap = laplacian(fixtures::type1_tree(), WeightAssignment(fixtures::type1_weights()));
    const auto fd = fiedler::fiedler(lap);
    CHECK(fd.lambda2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fd.multiplicity == 1);
    CHECK(abs_cosine(fd.basis[0], fixtures::type1_vector()) >= 1.0 - 1e-12);
    const auto cs = locate_characteristic_set(lap);
    CHECK(cs.kind == CharacteristicSet::Kind::TypeI);
    CHECK(cs.vertices == std::vector<Vertex>{0});
  }
  {
    const auto lap = laplacian(fixtures::type2_tree(), WeightAssignment(fixtures::type2_weights()));
    const auto fd = fiedler::fiedler(lap);
    CHECK(fd.lambda2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fd.multiplicity == 1);
    CHECK(abs_cosine(fd.basis[0], fixtures::type2_vector()) >= 1.0 - 1e-12);
    const auto cs = locate_characteristic_set(lap);
    CHECK(cs.kind == CharacteristicSet::Kind::TypeII);
    CHECK(cs.vertices == std::vector<Vertex>{0, 3});
  }
}

TEST_CASE("complete graph K3 has a double algebraic connectivity") {
  const auto lap = laplacian(Graph::complete(3), WeightAssignment(std::vector<double>(3, 1.0)));
  const auto fd = fiedler::fiedler(lap);
  CHECK(fd.lambda2 == doctest::Approx(3.0));
  CHECK(fd.multiplicity == 2);
  CHECK(fd.basis.size() == 2);
}

TEST_CASE("fiedler rejects disconnected and trivial graphs") {
  const auto lap = laplacian(Graph(3, {{0, 1}}), WeightAssignment(std::vector<double>{1.0}));
  CHECK_THROWS_AS(fiedler::fiedler(lap), Error);
  const auto single = laplacian(Graph(1, {}), WeightAssignment(std::vector<double>{}));
  CHECK_THROWS_AS(fiedler::fiedler(single), Error);
}

TEST_CASE("equal-weight star is Type I at the centre") {
  const Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto lap = laplacian(star, WeightAssignment(std::vector<double>(3, 1.0)));
  const auto fd = fiedler::fiedler(lap);
  CHECK(fd.multiplicity == 2);
  const auto cs = locate_characteristic_set(lap);
  CHECK(cs.kind == CharacteristicSet::Kind::TypeI);
  CHECK(cs.vertices == std::vector<Vertex>{0});
}

TEST_CASE("characteristic_set_of reports ambiguity") {
  const Tree path(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<double> two_changes{1, -1, 1, -1};
  try {
    (void)characteristic_set_of(path, two_changes);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NumericalAmbiguity);
  }
  const std::vector<double> two_zero_borders{1, 0, -1, 0};
  CHECK_THROWS_AS(characteristic_set_of(path, two_zero_borders), Error);
  CHECK_THROWS_AS(characteristic_set_of(path, std::vector<double>{1, -1}), Error);
}

TEST_CASE("forward invariants on random weighted trees") {
  auto rng = helpers::make_rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(helpers::pick(rng, 2, 15), rng);
    const auto lap = laplacian(t, random_weights(t.num_edges(), rng));
    const auto fd = fiedler::fiedler(lap);
    const auto& spec = fd.spectrum;
    const double scale = lap.matrix().norm_inf();

    CHECK(std::abs(spec.values[0]) <= 1e-10 * scale);
    CHECK(abs_cosine(spec.vectors[0], std::vector<double>(t.n(), 1.0)) >= 1.0 - 1e-10);
    CHECK(multiplicity_of(spec, 0.0) == 1);

    const auto cs = locate_characteristic_set(t, fd);
    for (const auto& x : fd.basis) {
      CHECK(characteristic_set_of(t, x) == cs);
      if (cs.kind == CharacteristicSet::Kind::TypeI)
        CHECK(monotone_from(t, cs.vertices[0], x, kZeroTol * norm_inf(x)));
    }
    if (cs.kind == CharacteristicSet::Kind::TypeI) CHECK(t.degree(cs.vertices[0]) >= 2);
    else CHECK(t.edge_between(cs.vertices[0], cs.vertices[1]).has_value());

    // Interlacing: deleting one vertex.
    const Vertex v = helpers::pick(rng, 0, t.n() - 1);
    const std::vector<Vertex> boundary{v};
    const double mu = eigh(dirichlet_matrix(lap, boundary)).values.front();
    CHECK(mu >= spec.values[0] - 1e-9 * scale);
    CHECK(mu <= spec.values[1] + 1e-9 * scale);
  }
}

TEST_CASE("characteristic set is basis independent when lambda2 is repeated") {
  // Stars with equal leaf weights force a repeated lambda2; rotate the basis.
  auto rng = helpers::make_rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t leaves = helpers::pick(rng, 3, 7);
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    const Tree star(leaves + 1, edges);
    const auto lap = laplacian(star, WeightAssignment(std::vector<double>(leaves, helpers::uniform(rng, 0.5, 3))));
    const auto fd = fiedler::fiedler(lap);
    REQUIRE(fd.multiplicity == leaves - 1);
    const double theta = helpers::uniform(rng, 0.0, 3.14159);
    std::vector<double> mix(star.n());
    for (std::size_t i = 0; i < star.n(); ++i)
      mix[i] = std::cos(theta) * fd.basis[0][i] + std::sin(theta) * fd.basis[1][i];
    CHECK(characteristic_set_of(star, mix) == CharacteristicSet{CharacteristicSet::Kind::TypeI, {0}});
    CHECK(locate_characteristic_set(lap) == CharacteristicSet{CharacteristicSet::Kind::TypeI, {0}});
  }
}

TEST_CASE("sum identity") {
  const auto lap = laplacian(fixtures::type2_tree(), WeightAssignment(fixtures::type2_weights()));
  const auto x = fixtures::type2_vector();
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  CHECK(check_sum_identity(lap, x, 1.0, all) <= 1e-12);
  // S = {1,2,3}: only edge {1,4} leaves S; both sides equal -5.
  const std::vector<Vertex> s{0, 1, 2};
  CHECK(check_sum_identity(lap, x, 1.0, s) <= 1e-12);
  const std::vector<Vertex> bad{7};
  CHECK_THROWS_AS(check_sum_identity(lap, x, 1.0, bad), Error);
}

TEST_CASE("sum identity on random weighted cycle eigenpairs") {
  auto rng = helpers::make_rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const Cycle c(helpers::pick(rng, 3, 15));
    const auto lap = laplacian(c, random_weights(c.n(), rng));
    const auto dec = eigh(lap.matrix());
    const std::size_t k = helpers::pick(rng, 0, c.n() - 1);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < c.n(); ++v)
      if (helpers::pick(rng, 0, 1)) s.push_back(v);
    CHECK(check_sum_identity(lap, dec.vectors[k], dec.values[k], s) <=
          1e-9 * lap.matrix().norm_inf() * norm_inf(dec.vectors[k]));
  }
}
