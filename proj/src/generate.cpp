#include "fiedler/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fiedler/classify.hpp"
#include "fiedler/error.hpp"

namespace fiedler {

std::uint64_t seed_from_env(std::optional<std::uint64_t> fallback) {
  if (const char* env = std::getenv("FIEDLER_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidParameter, std::string("FIEDLER_SEED is not an unsigned integer: ") + env);
  }
  if (fallback) return *fallback;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

namespace {

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Fills x on the part of the tree reached from `start` without passing `from`,
// stepping by random amounts in direction dir, starting from 0 at `from`.
void ramp(const Tree& tree, std::vector<double>& x, Vertex from, Vertex start, double dir, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> stack{{from, start}};
  while (!stack.empty()) {
    const auto [parent, v] = stack.back();
    stack.pop_back();
    x[v] = (parent == from ? 0.0 : x[parent]) + dir * uniform(rng, 0.5, 1.5);
    for (const auto& nb : tree.neighbors(v))
      if (nb.vertex != parent) stack.emplace_back(v, nb.vertex);
  }
}

void balance(std::vector<double>& x) {
  double pos = 0.0;
  double neg = 0.0;
  for (double v : x) (v > 0.0 ? pos : neg) += std::abs(v);
  for (double& v : x)
    if (v > 0.0) v *= neg / pos;
}

}  // namespace

Tree random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorKind::InvalidParameter, "a tree needs at least one vertex");
  if (n == 1) return Tree(1, {});
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = uniform_index(rng, 0, n - 1);
  return Tree::from_pruefer(seq);
}

WeightAssignment random_weights(std::size_t m, Rng& rng, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw Error(ErrorKind::InvalidParameter, "weight range must be positive");
  std::vector<double> w(m);
  for (double& v : w) v = std::exp(uniform(rng, std::log(lo), std::log(hi)));
  return WeightAssignment(std::move(w));
}

std::vector<double> random_type1_vector(const Tree& tree, Vertex r, Rng& rng, bool zero_branches) {
  const auto nbs = tree.neighbors(r);
  if (nbs.size() < 2) throw Error(ErrorKind::InvalidParameter, "characteristic vertex must not be a leaf", {r});
  const std::size_t k = nbs.size();
  std::vector<int> sign(k);
  for (auto& s : sign) {
    s = static_cast<int>(uniform_index(rng, 0, 2)) - 1;
    if (s == 0 && !zero_branches) s = uniform_index(rng, 0, 1) ? 1 : -1;
  }
  const std::size_t i = uniform_index(rng, 0, k - 1);
  const std::size_t j = (i + uniform_index(rng, 1, k - 1)) % k;
  sign[i] = 1;
  sign[j] = -1;

  std::vector<double> x(tree.n(), 0.0);
  for (std::size_t b = 0; b < k; ++b)
    if (sign[b] != 0) ramp(tree, x, r, nbs[b].vertex, sign[b], rng);
  balance(x);
  return x;
}

std::vector<double> random_type2_vector(const Tree& tree, Vertex p, Vertex q, Rng& rng) {
  if (!tree.edge_between(p, q)) throw Error(ErrorKind::InvalidParameter, "vertices are not adjacent", {p, q});
  std::vector<double> x(tree.n(), 0.0);
  ramp(tree, x, q, p, -1.0, rng);
  ramp(tree, x, p, q, 1.0, rng);
  balance(x);
  return x;
}

std::vector<double> random_fiedler_like(const Tree& tree, FiedlerType type, Rng& rng) {
  if (type == FiedlerType::TypeI) {
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < tree.n(); ++v)
      if (tree.degree(v) >= 2) inner.push_back(v);
    if (inner.empty()) throw Error(ErrorKind::InvalidParameter, "tree has no vertex of degree 2 or more");
    return random_type1_vector(tree, inner[uniform_index(rng, 0, inner.size() - 1)], rng);
  }
  if (tree.num_edges() == 0) throw Error(ErrorKind::InvalidParameter, "tree has no edge");
  const Edge e = tree.edge(uniform_index(rng, 0, tree.num_edges() - 1));
  return uniform_index(rng, 0, 1) ? random_type2_vector(tree, e.u, e.v, rng) : random_type2_vector(tree, e.v, e.u, rng);
}

namespace {

// Positive integers rising to a peak (one or two equal values) and falling.
std::vector<double> unimodal_arc(std::size_t len, Rng& rng) {
  const bool plateau = len >= 2 && uniform_index(rng, 0, 2) == 0;
  const std::size_t top = plateau ? 2 : 1;
  const std::size_t left = uniform_index(rng, 0, len - top);
  const std::size_t right = len - top - left;
  auto side = [&](std::size_t m) {
    std::vector<double> v(m);
    double cur = 0.0;
    for (auto& e : v) e = cur += static_cast<double>(uniform_index(rng, 1, 3));
    return v;
  };
  const auto l = side(left);
  auto r = side(right);
  const double peak = std::max(l.empty() ? 0.0 : l.back(), r.empty() ? 0.0 : r.back()) +
                      static_cast<double>(uniform_index(rng, 1, 3));
  std::vector<double> out(l.begin(), l.end());
  for (std::size_t i = 0; i < top; ++i) out.push_back(peak);
  out.insert(out.end(), r.rbegin(), r.rend());
  return out;
}

std::vector<double> rotated(const std::vector<double>& x, std::size_t s) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[(i + s) % x.size()];
  return out;
}

}  // namespace

std::vector<double> random_periodic_balanced(std::size_t n, Rng& rng, std::optional<int> zeros) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "a cycle needs at least 3 vertices");
  const std::size_t max_zeros = std::min<std::size_t>(2, n - 2);
  const std::size_t z = zeros ? static_cast<std::size_t>(*zeros) : uniform_index(rng, 0, max_zeros);
  if (zeros && (*zeros < 0 || z > max_zeros))
    throw Error(ErrorKind::InvalidParameter, "cannot place " + std::to_string(*zeros) + " zeros on C_" +
                                                 std::to_string(n));
  const Cycle cycle(n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t rest = n - z;
    const std::size_t a = uniform_index(rng, 1, rest - 1);
    auto pos = unimodal_arc(a, rng);
    auto neg = unimodal_arc(rest - a, rng);
    double ps = 0.0;
    double ns = 0.0;
    for (double v : pos) ps += v;
    for (double v : neg) ns += v;
    std::vector<double> x;
    for (double v : pos) x.push_back(v * ns);
    const bool zero_first = z == 2 || (z == 1 && uniform_index(rng, 0, 1) == 0);
    if (zero_first) x.push_back(0.0);
    for (double v : neg) x.push_back(-v * ps);
    if (z == 2 || (z == 1 && !zero_first)) x.push_back(0.0);
    x = rotated(x, uniform_index(rng, 0, n - 1));
    const auto v = classify_cycle_vector(cycle, x);
    if (v.periodic && v.balanced) return x;
  }
  throw Error(ErrorKind::DegenerateInput, "no balanced vector found on C_" + std::to_string(n));
}

std::vector<double> mirrored_plateau_vector(std::size_t m, Rng& rng, bool with_zeros) {
  if (m == 0) throw Error(ErrorKind::InvalidParameter, "need at least one distinct value");
  std::vector<double> a(m);
  double cur = 0.0;
  for (auto& v : a) v = cur += static_cast<double>(uniform_index(rng, 1, 3));
  std::vector<double> half(a.begin(), a.end());
  half.insert(half.end(), a.rbegin(), a.rend());
  std::vector<double> x(half);
  if (with_zeros) x.push_back(0.0);
  for (double v : half) x.push_back(-v);
  if (with_zeros) x.push_back(0.0);
  return rotated(x, uniform_index(rng, 0, x.size() - 1));
}

}  // namespace fiedler
