#include "fiedler/tree_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fiedler/densela.hpp"
#include "fiedler/error.hpp"

namespace fiedler {

DirichletReconstruction dirichlet_from_perron(const Branch& branch, double lam, std::span<const double> x) {
  if (!(lam > 0.0) || !std::isfinite(lam)) throw Error(ErrorKind::InvalidParameter, "Perron value must be positive");
  if (x.size() != branch.size())
    throw Error(ErrorKind::DimensionMismatch, "branch has " + std::to_string(branch.size()) +
                                                  " interior vertices, vector has " + std::to_string(x.size()));
  for (std::size_t i = 0; i < branch.size(); ++i) {
    const Vertex up = branch.parent(i);
    const double below = up == branch.boundary() ? 0.0 : x[branch.local_index(up)];
    if (!(x[i] > below) || !std::isfinite(x[i]))
      throw Error(ErrorKind::NotIncreasing,
                  "vector is not strictly increasing on edge {" + std::to_string(up) + "," +
                      std::to_string(branch.interior()[i]) + "}",
                  {up, branch.interior()[i]});
  }
  const IntMatrix n_r = dirichlet_incidence(branch);
  const std::vector<double> sums = solve_unit_lower_like(n_r, x);
  const std::vector<double> steps = multiply(n_r.transposed(), x);
  std::vector<double> w = entrywise_div(sums, steps, 1.0);
  for (double& v : w) v *= lam;
  return {branch, lam, std::vector<double>(x.begin(), x.end()), std::move(w)};
}

namespace {

std::vector<double> restrict_to(const Branch& b, std::span<const double> x, double sign) {
  std::vector<double> out;
  out.reserve(b.size());
  for (Vertex v : b.interior()) out.push_back(sign * x[v]);
  return out;
}

std::vector<double> depth_filler(const Branch& b) {
  std::vector<double> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = static_cast<double>(b.depth(i));
  return out;
}

[[noreturn]] void not_fiedler_like(const Rejection& r) {
  throw Error(ErrorKind::NotFiedlerLike, r.reason, r.witness);
}

}  // namespace

TreeInverseResult type1_inverse(const Tree& tree, std::span<const double> x, const TypeIOptions& opts) {
  const auto verdict = classify_tree_vector(tree, x);
  if (const auto* rej = std::get_if<Rejection>(&verdict)) not_fiedler_like(*rej);
  const auto* t1 = std::get_if<TypeIVerdict>(&verdict);
  if (!t1) throw Error(ErrorKind::NotFiedlerLike, "vector has no zero entry; it is not of the first type");

  const auto branches = branches_at(tree, t1->char_vertex);
  auto check_keys = [&](const auto& m, const char* what) {
    for (const auto& [k, v] : m) {
      if (k >= branches.size())
        throw Error(ErrorKind::InvalidParameter, std::string(what) + " given for branch " + std::to_string(k) +
                                                     " but there are " + std::to_string(branches.size()) +
                                                     " branches");
      if (t1->branch_signs[k] != Sign::Zero)
        throw Error(ErrorKind::InvalidParameter,
                    std::string(what) + " given for branch " + std::to_string(k) + ", where the vector is nonzero");
    }
  };
  check_keys(opts.mu, "mu");
  check_keys(opts.filler, "filler");

  std::vector<double> w(tree.num_edges(), 0.0);
  std::vector<BranchParameters> free;
  std::size_t unit_count = 0;
  for (std::size_t k = 0; k < branches.size(); ++k) {
    const Branch& b = branches[k];
    DirichletReconstruction rec = [&] {
      const Sign s = t1->branch_signs[k];
      if (s != Sign::Zero) return dirichlet_from_perron(b, 1.0, restrict_to(b, x, s == Sign::Positive ? 1.0 : -1.0));
      const auto mu_it = opts.mu.find(k);
      const double mu = mu_it == opts.mu.end() ? 1.0 : mu_it->second;
      if (!(mu >= 1.0) || !std::isfinite(mu))
        throw Error(ErrorKind::InvalidParameter,
                    "Perron value " + std::to_string(mu) + " for branch " + std::to_string(k) + " is below 1");
      const auto fill_it = opts.filler.find(k);
      std::vector<double> filler = fill_it == opts.filler.end() ? depth_filler(b) : fill_it->second;
      auto r = dirichlet_from_perron(b, mu, filler);
      free.push_back({k, mu, std::move(filler)});
      return r;
    }();
    if (std::abs(rec.perron_value - 1.0) <= kMultiplicityTol) ++unit_count;
    for (std::size_t col = 0; col < b.edges().size(); ++col) w[b.edges()[col]] = rec.weights[col];
  }
  return {WeightAssignment(std::move(w)), 1.0, {CharacteristicSet::Kind::TypeI, {t1->char_vertex}}, std::move(free),
          unit_count - 1};
}

TreeInverseResult type2_inverse(const Tree& tree, std::span<const double> x) {
  const auto verdict = classify_tree_vector(tree, x);
  if (const auto* rej = std::get_if<Rejection>(&verdict)) not_fiedler_like(*rej);
  const auto* t2 = std::get_if<TypeIIVerdict>(&verdict);
  if (!t2) throw Error(ErrorKind::NotFiedlerLike, "vector has a zero entry; it is not of the second type");
  const Vertex p = t2->negative_end;
  const Vertex q = t2->positive_end;

  auto branch_towards = [&](Vertex at, Vertex target) {
    for (auto& b : branches_at(tree, at))
      if (b.contains(target)) return b;
    throw Error(ErrorKind::InvalidGraph, "vertices of the sign-change edge are not adjacent", {at, target});
  };
  const Branch b1 = branch_towards(q, p);
  const Branch b2 = branch_towards(p, q);
  const auto r1 = dirichlet_from_perron(b1, 1.0, restrict_to(b1, x, -1.0));
  const auto r2 = dirichlet_from_perron(b2, 1.0, restrict_to(b2, x, 1.0));

  const EdgeId shared = *tree.edge_between(p, q);
  std::vector<double> w(tree.num_edges(), 0.0);
  double w1 = 0.0;
  double w2 = 0.0;
  for (std::size_t col = 0; col < b1.edges().size(); ++col) {
    if (b1.edges()[col] == shared) w1 = r1.weights[col];
    else w[b1.edges()[col]] = r1.weights[col];
  }
  for (std::size_t col = 0; col < b2.edges().size(); ++col) {
    if (b2.edges()[col] == shared) w2 = r2.weights[col];
    else w[b2.edges()[col]] = r2.weights[col];
  }
  w[shared] = w1 * w2 / (w1 + w2);
  return {WeightAssignment(std::move(w)), 1.0, {CharacteristicSet::Kind::TypeII, {std::min(p, q), std::max(p, q)}},
          {}, 1};
}

TreeInverseResult tree_inverse(const Tree& tree, std::span<const double> x, const TypeIOptions& opts) {
  const auto verdict = classify_tree_vector(tree, x);
  if (const auto* rej = std::get_if<Rejection>(&verdict)) not_fiedler_like(*rej);
  if (std::holds_alternative<TypeIVerdict>(verdict)) return type1_inverse(tree, x, opts);
  if (!opts.mu.empty() || !opts.filler.empty())
    throw Error(ErrorKind::InvalidParameter, "branch parameters only apply to vectors with a zero entry");
  return type2_inverse(tree, x);
}

TreeInverseResult general_lambda_rescale(const TreeInverseResult& result, double lam) {
  if (!(lam > 0.0) || !std::isfinite(lam)) throw Error(ErrorKind::InvalidParameter, "lambda must be positive");
  if (result.achieved_lambda != 1.0)
    throw Error(ErrorKind::InvalidParameter, "rescaling expects a result built at lambda 1");
  TreeInverseResult out = result;
  out.weights = result.weights.scaled(lam);
  out.achieved_lambda = lam;
  for (auto& fp : out.free_branch_params) fp.mu *= lam;
  return out;
}

InverseParameters recover_inverse_parameters(const WeightedLaplacian& lap, std::optional<std::vector<double>> x) {
  const Tree tree(lap.graph());
  const FiedlerData data = fiedler(lap);
  InverseParameters out;
  out.lambda = data.lambda2;
  if (x) {
    if (x->size() != tree.n()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match the tree");
    out.x = *x;
  } else {
    if (data.multiplicity != 1)
      throw Error(ErrorKind::InvalidInput, "lambda2 has multiplicity " + std::to_string(data.multiplicity) +
                                               "; pass the intended eigenvector explicitly");
    out.x = data.basis.front();
  }
  const double tol = kZeroTol * norm_inf(out.x);
  double pos = 0.0;
  double neg = 0.0;
  for (double& v : out.x) {
    if (std::abs(v) <= tol) v = 0.0;
    (v > 0.0 ? pos : neg) += v;
  }
  // Eigensolver output sums to zero only to rounding, and exact-mode
  // classification wants better; a relative nudge of that size on the
  // positive side keeps every strict inequality.
  if (pos > 0.0 && neg < 0.0)
    for (double& v : out.x)
      if (v > 0.0) v *= -neg / pos;
  out.char_set = characteristic_set_of(tree, out.x, 0.0);

  if (out.char_set.kind == CharacteristicSet::Kind::TypeI) {
    const auto branches = branches_at(tree, out.char_set.vertices.front());
    for (std::size_t k = 0; k < branches.size(); ++k) {
      const Branch& b = branches[k];
      const bool vanishes = std::all_of(b.interior().begin(), b.interior().end(),
                                        [&](Vertex v) { return out.x[v] == 0.0; });
      if (!vanishes) continue;
      const std::vector<std::size_t> keep(b.interior().begin(), b.interior().end());
      SymMatrix block = lap.matrix().principal_submatrix(keep);
      SymMatrix scaled(block.n());
      for (std::size_t i = 0; i < block.n(); ++i)
        for (std::size_t j = i; j < block.n(); ++j) scaled.set(i, j, block(i, j) / out.lambda);
      const PerronPair pp = perron_pair(scaled);
      // Perron values of exactly 1 are clamped: a value a hair below 1 is the same eigenvalue.
      out.options.mu[k] = std::max(1.0, pp.value);
      out.options.filler[k] = pp.vector;
    }
  }
  return out;
}

TreeInverseResult rebuild(const Tree& tree, const InverseParameters& params) {
  return general_lambda_rescale(tree_inverse(tree, params.x, params.options), params.lambda);
}

}  // namespace fiedler
