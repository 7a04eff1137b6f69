#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fiedler/classify.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

/// Weights on a branch whose Dirichlet matrix has Perron pair (lam, x).
struct DirichletReconstruction {
  Branch branch;
  double perron_value = 0.0;
  std::vector<double> perron_vector;  ///< indexed like branch.interior()
  std::vector<double> weights;        ///< indexed like branch.edges()
};

/// x must be positive and strictly increasing along every path leaving the
/// boundary; entries follow branch.interior() order.
DirichletReconstruction dirichlet_from_perron(const Branch& branch, double lam, std::span<const double> x);

/// Choices for branches on which a Type I vector vanishes. Keys are branch
/// positions in branches_at order; filler vectors follow branch.interior() order.
struct TypeIOptions {
  std::map<std::size_t, double> mu;
  std::map<std::size_t, std::vector<double>> filler;
};

struct BranchParameters {
  std::size_t branch = 0;
  double mu = 1.0;
  std::vector<double> filler;
};

struct TreeInverseResult {
  WeightAssignment weights;
  double achieved_lambda = 1.0;
  CharacteristicSet char_set;
  std::vector<BranchParameters> free_branch_params;
  std::size_t predicted_multiplicity = 1;
};

TreeInverseResult type1_inverse(const Tree& tree, std::span<const double> x, const TypeIOptions& opts = {});
TreeInverseResult type2_inverse(const Tree& tree, std::span<const double> x);

/// Classifies x and runs whichever algorithm applies. Options are only
/// consulted for Type I vectors.
TreeInverseResult tree_inverse(const Tree& tree, std::span<const double> x, const TypeIOptions& opts = {});

/// A result built at lambda 1 turned into the one with algebraic connectivity lam.
TreeInverseResult general_lambda_rescale(const TreeInverseResult& result, double lam);

/// Everything needed to rebuild a weighted tree with the inverse algorithms.
struct InverseParameters {
  double lambda = 0.0;
  std::vector<double> x;
  CharacteristicSet char_set;
  TypeIOptions options;
};

/// Reads (lambda2, x) and, at a characteristic vertex, the Perron data of the
/// branches where x vanishes. Without `x` the lambda2 eigenspace must be
/// one-dimensional; with it, x must lie in that eigenspace.
InverseParameters recover_inverse_parameters(const WeightedLaplacian& lap,
                                             std::optional<std::vector<double>> x = std::nullopt);

/// Runs the matching inverse algorithm on recovered parameters.
TreeInverseResult rebuild(const Tree& tree, const InverseParameters& params);

}  // namespace fiedler
