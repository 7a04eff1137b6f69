#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

using Rng = std::mt19937_64;

/// FIEDLER_SEED when set, else `fallback`, else a nondeterministic seed.
std::uint64_t seed_from_env(std::optional<std::uint64_t> fallback = std::nullopt);

/// Uniform over labelled trees on n >= 1 vertices (Prüfer decoding).
Tree random_tree(std::size_t n, Rng& rng);

/// Log-uniform weights in [lo, hi].
WeightAssignment random_weights(std::size_t m, Rng& rng, double lo = 0.25, double hi = 4.0);

/// Type I vector with characteristic vertex r (not a leaf). Each branch at r
/// is positive, negative or zero; at least one is positive and one negative.
/// With zero_branches = false every branch is nonzero.
std::vector<double> random_type1_vector(const Tree& tree, Vertex r, Rng& rng, bool zero_branches = true);

/// Type II vector with x_p < 0 < x_q on the edge {p, q}.
std::vector<double> random_type2_vector(const Tree& tree, Vertex p, Vertex q, Rng& rng);

enum class FiedlerType { TypeI, TypeII };

/// Random characteristic set of the given type, then a random vector for it.
/// Type I needs a vertex that is not a leaf, so n >= 3.
std::vector<double> random_fiedler_like(const Tree& tree, FiedlerType type, Rng& rng);

/// Periodic balanced vector on C_n with integer entries summing to exactly 0.
/// zeros in {0, 1, 2} fixes the number of zero entries (n >= zeros + 2).
std::vector<double> random_periodic_balanced(std::size_t n, Rng& rng, std::optional<int> zeros = std::nullopt);

/// Two peaks and two valleys built from 0 < a_1 < ... < a_m mirrored four
/// times, optionally with a zero between the sign blocks; n = 4m or 4m + 2.
std::vector<double> mirrored_plateau_vector(std::size_t m, Rng& rng, bool with_zeros);

}  // namespace fiedler
