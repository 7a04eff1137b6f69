#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiedler/int_matrix.hpp"

namespace fiedler {

/// Relative tolerance used to group eigenvalues into one multiplicity class.
inline constexpr double kMultiplicityTol = 1e-8;

/// Dense real symmetric matrix. Symmetry is exact: the only mutators write
/// both triangles at once.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  /// Throws invalid-input unless a(i,j) == a(j,i) bit for bit.
  SymMatrix(std::size_t n, std::vector<double> row_major);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t n() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  std::span<const double> data() const noexcept { return data_; }
  std::vector<double> apply(std::span<const double> x) const;
  double norm_inf() const;
  double norm_frobenius() const;

  /// Rows and columns `keep`, in the given order.
  SymMatrix principal_submatrix(std::span<const std::size_t> keep) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> values;                ///< ascending
  std::vector<std::vector<double>> vectors;  ///< vectors[k] pairs with values[k]
  double residual = 0.0;                     ///< max_k |A v_k - lambda_k v_k|_inf
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi eigensolver. Stops once the off-diagonal Frobenius norm is at
/// most machine epsilon times |A|_F (100 sweeps at most). Each eigenvector is scaled so that
/// its first entry of largest magnitude is nonnegative.
EigenDecomposition eigh(const SymMatrix& a);

/// Number of eigenvalues within kMultiplicityTol * max(1, |lam|) of lam.
std::size_t multiplicity_of(const EigenDecomposition& dec, double lam);

/// Indices of the eigenvalues counted by multiplicity_of.
std::vector<std::size_t> eigenvalue_cluster(const EigenDecomposition& dec, double lam);

/// Solves N_r y = b for a Dirichlet incidence matrix without inverting it:
/// each column of N_r names a child vertex (+1) and at most one parent (-1),
/// so y is the vector of subtree sums P b, accumulated leaves first.
std::vector<double> solve_unit_lower_like(const IntMatrix& n_r, std::span<const double> b);

/// x_i / y_i, with `zero_zero_fill` wherever x_i = y_i = 0.
std::vector<double> entrywise_div(std::span<const double> x, std::span<const double> y, double zero_zero_fill);

std::vector<double> multiply(const IntMatrix& m, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);
double norm_inf(std::span<const double> x);
double norm_1(std::span<const double> x);
double norm_2(std::span<const double> x);
double sum(std::span<const double> x);

/// |cos| of the angle between a and b.
double abs_cosine(std::span<const double> a, std::span<const double> b);

}  // namespace fiedler
