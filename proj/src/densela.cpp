#include "fiedler/densela.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fiedler/error.hpp"

namespace fiedler {

SymMatrix::SymMatrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n)
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(data_.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (data_[i * n + j] != data_[j * n + i])
        throw Error(ErrorKind::InvalidInput, "matrix is not symmetric at (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ")",
                    {i, j});
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  std::vector<double> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SymMatrix(rows.size(), std::move(flat));
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = value;
}

void SymMatrix::add(std::size_t i, std::size_t j, double value) {
  data_[i * n_ + j] += value;
  if (i != j) data_[j * n_ + i] += value;
}

std::vector<double> SymMatrix::apply(std::span<const double> x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += data_[i * n_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

double SymMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += std::abs(data_[i * n_ + j]);
    best = std::max(best, row);
  }
  return best;
}

double SymMatrix::norm_frobenius() const {
  double acc = 0.0;
  for (double v : data_) acc += v * v;
  return std::sqrt(acc);
}

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> keep) const {
  SymMatrix sub(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) sub.data_[a * keep.size() + b] = (*this)(keep[a], keep[b]);
  return sub;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) acc += a[i * n + j] * a[i * n + j];
  return std::sqrt(acc);
}

}  // namespace

EigenDecomposition eigh(const SymMatrix& input) {
  const std::size_t n = input.n();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "eigh of an empty matrix");
  for (double v : input.data())
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "matrix has non-finite entries");

  std::vector<double> a(input.data().begin(), input.data().end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [n](std::vector<double>& m, std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };

  // Run to rounding level: a looser stop leaves eigenvector errors of
  // off/gap, which ratio-based reconstructions amplify.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double threshold = eps * input.norm_frobenius();
  std::size_t sweep = 0;
  for (; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a, n) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        if (std::abs(apq) <= 0.01 * eps * (std::abs(at(a, p, p)) + std::abs(at(a, q, q)))) {
          at(a, p, q) = 0.0;
          at(a, q, p) = 0.0;
          continue;
        }
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(a, p, p) -= t * apq;
        at(a, q, q) += t * apq;
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          at(a, k, p) = np;
          at(a, p, k) = np;
          at(a, k, q) = nq;
          at(a, q, k) = nq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  EigenDecomposition dec;
  dec.sweeps = sweep;
  dec.values.reserve(n);
  dec.vectors.reserve(n);
  for (std::size_t k : order) {
    dec.values.push_back(a[k * n + k]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    std::size_t lead = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(col[i]) > std::abs(col[lead])) lead = i;
    if (col[lead] < 0.0)
      for (double& x : col) x = -x;
    dec.vectors.push_back(std::move(col));
  }

  for (std::size_t k = 0; k < n; ++k) {
    const auto av = input.apply(dec.vectors[k]);
    for (std::size_t i = 0; i < n; ++i)
      dec.residual = std::max(dec.residual, std::abs(av[i] - dec.values[k] * dec.vectors[k][i]));
  }
  return dec;
}

std::vector<std::size_t> eigenvalue_cluster(const EigenDecomposition& dec, double lam) {
  const double tol = kMultiplicityTol * std::max(1.0, std::abs(lam));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dec.values.size(); ++i)
    if (std::abs(dec.values[i] - lam) <= tol) out.push_back(i);
  return out;
}

std::size_t multiplicity_of(const EigenDecomposition& dec, double lam) {
  return eigenvalue_cluster(dec, lam).size();
}

std::vector<double> solve_unit_lower_like(const IntMatrix& n_r, std::span<const double> b) {
  const std::size_t m = n_r.rows();
  if (n_r.cols() != m) throw Error(ErrorKind::DimensionMismatch, "Dirichlet incidence matrix must be square");
  if (b.size() != m)
    throw Error(ErrorKind::DimensionMismatch,
                "right-hand side has length " + std::to_string(b.size()) + ", expected " + std::to_string(m));

  // child_of[col]: the row holding +1; parent_of[col]: the row holding -1 or npos.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> child_of(m, none), parent_of(m, none), own_column(m, none);
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t row = 0; row < m; ++row) {
      const auto entry = n_r(row, col);
      if (entry == 0) continue;
      std::size_t& slot = entry == 1 ? child_of[col] : parent_of[col];
      if ((entry != 1 && entry != -1) || slot != none)
        throw Error(ErrorKind::InvalidInput, "not a Dirichlet incidence matrix (column " + std::to_string(col) + ")");
      slot = row;
    }
    if (child_of[col] == none || own_column[child_of[col]] != none)
      throw Error(ErrorKind::InvalidInput, "not a Dirichlet incidence matrix (column " + std::to_string(col) + ")");
    own_column[child_of[col]] = col;
  }

  // Row i reads y[own(i)] - sum of y over columns whose parent is i = b_i.
  std::vector<std::size_t> pending(m, 0);
  for (std::size_t col = 0; col < m; ++col)
    if (parent_of[col] != none) ++pending[parent_of[col]];
  std::vector<double> y(m, 0.0);
  std::vector<double> acc(b.begin(), b.end());
  std::vector<std::size_t> ready;
  for (std::size_t row = 0; row < m; ++row)
    if (pending[row] == 0) ready.push_back(row);
  std::size_t solved = 0;
  while (!ready.empty()) {
    const std::size_t row = ready.back();
    ready.pop_back();
    const std::size_t col = own_column[row];
    y[col] = acc[row];
    ++solved;
    const std::size_t up = parent_of[col];
    if (up != none) {
      acc[up] += y[col];
      if (--pending[up] == 0) ready.push_back(up);
    }
  }
  if (solved != m) throw Error(ErrorKind::InvalidInput, "not a Dirichlet incidence matrix (cyclic structure)");
  return y;
}

std::vector<double> entrywise_div(std::span<const double> x, std::span<const double> y, double zero_zero_fill) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "entrywise division of unequal lengths");
  if (!(zero_zero_fill > 0.0) || !std::isfinite(zero_zero_fill))
    throw Error(ErrorKind::InvalidParameter, "zero/zero fill must be a positive number");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] != 0.0) {
      out[i] = x[i] / y[i];
    } else if (x[i] == 0.0) {
      out[i] = zero_zero_fill;
    } else {
      throw Error(ErrorKind::DivisionStructure, "division of a nonzero entry by zero at index " + std::to_string(i),
                  {i});
    }
  }
  return out;
}

std::vector<double> multiply(const IntMatrix& m, std::span<const double> x) {
  if (m.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product of incompatible shapes");
  std::vector<double> y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += static_cast<double>(m(i, j)) * x[j];
  return y;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm_inf(std::span<const double> x) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v));
  return best;
}

double norm_1(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += std::abs(v);
  return acc;
}

double norm_2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double sum(std::span<const double> x) { return std::accumulate(x.begin(), x.end(), 0.0); }

double abs_cosine(std::span<const double> a, std::span<const double> b) {
  const double na = norm_2(a);
  const double nb = norm_2(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::abs(dot(a, b)) / (na * nb);
}

}  // namespace fiedler
