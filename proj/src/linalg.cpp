#include "liealg/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "liealg/errors.hpp"

namespace liealg {

namespace {

void require_product_dims(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("mat_mul: A.cols != B.rows");
}

// Row i of a*b, accumulated in k order. Shared by both kernels.
inline void mul_row(const DenseMatrix& a, const DenseMatrix& b, std::size_t i,
                    std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const double aik = a(i, k);
    if (aik == 0.0) continue;
    const auto brow = b.row(k);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += aik * brow[j];
  }
}

inline double dot_row(const DenseMatrix& a, std::size_t i, std::span<const double> x) {
  double s = 0.0;
  const auto r = a.row(i);
  for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
  return s;
}

inline void kron_row(const DenseMatrix& a, const DenseMatrix& b, std::size_t r,
                     std::span<double> out) {
  const std::size_t i = r / b.rows();
  const std::size_t k = r % b.rows();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double aij = a(i, j);
    for (std::size_t l = 0; l < b.cols(); ++l) out[j * b.cols() + l] = aij * b(k, l);
  }
}

}  // namespace

namespace serial {

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  require_product_dims(a, b);
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) mul_row(a, b, i, c.row(i));
  return c;
}

Vector mat_vec(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw InvalidInput("mat_vec: dimension mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot_row(a, i, x);
  return y;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < c.rows(); ++r) kron_row(a, b, r, c.row(r));
  return c;
}

}  // namespace serial

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  require_product_dims(a, b);
  DenseMatrix c(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (n * static_cast<std::ptrdiff_t>(b.cols()) > 4096)
  for (std::ptrdiff_t i = 0; i < n; ++i) mul_row(a, b, static_cast<std::size_t>(i), c.row(i));
  return c;
}

Vector mat_vec(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw InvalidInput("mat_vec: dimension mismatch");
  Vector y(a.rows());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (n > 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] = dot_row(a, static_cast<std::size_t>(i), x);
  return y;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  const auto n = static_cast<std::ptrdiff_t>(c.rows());
#pragma omp parallel for schedule(static) if (n * static_cast<std::ptrdiff_t>(c.cols()) > 4096)
  for (std::ptrdiff_t r = 0; r < n; ++r) kron_row(a, b, static_cast<std::size_t>(r), c.row(r));
  return c;
}

DenseMatrix mat_pow(const DenseMatrix& a, unsigned k) {
  if (!a.square()) throw InvalidInput("mat_pow: matrix must be square");
  DenseMatrix result = DenseMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) result = mat_mul(result, a);
  return result;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

namespace {

struct LuFactors {
  DenseMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  // Index of the first pivot under threshold; lu.rows() when none.
  std::size_t bad_pivot;
};

LuFactors factorize(const DenseMatrix& a) {
  if (!a.square()) throw InvalidInput("LU: matrix must be square");
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n), 1, n};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double threshold =
      static_cast<double>(std::max<std::size_t>(n, 1)) * std::numeric_limits<double>::epsilon() *
      max_abs(a);
  DenseMatrix& m = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (!(std::abs(m(p, k)) > threshold)) {
      f.bad_pivot = k;
      return f;
    }
    if (p != k) {
      std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(p).begin());
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    const double pivot = m(k, k);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n - k > 128)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(k) + 1; ii < rows; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      const double factor = m(i, k) / pivot;
      m(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return f;
}

void substitute(const LuFactors& f, std::span<double> x) {
  const std::size_t n = f.lu.rows();
  for (std::size_t i = 1; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x[j];
    x[ii] = s / f.lu(ii, ii);
  }
}

Vector solve_factored(const LuFactors& f, std::span<const double> b) {
  Vector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = b[f.perm[i]];
  substitute(f, x);
  return x;
}

double inverse_norm_one(const LuFactors& f) {
  const std::size_t n = f.lu.rows();
  double best = 0.0;
  Vector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[j] = 1.0;
    const Vector col = solve_factored(f, e);
    double s = 0.0;
    for (double v : col) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

LuSolution lu_solve(const DenseMatrix& a, std::span<const double> b) {
  if (!a.square()) throw InvalidInput("lu_solve: matrix must be square");
  if (b.size() != a.rows()) throw InvalidInput("lu_solve: rhs length mismatch");
  const LuFactors f = factorize(a);
  if (f.bad_pivot < a.rows()) throw SingularSystem(f.bad_pivot, 0.0);
  LuSolution sol;
  sol.x = solve_factored(f, b);
  const double anorm = norm_one(a);
  const double inorm = inverse_norm_one(f);
  sol.rcond = (anorm > 0.0 && inorm > 0.0) ? 1.0 / (anorm * inorm) : 0.0;
  return sol;
}

double determinant(const DenseMatrix& a) {
  if (!a.square()) throw InvalidInput("determinant: matrix must be square");
  const std::size_t n = a.rows();
  DenseMatrix m = a;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == 0.0) return 0.0;
    if (p != k) {
      std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(p).begin());
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

Vector singular_values(const DenseMatrix& a) {
  if (a.empty()) return {};
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> view(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                                  static_cast<Eigen::Index>(a.cols()));
  Eigen::MatrixXd copy = view;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(copy);
  const auto& s = svd.singularValues();
  return Vector(s.data(), s.data() + s.size());
}

std::size_t numerical_rank(const DenseMatrix& a, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw InvalidInput("numerical_rank: relTol must lie in (0,1)");
  const Vector s = singular_values(a);
  if (s.empty() || s.front() == 0.0) return 0;
  const double cut = rel_tol * s.front();
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [cut](double v) { return v > cut; }));
}

}  // namespace liealg
