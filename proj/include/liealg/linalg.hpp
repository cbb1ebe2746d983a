#pragma once

#include <cstddef>
#include <span>

#include "liealg/matrix.hpp"

namespace liealg {

inline constexpr double kDefaultRankTol = 1e-8;

// OpenMP kernels. Each output row is owned by one thread and accumulated in
// the same order as the serial reference, so results are bitwise identical.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
Vector mat_vec(const DenseMatrix& a, std::span<const double> x);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// a^k by repeated multiplication; a^0 is the identity.
DenseMatrix mat_pow(const DenseMatrix& a, unsigned k);

DenseMatrix transpose(const DenseMatrix& a);

struct LuSolution {
  Vector x;
  /// 1 / (||A||_1 ||A^-1||_1), with ||A^-1||_1 computed from the factors.
  double rcond = 0.0;
};

/// Gaussian elimination with partial pivoting. A pivot whose magnitude is at
/// most n * eps * max|A_ij| raises SingularSystem.
LuSolution lu_solve(const DenseMatrix& a, std::span<const double> b);

double determinant(const DenseMatrix& a);

/// Singular values in descending order.
Vector singular_values(const DenseMatrix& a);

/// Count of singular values strictly above rel_tol * sigma_max; 0 for the
/// zero matrix.
std::size_t numerical_rank(const DenseMatrix& a, double rel_tol = kDefaultRankTol);

namespace serial {

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
Vector mat_vec(const DenseMatrix& a, std::span<const double> x);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace serial

}  // namespace liealg
