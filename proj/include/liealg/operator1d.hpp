#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liealg/matrix.hpp"
#include "liealg/partition.hpp"

namespace liealg {

/// Real polynomial, coefficients in ascending powers.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}
  static Polynomial constant(double c) { return Polynomial({c}); }

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  /// Horner evaluation.
  double operator()(double x) const;
  Polynomial derivative() const;

 private:
  std::vector<double> coeffs_;
};

/// sum_k coeff_k(x) (d/dx)^order_k with distinct orders.
class OperatorPoly1D {
 public:
  struct Term {
    Polynomial coeff;
    unsigned order = 0;
  };

  explicit OperatorPoly1D(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }

 private:
  std::vector<Term> terms_;
};

/// Z_jk = dl_k/dx(x_j): Z_jj = sum_{m != j} 1/(x_j - x_m),
/// Z_jk = (pi_j / pi_k) / (x_j - x_k) otherwise.
DenseMatrix diff_matrix(const Partition& p);

/// D^{-1} Z D with D = diag(pi): same diagonal as Z, off-diagonal entries
/// 1/(x_j - x_k). Similar to Z, so every polynomial in it has the rank of the
/// same polynomial in Z, without the pi-ratio scaling that spoils SVD
/// thresholds on clustered nodes.
DenseMatrix balanced_diff_matrix(const Partition& p);

/// X = diag(x_0, ..., x_n).
DenseMatrix mult_matrix(const Partition& p);

/// sum_terms coeff(X) Z^order.
DenseMatrix apply_operator_poly(const OperatorPoly1D& op, const Partition& p);

/// Z * values: exact nodal derivatives for samples of polynomials of degree <= n.
Vector differentiate_values(const Partition& p, std::span<const double> values);

}  // namespace liealg
