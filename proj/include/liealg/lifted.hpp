#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "liealg/matrix.hpp"
#include "liealg/multi_index.hpp"
#include "liealg/partition.hpp"

namespace liealg {

/// Tensor-product operator kept in factored form: one factor per dimension,
/// std::nullopt standing for the identity of that dimension.
///
/// realize() produces the N x N matrix M with
///   M[star(i), star(j)] = prod_alpha factor_alpha[i_alpha, j_alpha].
/// Since dimension 1 varies fastest under star, M equals the conventional
/// Kronecker product of the factors taken in reversed dimension order.
class LiftedOperator {
 public:
  using Factor = std::optional<DenseMatrix>;

  LiftedOperator(MultiIndexSpace space, std::vector<Factor> factors);
  static LiftedOperator identity(MultiIndexSpace space);
  /// Identity everywhere except `matrix` in slot alpha (0-based).
  static LiftedOperator single(MultiIndexSpace space, std::size_t alpha, DenseMatrix matrix);

  const MultiIndexSpace& space() const noexcept { return space_; }
  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_identity() const;

 private:
  MultiIndexSpace space_;
  std::vector<Factor> factors_;
};

/// alpha is 1-based, matching the dimension numbering x^1, ..., x^d.
LiftedOperator lifted_diff(std::size_t alpha, std::span<const Partition> ps);
LiftedOperator lifted_mult(std::size_t alpha, std::span<const Partition> ps);

/// Factor-wise product; realize(result) == realize(a) * realize(b).
LiftedOperator lifted_compose(const LiftedOperator& a, const LiftedOperator& b);
LiftedOperator lifted_power(const LiftedOperator& a, unsigned k);

/// Entrywise realization from the star map (OpenMP over rows).
DenseMatrix realize(const LiftedOperator& op);
/// Kronecker product of the factors in reversed dimension order.
DenseMatrix realize_kron(const LiftedOperator& op);

using GridFunction = std::function<double(std::span<const double>)>;

/// Entry k-1 holds f at the node unstar(k): x^1 varies fastest.
Vector grid_eval(const GridFunction& f, std::span<const Partition> ps);

/// Polynomial in d commuting symbols z^1..z^d.
struct MonomialTerm {
  double coeff = 0.0;
  std::vector<unsigned> exponents;
};

class PolynomialNd {
 public:
  PolynomialNd(std::size_t dim, std::vector<MonomialTerm> terms);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const MonomialTerm> terms() const noexcept { return terms_; }
  double constant_term() const;

 private:
  std::size_t dim_;
  std::vector<MonomialTerm> terms_;
};

/// P(A_1, ..., A_d) with A_alpha acting in slot alpha, realized as N x N.
DenseMatrix evaluate_polynomial(const PolynomialNd& poly, const MultiIndexSpace& space,
                                std::span<const DenseMatrix> z);
/// P(W^(1), ..., W^(d)) realized as an N x N matrix.
DenseMatrix evaluate_on_lifted_diff(const PolynomialNd& poly, std::span<const Partition> ps);

/// True iff the constant term of P is nonzero, which decides whether
/// P(W^(1), ..., W^(d)) has full rank.
bool full_rank_predicate(const PolynomialNd& poly, std::span<const Partition> ps);

namespace serial {
DenseMatrix realize(const LiftedOperator& op);
}

}  // namespace liealg
