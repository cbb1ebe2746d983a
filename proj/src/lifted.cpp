#include "liealg/lifted.hpp"

#include <string>

#include "liealg/errors.hpp"
#include "liealg/linalg.hpp"
#include "liealg/operator1d.hpp"

namespace liealg {

LiftedOperator::LiftedOperator(MultiIndexSpace space, std::vector<Factor> factors)
    : space_(std::move(space)), factors_(std::move(factors)) {
  if (factors_.size() != space_.dim()) throw InvalidInput("lifted operator: one factor per dimension");
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    if (!factors_[a]) continue;
    const auto& m = *factors_[a];
    if (!m.square() || m.rows() != space_.extent(a))
      throw InvalidInput("lifted operator: factor " + std::to_string(a + 1) +
                         " must be square of size n_alpha+1");
  }
}

LiftedOperator LiftedOperator::identity(MultiIndexSpace space) {
  std::vector<Factor> f(space.dim());
  return LiftedOperator(std::move(space), std::move(f));
}

LiftedOperator LiftedOperator::single(MultiIndexSpace space, std::size_t alpha, DenseMatrix matrix) {
  if (alpha >= space.dim()) throw InvalidInput("lifted operator: slot out of range");
  std::vector<Factor> f(space.dim());
  f[alpha] = std::move(matrix);
  return LiftedOperator(std::move(space), std::move(f));
}

bool LiftedOperator::is_identity() const {
  for (const auto& f : factors_)
    if (f) return false;
  return true;
}

namespace {

std::size_t slot(std::size_t alpha, std::size_t d) {
  if (alpha < 1 || alpha > d)
    throw InvalidInput("dimension index " + std::to_string(alpha) + " outside 1.." + std::to_string(d));
  return alpha - 1;
}

// Row r of the realized matrix. Columns are walked in star order so the
// multi-index of the column is maintained incrementally.
void realize_row(const LiftedOperator& op, std::size_t r, std::span<double> out) {
  const auto& space = op.space();
  const auto factors = op.factors();
  const MultiIndex ri = space.unstar(r + 1);
  MultiIndex ci(space.dim(), 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    double v = 1.0;
    for (std::size_t a = 0; a < space.dim() && v != 0.0; ++a) {
      if (factors[a])
        v *= (*factors[a])(ri[a], ci[a]);
      else if (ri[a] != ci[a])
        v = 0.0;
    }
    out[c] = v;
    space.increment(ci);
  }
}

}  // namespace

LiftedOperator lifted_diff(std::size_t alpha, std::span<const Partition> ps) {
  const std::size_t a = slot(alpha, ps.size());
  return LiftedOperator::single(MultiIndexSpace::from_partitions(ps), a, diff_matrix(ps[a]));
}

LiftedOperator lifted_mult(std::size_t alpha, std::span<const Partition> ps) {
  const std::size_t a = slot(alpha, ps.size());
  return LiftedOperator::single(MultiIndexSpace::from_partitions(ps), a, mult_matrix(ps[a]));
}

LiftedOperator lifted_compose(const LiftedOperator& a, const LiftedOperator& b) {
  if (!(a.space() == b.space())) throw InvalidInput("lifted_compose: space mismatch");
  std::vector<LiftedOperator::Factor> f(a.space().dim());
  for (std::size_t s = 0; s < f.size(); ++s) {
    const auto& fa = a.factors()[s];
    const auto& fb = b.factors()[s];
    if (fa && fb)
      f[s] = mat_mul(*fa, *fb);
    else if (fa)
      f[s] = *fa;
    else if (fb)
      f[s] = *fb;
  }
  return LiftedOperator(a.space(), std::move(f));
}

LiftedOperator lifted_power(const LiftedOperator& a, unsigned k) {
  LiftedOperator result = LiftedOperator::identity(a.space());
  for (unsigned i = 0; i < k; ++i) result = lifted_compose(result, a);
  return result;
}

DenseMatrix realize(const LiftedOperator& op) {
  const std::size_t n = op.space().size();
  DenseMatrix m(n, n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (rows > 64)
  for (std::ptrdiff_t r = 0; r < rows; ++r) realize_row(op, static_cast<std::size_t>(r), m.row(r));
  return m;
}

namespace serial {

DenseMatrix realize(const LiftedOperator& op) {
  const std::size_t n = op.space().size();
  DenseMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) realize_row(op, r, m.row(r));
  return m;
}

}  // namespace serial

DenseMatrix realize_kron(const LiftedOperator& op) {
  const auto& space = op.space();
  DenseMatrix acc = DenseMatrix::identity(1);
  for (std::size_t s = space.dim(); s-- > 0;) {
    const auto& f = op.factors()[s];
    acc = kron(acc, f ? *f : DenseMatrix::identity(space.extent(s)));
  }
  return acc;
}

Vector grid_eval(const GridFunction& f, std::span<const Partition> ps) {
  const MultiIndexSpace space = MultiIndexSpace::from_partitions(ps);
  Vector out(space.size());
  MultiIndex idx(space.dim(), 0);
  std::vector<double> point(space.dim());
  for (std::size_t k = 0; k < space.size(); ++k) {
    for (std::size_t a = 0; a < space.dim(); ++a) point[a] = ps[a][idx[a]];
    out[k] = f(point);
    space.increment(idx);
  }
  return out;
}

PolynomialNd::PolynomialNd(std::size_t dim, std::vector<MonomialTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
  if (dim_ == 0) throw InvalidInput("polynomial needs at least one symbol");
  for (const auto& t : terms_)
    if (t.exponents.size() != dim_) throw InvalidInput("monomial exponent vector has wrong length");
}

double PolynomialNd::constant_term() const {
  double c = 0.0;
  for (const auto& t : terms_) {
    bool constant = true;
    for (unsigned e : t.exponents) constant = constant && e == 0;
    if (constant) c += t.coeff;
  }
  return c;
}

DenseMatrix evaluate_polynomial(const PolynomialNd& poly, const MultiIndexSpace& space,
                                std::span<const DenseMatrix> z) {
  if (poly.dim() != space.dim() || z.size() != space.dim())
    throw InvalidInput("polynomial dimension does not match the grid");
  for (std::size_t a = 0; a < z.size(); ++a)
    if (z[a].rows() != space.extent(a) || !z[a].square()) throw InvalidInput("factor size does not match the grid");
  DenseMatrix sum(space.size(), space.size());
  for (const auto& t : poly.terms()) {
    std::vector<LiftedOperator::Factor> f(space.dim());
    for (std::size_t a = 0; a < space.dim(); ++a)
      if (t.exponents[a] > 0) f[a] = mat_pow(z[a], t.exponents[a]);
    sum += t.coeff * realize(LiftedOperator(space, std::move(f)));
  }
  return sum;
}

DenseMatrix evaluate_on_lifted_diff(const PolynomialNd& poly, std::span<const Partition> ps) {
  if (poly.dim() != ps.size()) throw InvalidInput("polynomial dimension does not match partitions");
  std::vector<DenseMatrix> z;
  for (const auto& p : ps) z.push_back(diff_matrix(p));
  return evaluate_polynomial(poly, MultiIndexSpace::from_partitions(ps), z);
}

bool full_rank_predicate(const PolynomialNd& poly, std::span<const Partition> ps) {
  if (poly.dim() != ps.size()) throw InvalidInput("polynomial dimension does not match partitions");
  return poly.constant_term() != 0.0;
}

}  // namespace liealg
