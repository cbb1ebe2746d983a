#include "liealg/operator1d.hpp"

#include <algorithm>
#include <set>

#include "liealg/errors.hpp"
#include "liealg/linalg.hpp"

namespace liealg {

bool Polynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

OperatorPoly1D::OperatorPoly1D(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidInput("operator polynomial needs at least one term");
  std::set<unsigned> orders;
  for (const auto& t : terms_) {
    if (!orders.insert(t.order).second) throw InvalidInput("operator polynomial orders must be distinct");
    if (t.coeff.is_zero()) throw InvalidInput("operator polynomial coefficient is identically zero");
  }
}

DenseMatrix diff_matrix(const Partition& p) {
  const auto x = p.nodes();
  const std::size_t n = x.size();
  const Vector pi = pi_weights(p).values;
  DenseMatrix z(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      diag += 1.0 / (x[j] - x[m]);
      z(j, m) = (pi[j] / pi[m]) / (x[j] - x[m]);
    }
    z(j, j) = diag;
  }
  return z;
}

DenseMatrix balanced_diff_matrix(const Partition& p) {
  const auto x = p.nodes();
  const std::size_t n = x.size();
  DenseMatrix z(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      diag += 1.0 / (x[j] - x[m]);
      z(j, m) = 1.0 / (x[j] - x[m]);
    }
    z(j, j) = diag;
  }
  return z;
}

DenseMatrix mult_matrix(const Partition& p) { return DenseMatrix::diagonal(p.nodes()); }

DenseMatrix apply_operator_poly(const OperatorPoly1D& op, const Partition& p) {
  const std::size_t n = p.size();
  const DenseMatrix z = diff_matrix(p);
  unsigned max_order = 0;
  for (const auto& t : op.terms()) max_order = std::max(max_order, t.order);

  std::vector<DenseMatrix> powers{DenseMatrix::identity(n)};
  for (unsigned k = 1; k <= max_order; ++k) powers.push_back(mat_mul(powers.back(), z));

  DenseMatrix result(n, n);
  for (const auto& t : op.terms()) {
    const DenseMatrix& zk = powers[t.order];
    for (std::size_t i = 0; i < n; ++i) {
      const double c = t.coeff(p[i]);
      for (std::size_t j = 0; j < n; ++j) result(i, j) += c * zk(i, j);
    }
  }
  return result;
}

Vector differentiate_values(const Partition& p, std::span<const double> values) {
  if (values.size() != p.size()) throw InvalidInput("differentiate_values: length mismatch");
  return mat_vec(diff_matrix(p), values);
}

}  // namespace liealg
