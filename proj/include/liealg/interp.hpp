#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liealg/partition.hpp"

namespace liealg {

/// Standard Lagrange basis on a partition, evaluated by the direct product
/// formula with precomputed pi-weights. Points outside [a, b] are allowed;
/// the basis is a global polynomial.
class LagrangeBasis {
 public:
  explicit LagrangeBasis(Partition p);

  const Partition& partition() const noexcept { return partition_; }
  const PiWeights& weights() const noexcept { return weights_; }

  double eval(std::size_t k, double x) const;
  /// Interpolant sum_i values[i] l_i(x).
  double interpolate(std::span<const double> values, double x) const;

 private:
  Partition partition_;
  PiWeights weights_;
};

double lagrange_eval(const Partition& p, std::size_t k, double x);
double interpolate_1d(const Partition& p, std::span<const double> values, double x);

/// Tensor-product interpolation. values are ordered by the star map
/// (dimension 1 varies fastest).
double tensor_interpolate(std::span<const Partition> ps, std::span<const double> values,
                          std::span<const double> point);

}  // namespace liealg
