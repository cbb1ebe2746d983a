#include "liealg/interp.hpp"

#include <string>

#include "liealg/errors.hpp"
#include "liealg/multi_index.hpp"

namespace liealg {

LagrangeBasis::LagrangeBasis(Partition p) : partition_(std::move(p)), weights_(pi_weights(partition_)) {}

double LagrangeBasis::eval(std::size_t k, double x) const {
  const auto nodes = partition_.nodes();
  if (k >= nodes.size())
    throw InvalidInput("lagrange_eval: index " + std::to_string(k) + " out of range");
  double num = 1.0;
  for (std::size_t m = 0; m < nodes.size(); ++m)
    if (m != k) num *= x - nodes[m];
  return num / weights_.values[k];
}

double LagrangeBasis::interpolate(std::span<const double> values, double x) const {
  if (values.size() != partition_.size())
    throw InvalidInput("interpolate_1d: expected " + std::to_string(partition_.size()) +
                       " values, got " + std::to_string(values.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * eval(i, x);
  return s;
}

double lagrange_eval(const Partition& p, std::size_t k, double x) {
  return LagrangeBasis(p).eval(k, x);
}

double interpolate_1d(const Partition& p, std::span<const double> values, double x) {
  return LagrangeBasis(p).interpolate(values, x);
}

double tensor_interpolate(std::span<const Partition> ps, std::span<const double> values,
                          std::span<const double> point) {
  const MultiIndexSpace space = MultiIndexSpace::from_partitions(ps);
  if (values.size() != space.size())
    throw InvalidInput("tensor_interpolate: values length does not match grid size");
  if (point.size() != space.dim())
    throw InvalidInput("tensor_interpolate: point dimension mismatch");

  // Per-dimension basis values, then sum over the grid in star order.
  std::vector<std::vector<double>> basis(space.dim());
  for (std::size_t a = 0; a < space.dim(); ++a) {
    const LagrangeBasis lb(ps[a]);
    basis[a].resize(ps[a].size());
    for (std::size_t i = 0; i < ps[a].size(); ++i) basis[a][i] = lb.eval(i, point[a]);
  }
  double s = 0.0;
  MultiIndex idx(space.dim(), 0);
  for (std::size_t lin = 0; lin < space.size(); ++lin) {
    double w = values[lin];
    for (std::size_t a = 0; a < space.dim(); ++a) w *= basis[a][idx[a]];
    s += w;
    space.increment(idx);
  }
  return s;
}

}  // namespace liealg
