#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "liealg/matrix.hpp"

namespace liealg {

/// Strictly increasing nodes a = x_0 < x_1 < ... < x_n = b with n >= 1.
class Partition {
 public:
  explicit Partition(std::vector<double> nodes);

  double a() const noexcept { return nodes_.front(); }
  double b() const noexcept { return nodes_.back(); }
  /// Number of subintervals; the partition holds n() + 1 nodes.
  std::size_t n() const noexcept { return nodes_.size() - 1; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<double> nodes_;
};

/// pi_k = prod_{m != k} (x_k - x_m).
struct PiWeights {
  Vector values;
};

Partition uniform_partition(double a, double b, std::size_t n);
PiWeights pi_weights(const Partition& p);

/// Plain text, one node per line at full precision.
void write_partition(std::ostream& os, const Partition& p);
Partition read_partition(std::istream& is);

}  // namespace liealg
