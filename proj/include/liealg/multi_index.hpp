#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liealg/partition.hpp"

namespace liealg {

using MultiIndex = std::vector<std::size_t>;

/// Tensor grid index set: component alpha ranges over 0..n_alpha.
/// Linear indices follow the star map, 1-based, with dimension 1 varying
/// fastest:  star(i) = i_d (n_1+1)...(n_{d-1}+1) + ... + i_2 (n_1+1) + i_1 + 1.
class MultiIndexSpace {
 public:
  /// maxima[alpha] = n_alpha >= 1.
  explicit MultiIndexSpace(std::vector<std::size_t> maxima);
  static MultiIndexSpace from_partitions(std::span<const Partition> ps);

  std::size_t dim() const noexcept { return maxima_.size(); }
  std::size_t max_index(std::size_t alpha) const { return maxima_[alpha]; }
  std::size_t extent(std::size_t alpha) const { return maxima_[alpha] + 1; }
  std::size_t size() const noexcept { return size_; }
  std::span<const std::size_t> maxima() const noexcept { return maxima_; }
  /// Linear distance between neighbours along alpha: (n_1+1)...(n_{alpha-1}+1).
  std::size_t stride(std::size_t alpha) const { return strides_[alpha]; }

  std::size_t star(std::span<const std::size_t> idx) const;
  MultiIndex unstar(std::size_t linear) const;

  /// Advance idx to the next multi-index in star order; returns false after
  /// the last one (idx wraps to all zeros).
  bool increment(MultiIndex& idx) const;

  friend bool operator==(const MultiIndexSpace&, const MultiIndexSpace&) = default;

 private:
  std::vector<std::size_t> maxima_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

inline std::size_t star(std::span<const std::size_t> idx, const MultiIndexSpace& space) {
  return space.star(idx);
}
inline MultiIndex unstar(std::size_t linear, const MultiIndexSpace& space) {
  return space.unstar(linear);
}

}  // namespace liealg
