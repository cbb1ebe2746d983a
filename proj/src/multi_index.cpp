#include "liealg/multi_index.hpp"

#include <string>

#include "liealg/errors.hpp"

namespace liealg {

MultiIndexSpace::MultiIndexSpace(std::vector<std::size_t> maxima) : maxima_(std::move(maxima)) {
  if (maxima_.empty()) throw InvalidInput("multi-index space needs d >= 1");
  strides_.resize(maxima_.size());
  for (std::size_t a = 0; a < maxima_.size(); ++a) {
    if (maxima_[a] < 1) throw InvalidInput("multi-index space needs every n_alpha >= 1");
    strides_[a] = size_;
    size_ *= maxima_[a] + 1;
  }
}

MultiIndexSpace MultiIndexSpace::from_partitions(std::span<const Partition> ps) {
  std::vector<std::size_t> maxima;
  maxima.reserve(ps.size());
  for (const auto& p : ps) maxima.push_back(p.n());
  return MultiIndexSpace(std::move(maxima));
}

std::size_t MultiIndexSpace::star(std::span<const std::size_t> idx) const {
  if (idx.size() != dim()) throw InvalidInput("star: multi-index has wrong dimension");
  std::size_t lin = 0;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (idx[a] > maxima_[a])
      throw InvalidInput("star: component " + std::to_string(a + 1) + " out of range");
    lin += idx[a] * strides_[a];
  }
  return lin + 1;
}

MultiIndex MultiIndexSpace::unstar(std::size_t linear) const {
  if (linear < 1 || linear > size_)
    throw InvalidInput("unstar: linear index " + std::to_string(linear) + " out of range");
  MultiIndex idx(dim());
  std::size_t rest = linear - 1;
  for (std::size_t a = 0; a < dim(); ++a) {
    idx[a] = rest % (maxima_[a] + 1);
    rest /= maxima_[a] + 1;
  }
  return idx;
}

bool MultiIndexSpace::increment(MultiIndex& idx) const {
  for (std::size_t a = 0; a < dim(); ++a) {
    if (idx[a] < maxima_[a]) {
      ++idx[a];
      return true;
    }
    idx[a] = 0;
  }
  return false;
}

}  // namespace liealg
