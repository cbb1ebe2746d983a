#include "liealg/partition.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "liealg/errors.hpp"

namespace liealg {

Partition::Partition(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw InvalidInput("partition needs at least two nodes");
  for (double x : nodes_)
    if (!std::isfinite(x)) throw InvalidInput("partition nodes must be finite");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i] > nodes_[i - 1]))
      throw InvalidInput("partition nodes must be strictly increasing (index " +
                         std::to_string(i) + ")");
}

Partition uniform_partition(double a, double b, std::size_t n) {
  if (!(a < b)) throw InvalidInput("uniform_partition: requires a < b");
  if (n == 0) throw InvalidInput("uniform_partition: requires n >= 1");
  std::vector<double> x(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    x[i] = a + (static_cast<double>(i) / static_cast<double>(n)) * (b - a);
  x[n] = b;
  return Partition(std::move(x));
}

PiWeights pi_weights(const Partition& p) {
  const auto x = p.nodes();
  PiWeights w{Vector(x.size(), 1.0)};
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t m = 0; m < x.size(); ++m)
      if (m != k) w.values[k] *= x[k] - x[m];
  return w;
}

void write_partition(std::ostream& os, const Partition& p) {
  char buf[32];
  for (double x : p.nodes()) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf << '\n';
  }
}

Partition read_partition(std::istream& is) {
  std::vector<double> nodes;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(line.substr(first), &used);
    } catch (const std::exception&) {
      throw InvalidInput("partition file: cannot parse '" + line + "'");
    }
    const std::string rest = line.substr(first + used);
    const auto tail = rest.find_first_not_of(" \t\r");
    if (tail != std::string::npos && rest[tail] != '#')
      throw InvalidInput("partition file: trailing text in '" + line + "'");
    nodes.push_back(x);
  }
  return Partition(std::move(nodes));
}

}  // namespace liealg
