#include "liealg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "liealg/errors.hpp"

namespace liealg {

namespace {

void require_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidInput("matrix entries must be finite");
  }
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInput("matrix dimension mismatch");
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (!std::isfinite(fill)) throw InvalidInput("matrix entries must be finite");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw InvalidInput("entry count does not match rows x cols");
  require_finite(data_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(diag);
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

double norm_inf(const DenseMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (double x : a.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

double norm_one(const DenseMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double max_abs(const DenseMatrix& a) {
  double best = 0.0;
  for (double x : a.data()) best = std::max(best, std::abs(x));
  return best;
}

double norm_inf(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

void write_matrix(std::ostream& os, const DenseMatrix& a) {
  char buf[32];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
      if (j) os << ' ';
      os << buf;
    }
    os << '\n';
  }
}

std::string format_matrix(const DenseMatrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

DenseMatrix read_matrix(std::istream& is) {
  std::vector<double> entries;
  std::size_t rows = 0, cols = 0;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::size_t count = 0;
    double x;
    while (ls >> x) {
      entries.push_back(x);
      ++count;
    }
    if (count == 0) continue;
    if (rows == 0) cols = count;
    if (count != cols) throw InvalidInput("ragged matrix dump");
    ++rows;
  }
  return DenseMatrix(rows, cols, std::move(entries));
}

}  // namespace liealg
