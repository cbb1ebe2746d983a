#include "liealg/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "liealg/errors.hpp"
#include "liealg/lifted.hpp"
#include "liealg/linalg.hpp"
#include "liealg/operator1d.hpp"
#include "liealg/partition.hpp"

namespace liealg {

using std::numbers::pi;

ErrorMetrics error_metrics(std::span<const double> approx, std::span<const double> exact) {
  if (approx.size() != exact.size()) throw InvalidInput("error_metrics: length mismatch");
  ErrorMetrics m;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const double e = std::abs(approx[i] - exact[i]);
    m.sum += e;
    m.max = std::max(m.max, e);
  }
  m.avg = approx.empty() ? 0.0 : m.sum / static_cast<double>(approx.size());
  return m;
}

Bvp2Coefficients bvp2_coefficients(double x) {
  const double p = -2.0 / pi * x * x * x + 3.0 * x * x - pi * x;
  const double q = 2.0 * (-6.0 / pi * x * x + 6.0 * x - pi);
  const double r = -12.0 / pi * x + 6.0 + x * (2.0 - 2.0 / pi * x) * (x - pi / 2.0);
  const double s = 2.0 / pi * x - 2.0;
  return {p, q, r, s};
}

OperatorPoly1D bvp2_operator() {
  const Polynomial p({0.0, -pi, 3.0, -2.0 / pi});
  const Polynomial q({-2.0 * pi, 12.0, -12.0 / pi});
  const Polynomial r({6.0, -12.0 / pi - pi, 3.0, -2.0 / pi});
  return OperatorPoly1D({{p, 2}, {q, 1}, {r, 0}});
}

double bvp2_exact(double x) { return std::sin(x) + 2.0 * std::cos(x); }

double bvp2_reconstruct(double x, double v) {
  return (2.0 - 2.0 / pi * x) * (x * (x - pi / 2.0) * v + 1.0);
}

BvpReport solve_bvp2(std::size_t n, bool include_zero_endpoint) {
  if (n < 2 || n > 20) throw InvalidInput("solve_bvp2: n must lie in 2..20");
  const double left = include_zero_endpoint ? 0.0 : kBvp2LeftOffset;
  const Partition part = uniform_partition(left, pi / 2.0, n);

  const DenseMatrix m = apply_operator_poly(bvp2_operator(), part);

  Vector rhs(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) rhs[i] = bvp2_coefficients(part[i]).s;

  LuSolution sol;
  try {
    sol = lu_solve(m, rhs);
  } catch (const SingularSystem& e) {
    throw SingularSystem(e.pivot_index(), 0.0);
  }

  BvpReport rep;
  rep.method = include_zero_endpoint ? "lie-algebraic[0]" : "lie-algebraic";
  rep.sizes = {n};
  rep.nodes.assign(part.nodes().begin(), part.nodes().end());
  rep.v_sigma = std::move(sol.x);
  rep.rcond = sol.rcond;
  rep.u_sigma.resize(part.size());
  Vector exact(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) {
    rep.u_sigma[i] = bvp2_reconstruct(part[i], rep.v_sigma[i]);
    exact[i] = bvp2_exact(part[i]);
  }
  rep.error = error_metrics(rep.u_sigma, exact);
  return rep;
}

BvpReport combine_shooting(std::span<const double> x, std::span<const double> w, std::span<const double> v) {
  if (x.size() != w.size() || x.size() != v.size() || x.empty())
    throw InvalidInput("combine_shooting: grids must have equal, nonzero length");
  const double vend = v.back();
  if (std::abs(vend) < 1e-12) throw DegenerateShooting("degenerate shooting denominator: |v(pi/2)| < 1e-12");
  const double c = (1.0 - w.back()) / vend;
  BvpReport rep;
  rep.method = "shooting";
  rep.sizes = {x.size() - 1};
  rep.nodes.assign(x.begin(), x.end());
  rep.rcond = std::numeric_limits<double>::quiet_NaN();
  rep.u_sigma.resize(x.size());
  Vector exact(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    rep.u_sigma[i] = w[i] + c * v[i];
    exact[i] = bvp2_exact(x[i]);
  }
  rep.error = error_metrics(rep.u_sigma, exact);
  return rep;
}

namespace {

Vector march(std::size_t n, double h, double y0, double dy0) {
  Vector y(n + 1);
  y[0] = y0;
  y[1] = y0 + h * dy0 - h * h * y0 / 2.0;
  for (std::size_t i = 1; i < n; ++i) y[i + 1] = 2.0 * y[i] - y[i - 1] - h * h * y[i];
  return y;
}

}  // namespace

BvpReport shooting_bvp2(std::size_t n) {
  if (n < 2) throw InvalidInput("shooting_bvp2: n must be at least 2");
  const double h = (pi / 2.0) / static_cast<double>(n);
  Vector x(n + 1);
  for (std::size_t i = 0; i <= n; ++i) x[i] = static_cast<double>(i) * h;
  x[n] = pi / 2.0;
  const Vector w = march(n, h, 2.0, 0.0);
  const Vector v = march(n, h, 0.0, 1.0);
  return combine_shooting(x, w, v);
}

double hyperbolic_rhs(double x, double y) {
  const double phi = 1.0 - x * x - y * y;
  return 4.0 * (y * y - x * x) * std::sin(phi) - 2.0 * x * y * std::cos(phi);
}

double hyperbolic_exact(double x, double y) { return std::sin(1.0 - x * x - y * y); }

BvpReport solve_hyperbolic(std::size_t n1, std::size_t n2) {
  if (n1 < 4 || n1 > 20 || n2 < 4 || n2 > 20) throw InvalidInput("solve_hyperbolic: n1, n2 must lie in 4..20");
  const std::vector<Partition> ps{uniform_partition(-1.0, 1.0, n1), uniform_partition(-1.0, 1.0, n2)};

  const DenseMatrix zx = realize(lifted_diff(1, ps));
  const DenseMatrix zy = realize(lifted_diff(2, ps));
  const DenseMatrix xm = realize(lifted_mult(1, ps));
  const DenseMatrix ym = realize(lifted_mult(2, ps));
  const DenseMatrix id = realize(LiftedOperator::identity(MultiIndexSpace::from_partitions(ps)));

  const DenseMatrix phi = id - mat_mul(xm, xm) - mat_mul(ym, ym);
  const DenseMatrix inner = mat_mul(zx, zx) - mat_mul(zy, zy) + mat_mul(ym, zx);
  const DenseMatrix k = mat_mul(phi, inner) - 4.0 * mat_mul(xm, zx) + 4.0 * mat_mul(ym, zy) -
                        2.0 * mat_mul(xm, ym);

  const Vector f = grid_eval([](std::span<const double> pt) { return hyperbolic_rhs(pt[0], pt[1]); }, ps);
  const LuSolution sol = lu_solve(k, f);

  BvpReport rep;
  rep.method = "lie-algebraic-2d";
  rep.sizes = {n1, n2};
  rep.v_sigma = sol.x;
  rep.rcond = sol.rcond;
  rep.u_sigma = mat_vec(phi, sol.x);
  const Vector exact =
      grid_eval([](std::span<const double> pt) { return hyperbolic_exact(pt[0], pt[1]); }, ps);
  rep.error = error_metrics(rep.u_sigma, exact);
  return rep;
}

void write_surface(std::ostream& os, const BvpReport& report) {
  if (report.sizes.size() != 2) throw InvalidInput("write_surface: needs a 2-D report");
  const std::size_t n1 = report.sizes[0], n2 = report.sizes[1];
  const Partition px = uniform_partition(-1.0, 1.0, n1);
  const Partition py = uniform_partition(-1.0, 1.0, n2);
  char buf[96];
  for (std::size_t j = 0; j <= n2; ++j) {
    if (j) os << '\n';
    for (std::size_t i = 0; i <= n1; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", px[i], py[j], report.u_sigma[j * (n1 + 1) + i]);
      os << buf;
    }
  }
}

void write_table_header(std::ostream& os) { os << "method,n,E,Emax,Eavg,rcond\n"; }

void write_table_row(std::ostream& os, const BvpReport& report) {
  std::string sizes;
  for (std::size_t i = 0; i < report.sizes.size(); ++i) {
    if (i) sizes += 'x';
    sizes += std::to_string(report.sizes[i]);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.4e,%.4e,%.4e", report.error.sum, report.error.max, report.error.avg);
  os << report.method << ',' << sizes << ',' << buf << ',';
  if (std::isnan(report.rcond)) {
    os << "NA\n";
  } else {
    std::snprintf(buf, sizeof buf, "%.4e", report.rcond);
    os << buf << '\n';
  }
}

}  // namespace liealg
