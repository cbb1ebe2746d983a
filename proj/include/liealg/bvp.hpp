#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "liealg/matrix.hpp"
#include "liealg/operator1d.hpp"

namespace liealg {

struct ErrorMetrics {
  double sum = 0.0;  // E
  double max = 0.0;  // E_max
  double avg = 0.0;  // E_a = E / node count
};

/// Sum, max and mean of |approx - exact|.
ErrorMetrics error_metrics(std::span<const double> approx, std::span<const double> exact);

struct BvpReport {
  std::string method;
  std::vector<std::size_t> sizes;  // {n} or {n1, n2}
  Vector nodes;                    // 1-D grid (empty for 2-D runs)
  Vector v_sigma;                  // substituted unknown at the nodes
  Vector u_sigma;                  // reconstructed solution at the nodes
  ErrorMetrics error;
  double rcond = 0.0;              // NaN when no linear solve was involved
};

// u'' + u = 0 on [0, pi/2], u(0) = 2, u(pi/2) = 1, exact u = sin x + 2 cos x.
// Substituting u = (2 - 2x/pi)(x (x - pi/2) v + 1) gives p v'' + q v' + r v = s.

struct Bvp2Coefficients {
  double p, q, r, s;
};

Bvp2Coefficients bvp2_coefficients(double x);
/// p(x) d^2/dx^2 + q(x) d/dx + r(x) with the coefficients in monomial form.
OperatorPoly1D bvp2_operator();
double bvp2_exact(double x);
/// Reconstructs u from v at x.
double bvp2_reconstruct(double x, double v);

inline constexpr double kBvp2LeftOffset = 0.001;

/// Collocation on x_i = x_0 + (i/n)(pi/2 - x_0) with x_0 = 0.001, or x_0 = 0
/// when include_zero_endpoint is set. Requires 2 <= n <= 20.
BvpReport solve_bvp2(std::size_t n, bool include_zero_endpoint = false);

/// u = w + (1 - w(pi/2)) / v(pi/2) * v on a shared grid, errors against the
/// exact solution.
BvpReport combine_shooting(std::span<const double> x, std::span<const double> w, std::span<const double> v);

/// Shooting baseline: w'' = -w (w(0)=2, w'(0)=0) and v'' = -v (v(0)=0,
/// v'(0)=1) marched on n uniform subintervals of [0, pi/2] with the
/// second-order central scheme y_{i+1} = 2y_i - y_{i-1} - h^2 y_i, started
/// by y_1 = y_0 + h y'_0 - h^2 y_0 / 2.
BvpReport shooting_bvp2(std::size_t n);

// u_xx - u_yy + y u_x = f on the unit disk, u = 0 on its boundary, exact
// u = sin(1 - x^2 - y^2). Substitution u = (1 - x^2 - y^2) v.

double hyperbolic_rhs(double x, double y);
double hyperbolic_exact(double x, double y);

/// Collocation on uniform partitions of [-1, 1]^2 covering the disk; errors
/// over every grid node. Requires 4 <= n1, n2 <= 20.
BvpReport solve_hyperbolic(std::size_t n1, std::size_t n2);

/// Gridded x y u triples (x fastest), blank line between constant-y blocks.
void write_surface(std::ostream& os, const BvpReport& report);

/// Header `method,n,E,Emax,Eavg,rcond`; numbers in %.4e.
void write_table_header(std::ostream& os);
void write_table_row(std::ostream& os, const BvpReport& report);

}  // namespace liealg
