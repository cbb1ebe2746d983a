#include <doctest.h>

#include <cmath>
#include <random>

#include "liealg/errors.hpp"
#include "liealg/lifted.hpp"
#include "liealg/linalg.hpp"
#include "liealg/operator1d.hpp"
#include "liealg/rank_audit.hpp"

using namespace liealg;

namespace {

double max_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

const std::vector<Partition> kUnitSquare{Partition({0, 1}), Partition({0, 1})};

}  // namespace

TEST_CASE("MultiIndexSpace") {
  CHECK_THROWS_AS(MultiIndexSpace({}), InvalidInput);
  CHECK_THROWS_AS(MultiIndexSpace({2, 0}), InvalidInput);
  const MultiIndexSpace s({2, 3});
  CHECK(s.size() == 12);
  CHECK(s.stride(0) == 1);
  CHECK(s.stride(1) == 3);
}

TEST_CASE("star and unstar") {
  const MultiIndexSpace s({2, 3});
  const std::size_t zero[] = {0, 0};
  CHECK(star(zero, s) == 1);
  const std::size_t first[] = {2, 0};
  CHECK(star(first, s) == 3);
  const std::size_t i12[] = {1, 2};
  CHECK(star(i12, s) == 8);
  CHECK(unstar(1, s) == MultiIndex{0, 0});
  CHECK(unstar(8, s) == MultiIndex{1, 2});

  const MultiIndexSpace s3({4, 1, 2});
  const std::size_t n1[] = {4, 0, 0};
  CHECK(star(n1, s3) == 5);

  const std::size_t bad[] = {3, 0};
  CHECK_THROWS_AS(star(bad, s), InvalidInput);
  const std::size_t short_idx[] = {1};
  CHECK_THROWS_AS(star(short_idx, s), InvalidInput);
  CHECK_THROWS_AS(unstar(0, s), InvalidInput);
  CHECK_THROWS_AS(unstar(13, s), InvalidInput);
}

TEST_CASE("star round trip and increment order") {
  const MultiIndexSpace s({2, 3, 1});
  MultiIndex idx(3, 0);
  for (std::size_t k = 1; k <= s.size(); ++k) {
    CHECK(s.star(idx) == k);
    CHECK(s.unstar(k) == idx);
    CHECK(s.unstar(s.star(idx)) == idx);
    CHECK(s.increment(idx) == (k < s.size()));
  }
  CHECK(idx == MultiIndex{0, 0, 0});
}

TEST_CASE("lifted_diff and lifted_mult abstract forms") {
  const std::vector<Partition> ps{Partition({0, 1, 2}), Partition({-1, 0.5})};
  const auto w1 = lifted_diff(1, ps);
  REQUIRE(w1.factors().size() == 2);
  CHECK(*w1.factors()[0] == diff_matrix(ps[0]));
  CHECK_FALSE(w1.factors()[1].has_value());
  const auto w2 = lifted_diff(2, ps);
  CHECK_FALSE(w2.factors()[0].has_value());
  CHECK(*w2.factors()[1] == diff_matrix(ps[1]));
  CHECK(*lifted_mult(1, ps).factors()[0] == mult_matrix(ps[0]));
  CHECK(*lifted_mult(2, ps).factors()[1] == mult_matrix(ps[1]));
  CHECK_THROWS_AS(lifted_diff(0, ps), InvalidInput);
  CHECK_THROWS_AS(lifted_diff(3, ps), InvalidInput);

  const std::vector<Partition> one{Partition({0, 1, 3})};
  CHECK(realize(lifted_diff(1, one)) == diff_matrix(one[0]));
}

TEST_CASE("realize examples") {
  const DenseMatrix w1 = realize(lifted_diff(1, kUnitSquare));
  CHECK(w1 == DenseMatrix{{-1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, -1, 1}});
  const DenseMatrix w2 = realize(lifted_diff(2, kUnitSquare));
  CHECK(w2 == DenseMatrix{{-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 1, 0}, {0, -1, 0, 1}});
  CHECK(realize(LiftedOperator::identity(MultiIndexSpace({2, 3}))) == DenseMatrix::identity(12));
}

TEST_CASE("realize equals reversed Kronecker product") {
  const std::vector<Partition> ps{Partition({0, 0.3, 1}), Partition({-1, 0, 0.5, 2}), Partition({1, 2})};
  for (std::size_t a = 1; a <= 3; ++a) {
    CHECK(realize(lifted_diff(a, ps)) == realize_kron(lifted_diff(a, ps)));
    CHECK(realize(lifted_mult(a, ps)) == realize_kron(lifted_mult(a, ps)));
  }
  const DenseMatrix z1 = diff_matrix(ps[0]), z2 = diff_matrix(ps[1]), z3 = diff_matrix(ps[2]);
  const LiftedOperator all(MultiIndexSpace::from_partitions(ps), {z1, z2, z3});
  CHECK(max_diff(realize(all), kron(z3, kron(z2, z1))) <= 1e-14);
  // Paper-style ordering: x-derivative acts on the fastest index.
  CHECK(realize(lifted_diff(1, ps)) ==
        kron(DenseMatrix::identity(2), kron(DenseMatrix::identity(4), z1)));
}

TEST_CASE("lifted_compose") {
  const std::vector<Partition> ps{Partition({0, 0.5, 1}), Partition({-1, 0.2, 1})};
  const auto a = lifted_compose(lifted_mult(1, ps), lifted_diff(1, ps));
  CHECK(max_diff(realize(a), mat_mul(realize(lifted_mult(1, ps)), realize(lifted_diff(1, ps)))) <= 1e-14);

  const DenseMatrix w12 = realize(lifted_compose(lifted_diff(1, ps), lifted_diff(2, ps)));
  const DenseMatrix w21 = realize(lifted_compose(lifted_diff(2, ps), lifted_diff(1, ps)));
  CHECK(w12 == w21);
  const DenseMatrix m1 = realize(lifted_diff(1, ps)), m2 = realize(lifted_diff(2, ps));
  CHECK(norm_inf(mat_mul(m1, m2) - mat_mul(m2, m1)) == 0.0);

  const std::vector<Partition> other{Partition({0, 1}), Partition({0, 1})};
  CHECK_THROWS_AS(lifted_compose(lifted_diff(1, ps), lifted_diff(1, other)), InvalidInput);
  CHECK(lifted_power(lifted_diff(1, ps), 0).is_identity());
}

TEST_CASE("grid_eval") {
  for (double v : grid_eval([](std::span<const double>) { return 1.0; }, kUnitSquare)) CHECK(v == 1.0);
  CHECK(grid_eval([](std::span<const double> p) { return p[0]; }, kUnitSquare) == Vector{0, 1, 0, 1});
  CHECK(grid_eval([](std::span<const double> p) { return p[1]; }, kUnitSquare) == Vector{0, 0, 1, 1});
}

TEST_CASE("lifted derivative is exact on tensor polynomials") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n1 = 1; n1 <= 4; ++n1)
    for (std::size_t n2 = 1; n2 <= 4; ++n2) {
      const std::vector<Partition> ps{jittered_partition(rng, n1, -1, 1), jittered_partition(rng, n2, 0, 2)};
      // q = sum c_ij x^i y^j with i <= n1, j <= n2.
      std::vector<double> c((n1 + 1) * (n2 + 1));
      for (double& x : c) x = u(rng);
      auto q = [&](double x, double y, int dx, int dy) {
        double s = 0.0;
        for (std::size_t j = 0; j <= n2; ++j)
          for (std::size_t i = 0; i <= n1; ++i) {
            double tx = dx ? (i ? i * std::pow(x, i - 1.0) : 0.0) : std::pow(x, static_cast<double>(i));
            double ty = dy ? (j ? j * std::pow(y, j - 1.0) : 0.0) : std::pow(y, static_cast<double>(j));
            s += c[j * (n1 + 1) + i] * tx * ty;
          }
        return s;
      };
      const Vector qs = grid_eval([&](std::span<const double> p) { return q(p[0], p[1], 0, 0); }, ps);
      const Vector qx = grid_eval([&](std::span<const double> p) { return q(p[0], p[1], 1, 0); }, ps);
      const Vector qy = grid_eval([&](std::span<const double> p) { return q(p[0], p[1], 0, 1); }, ps);
      const Vector gx = mat_vec(realize(lifted_diff(1, ps)), qs);
      const Vector gy = mat_vec(realize(lifted_diff(2, ps)), qs);
      for (std::size_t k = 0; k < qs.size(); ++k) {
        CHECK(std::abs(gx[k] - qx[k]) <= 1e-10 * std::max(1.0, norm_inf(std::span<const double>(qx))));
        CHECK(std::abs(gy[k] - qy[k]) <= 1e-10 * std::max(1.0, norm_inf(std::span<const double>(qy))));
      }
    }
}

TEST_CASE("lifted power ranks up to dims (4,4,3)") {
  std::mt19937_64 rng(47);
  for (std::size_t n1 = 1; n1 <= 4; ++n1)
    for (std::size_t n2 = 1; n2 <= 4; ++n2)
      for (std::size_t n3 = 1; n3 <= 3; ++n3) {
        const std::vector<Partition> ps{jittered_partition(rng, n1), jittered_partition(rng, n2),
                                        jittered_partition(rng, n3)};
        const std::size_t dims[] = {n1, n2, n3};
        const std::size_t big_n = (n1 + 1) * (n2 + 1) * (n3 + 1);
        for (std::size_t a = 1; a <= 3; ++a) {
          const DenseMatrix w = realize(lifted_diff(a, ps));
          const std::size_t na = dims[a - 1];
          for (unsigned k = 0; k <= na; ++k) {
            const std::size_t want = (na + 1 - k) * big_n / (na + 1);
            CHECK(numerical_rank(mat_pow(w, k)) == want);
          }
          CHECK(max_abs(mat_pow(w, static_cast<unsigned>(na + 1))) <=
                1e-8 * std::pow(norm_inf(w), static_cast<double>(na + 1)));
        }
      }
}

TEST_CASE("PolynomialNd and full_rank_predicate") {
  const std::vector<Partition> ps{Partition({0, 1, 2, 3}), Partition({0, 1, 2, 3})};
  CHECK(full_rank_predicate(PolynomialNd(2, {MonomialTerm{1, {0, 0}}, MonomialTerm{1, {1, 0}}}), ps));
  CHECK_FALSE(full_rank_predicate(PolynomialNd(2, {MonomialTerm{1, {1, 0}}}), ps));
  const PolynomialNd five(2, {MonomialTerm{5, {0, 0}}, MonomialTerm{1, {1, 1}}});
  CHECK(full_rank_predicate(five, ps));
  CHECK(numerical_rank(evaluate_on_lifted_diff(five, ps)) == 16);
  CHECK_THROWS_AS(PolynomialNd(2, {MonomialTerm{1, {1}}}), InvalidInput);
  CHECK_THROWS_AS(PolynomialNd(0, {}), InvalidInput);
}
