#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liealg/lifted.hpp"
#include "liealg/linalg.hpp"
#include "liealg/matrix.hpp"
#include "liealg/partition.hpp"

namespace liealg {

using AuditValue = std::variant<std::int64_t, bool>;

struct AuditReport {
  std::string case_name;
  AuditValue expected;
  AuditValue observed;
  double tolerance = 0.0;
  bool pass = false;
};

AuditReport make_report(std::string name, AuditValue expected, AuditValue observed, double tolerance);

/// Relative tolerance for declaring a matrix power numerically zero:
/// ||H^k||_inf <= tol * ||H||_inf^k.
inline constexpr double kNilpotencyTol = 1e-8;
inline constexpr std::size_t kMaxAuditNodes = 13;  // n <= 12
inline constexpr std::size_t kMaxAuditGrid = 256;

bool power_vanishes(const DenseMatrix& h, unsigned k, double tol = kNilpotencyTol);

/// Rank of h^k. Powers at or beyond the matrix dimension are decided by the
/// norm-decay test, since every nilpotent matrix vanishes there.
std::size_t power_rank(const DenseMatrix& h, unsigned k, double rel_tol = kDefaultRankTol);

/// rank Z = n (taken on the pi-balanced similar matrix) and Z^{n+1} = 0.
std::pair<AuditReport, AuditReport> audit_lemma1(const Partition& p, double rel_tol = kDefaultRankTol,
                                                 const std::string& label = "lemma1");

/// rank H^k = n+1-k for k = 0..n+1. H must have rank n and H^{n+1} = 0.
std::vector<AuditReport> audit_rank_ladder(const DenseMatrix& h, double rel_tol = kDefaultRankTol,
                                           const std::string& label = "ladder");

/// rank(a_k B^k + ... + a_m B^m) == rank B^k for nilpotent B and a_k != 0.
/// coeffs holds a_k, ..., a_m.
AuditReport audit_theorem1(const DenseMatrix& b, std::span<const double> coeffs, unsigned k,
                           double rel_tol = kDefaultRankTol, const std::string& label = "theorem1");

/// The same check for B = Z of a partition. The matrix polynomial is taken in
/// the pi-balanced Z scaled to unit inf-norm and compared with n+1-k.
AuditReport audit_theorem3(const Partition& p, std::span<const double> coeffs, unsigned k,
                           double rel_tol = kDefaultRankTol, const std::string& label = "theorem3");

/// det(I_2 + diag(a, b) * [[-2,-1],[4,2]]); equals 1 + 2(b - a).
double counterexample_det(double a, double b);

/// Constant-term predicate versus numerical full rank of P(W^(1..d)).
AuditReport audit_mdrank(const PolynomialNd& poly, std::span<const Partition> ps,
                         double rel_tol = kDefaultRankTol, const std::string& label = "mdrank");

/// rank [W^(alpha)]^k == (n_alpha+1-k) N / (n_alpha+1); alpha is 1-based.
AuditReport audit_lifted_power_rank(std::span<const Partition> ps, std::size_t alpha, unsigned k,
                                    double rel_tol = kDefaultRankTol);
/// rank [W^(alpha)]^k [W^(beta)]^l for alpha != beta.
AuditReport audit_lifted_mixed_rank(std::span<const Partition> ps, std::size_t alpha, unsigned k,
                                    std::size_t beta, unsigned l, double rel_tol = kDefaultRankTol);

// Random partitions of [a, b] with fixed endpoints.

/// Sorted i.i.d. uniform interior nodes; draws with an adjacent gap below
/// 1e-3 (b - a) are rejected.
Partition random_partition(std::mt19937_64& rng, std::size_t n, double a = 0.0, double b = 1.0);
/// Uniform nodes each shifted by up to `jitter` cells.
Partition jittered_partition(std::mt19937_64& rng, std::size_t n, double a = 0.0, double b = 1.0,
                             double jitter = 0.4);

struct AuditSuiteConfig {
  std::uint64_t seed = 42;
  double rel_tol = kDefaultRankTol;
};

std::vector<AuditReport> lemma1_suite(const AuditSuiteConfig& cfg, std::size_t count = 100);
std::vector<AuditReport> ladder_suite(const AuditSuiteConfig& cfg, std::size_t random_count = 20);
std::vector<AuditReport> theorem_suite(const AuditSuiteConfig& cfg, std::size_t count = 50);
std::vector<AuditReport> counterexample_suite();
/// d = 2, all dims up to (max_n, max_n): powers, mixed products, nilpotency.
std::vector<AuditReport> lifted_rank_suite(const AuditSuiteConfig& cfg, std::size_t max_n = 4);
/// Every polynomial in two symbols with at most three monomials of exponents
/// <= 2 each, on all dims up to (max_n, max_n).
std::vector<AuditReport> mdrank_suite(const AuditSuiteConfig& cfg, std::size_t max_n = 3);

std::vector<AuditReport> run_audit_suite(const AuditSuiteConfig& cfg);

void write_audit_csv(std::ostream& os, std::span<const AuditReport> reports);

}  // namespace liealg
