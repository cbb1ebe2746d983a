#include "liealg/rank_audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "liealg/errors.hpp"
#include "liealg/operator1d.hpp"

namespace liealg {

AuditReport make_report(std::string name, AuditValue expected, AuditValue observed, double tolerance) {
  const bool pass = expected == observed;
  return AuditReport{std::move(name), expected, observed, tolerance, pass};
}

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string fmt(const char* f, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

DenseMatrix poly_of(const DenseMatrix& b, std::span<const double> coeffs, unsigned k) {
  DenseMatrix power = mat_pow(b, k);
  DenseMatrix sum(b.rows(), b.cols());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) power = mat_mul(power, b);
    sum += coeffs[i] * power;
  }
  return sum;
}

// Rank of a polynomial in a nilpotent matrix whose lowest power is k.
std::size_t poly_rank(const DenseMatrix& b, std::span<const double> coeffs, unsigned k, double rel_tol) {
  const DenseMatrix pb = poly_of(b, coeffs, k);
  if (k >= b.rows()) {
    double scale = 0.0;
    const double nb = norm_inf(b);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      scale += std::abs(coeffs[i]) * std::pow(nb, static_cast<double>(k + i));
    if (norm_inf(pb) <= kNilpotencyTol * scale) return 0;
  }
  return numerical_rank(pb, rel_tol);
}

void require_audit_size(const Partition& p) {
  if (p.size() > kMaxAuditNodes)
    throw GuardError("conditioning guard: n = " + std::to_string(p.n()) +
                     " exceeds 12; floating-point rank audits are unreliable there and exact "
                     "rational verification is out of scope");
}

}  // namespace

bool power_vanishes(const DenseMatrix& h, unsigned k, double tol) {
  const double scale = std::pow(norm_inf(h), static_cast<double>(k));
  return norm_inf(mat_pow(h, k)) <= tol * scale;
}

std::size_t power_rank(const DenseMatrix& h, unsigned k, double rel_tol) {
  if (k >= h.rows() && power_vanishes(h, k)) return 0;
  return numerical_rank(mat_pow(h, k), rel_tol);
}

std::pair<AuditReport, AuditReport> audit_lemma1(const Partition& p, double rel_tol,
                                                 const std::string& label) {
  require_audit_size(p);
  const std::size_t n = p.n();
  const std::size_t rank = numerical_rank(balanced_diff_matrix(p), rel_tol);
  const bool nilpotent = power_vanishes(diff_matrix(p), static_cast<unsigned>(n + 1));
  return {make_report(label + "/rank", as_int(n), as_int(rank), rel_tol),
          make_report(label + "/nilpotent", true, nilpotent, kNilpotencyTol)};
}

std::vector<AuditReport> audit_rank_ladder(const DenseMatrix& h, double rel_tol, const std::string& label) {
  if (!h.square() || h.rows() < 1) throw InvalidInput("rank ladder: H must be square");
  const std::size_t dim = h.rows();
  const std::size_t n = dim - 1;
  if (numerical_rank(h, rel_tol) != n)
    throw InvalidInput("rank ladder: hypothesis rank H = n fails");
  if (!power_vanishes(h, static_cast<unsigned>(dim)))
    throw InvalidInput("rank ladder: hypothesis H^{n+1} = 0 fails");
  std::vector<AuditReport> out;
  for (std::size_t k = 0; k <= dim; ++k) {
    const std::size_t r = power_rank(h, static_cast<unsigned>(k), rel_tol);
    out.push_back(make_report(label + "/k=" + std::to_string(k), as_int(dim - k), as_int(r), rel_tol));
  }
  return out;
}

AuditReport audit_theorem1(const DenseMatrix& b, std::span<const double> coeffs, unsigned k,
                           double rel_tol, const std::string& label) {
  if (!b.square()) throw InvalidInput("theorem1: B must be square");
  if (coeffs.empty() || coeffs.front() == 0.0) throw InvalidInput("theorem1: leading coefficient a_k must be nonzero");
  if (!power_vanishes(b, static_cast<unsigned>(b.rows())))
    throw InvalidInput("theorem1: B is not nilpotent");
  const std::size_t expected = power_rank(b, k, rel_tol);
  const std::size_t observed = poly_rank(b, coeffs, k, rel_tol);
  return make_report(label, as_int(expected), as_int(observed), rel_tol);
}

AuditReport audit_theorem3(const Partition& p, std::span<const double> coeffs, unsigned k,
                           double rel_tol, const std::string& label) {
  require_audit_size(p);
  if (coeffs.empty() || coeffs.front() == 0.0) throw InvalidInput("theorem3: leading coefficient a_k must be nonzero");
  DenseMatrix b = balanced_diff_matrix(p);
  b *= 1.0 / norm_inf(b);
  const std::size_t dim = p.size();
  const std::size_t expected = k <= dim ? dim - k : 0;
  return make_report(label, as_int(expected), as_int(poly_rank(b, coeffs, k, rel_tol)), rel_tol);
}

double counterexample_det(double a, double b) {
  const DenseMatrix nil{{-2.0, -1.0}, {4.0, 2.0}};
  const double diag[] = {a, b};
  return determinant(DenseMatrix::identity(2) + mat_mul(DenseMatrix::diagonal(diag), nil));
}

AuditReport audit_mdrank(const PolynomialNd& poly, std::span<const Partition> ps, double rel_tol,
                         const std::string& label) {
  const MultiIndexSpace space = MultiIndexSpace::from_partitions(ps);
  if (space.size() > kMaxAuditGrid)
    throw GuardError("size guard: N = " + std::to_string(space.size()) + " exceeds 256");
  const bool predicate = full_rank_predicate(poly, ps);
  // Rank is taken with each W^(alpha) replaced by its pi-balanced form scaled
  // to unit norm. That is a similarity plus a rescaling of the symbols, which
  // keeps the constant term and therefore the rank.
  if (poly.dim() != ps.size()) throw InvalidInput("polynomial dimension does not match partitions");
  std::vector<DenseMatrix> z;
  for (const auto& p : ps) {
    z.push_back(balanced_diff_matrix(p));
    z.back() *= 1.0 / norm_inf(z.back());
  }
  const bool full = numerical_rank(evaluate_polynomial(poly, space, z), rel_tol) == space.size();
  return make_report(label, predicate, full, rel_tol);
}

AuditReport audit_lifted_power_rank(std::span<const Partition> ps, std::size_t alpha, unsigned k,
                                    double rel_tol) {
  const DenseMatrix w = realize(lifted_diff(alpha, ps));
  const MultiIndexSpace space = MultiIndexSpace::from_partitions(ps);
  const std::size_t ext = space.extent(alpha - 1);
  const std::size_t expected = k <= ext ? (ext - k) * (space.size() / ext) : 0;
  std::size_t observed;
  if (k >= ext)
    observed = power_vanishes(w, k) ? 0 : numerical_rank(mat_pow(w, k), rel_tol);
  else
    observed = numerical_rank(mat_pow(w, k), rel_tol);
  return make_report(fmt("lifted-power/alpha=%zu/k=%u", alpha, k), as_int(expected),
                     as_int(observed), rel_tol);
}

AuditReport audit_lifted_mixed_rank(std::span<const Partition> ps, std::size_t alpha, unsigned k,
                                    std::size_t beta, unsigned l, double rel_tol) {
  if (alpha == beta) throw InvalidInput("mixed rank: alpha and beta must differ");
  const DenseMatrix wa = realize(lifted_diff(alpha, ps));
  const DenseMatrix wb = realize(lifted_diff(beta, ps));
  const MultiIndexSpace space = MultiIndexSpace::from_partitions(ps);
  const std::size_t ea = space.extent(alpha - 1);
  const std::size_t eb = space.extent(beta - 1);
  const std::size_t expected = (ea - std::min<std::size_t>(k, ea)) * (eb - std::min<std::size_t>(l, eb)) *
                               (space.size() / (ea * eb));
  const std::size_t observed = numerical_rank(mat_mul(mat_pow(wa, k), mat_pow(wb, l)), rel_tol);
  return make_report(fmt("lifted-mixed/alpha=%zu/k=%u/beta=%zu/l=%u", alpha, k, beta, l), as_int(expected),
                     as_int(observed), rel_tol);
}

Partition random_partition(std::mt19937_64& rng, std::size_t n, double a, double b) {
  if (n < 1 || n > 500) throw InvalidInput("random_partition: n must lie in 1..500");
  if (!(a < b)) throw InvalidInput("random_partition: a < b required");
  std::uniform_real_distribution<double> u(a, b);
  const double min_gap = 1e-3 * (b - a);
  std::vector<double> x(n + 1);
  for (;;) {
    x.front() = a;
    x.back() = b;
    for (std::size_t i = 1; i < n; ++i) x[i] = u(rng);
    std::sort(x.begin() + 1, x.end() - 1);
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) ok = x[i] - x[i - 1] >= min_gap;
    if (ok) return Partition(x);
  }
}

Partition jittered_partition(std::mt19937_64& rng, std::size_t n, double a, double b, double jitter) {
  if (!(jitter >= 0.0 && jitter < 0.5)) throw InvalidInput("jittered_partition: jitter must lie in [0, 0.5)");
  Partition base = uniform_partition(a, b, n);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  std::vector<double> x(base.nodes().begin(), base.nodes().end());
  const double h = (b - a) / static_cast<double>(n);
  for (std::size_t i = 1; i < n; ++i) x[i] += u(rng) * h;
  return Partition(std::move(x));
}

namespace {

std::string dims_label(std::size_t n1, std::size_t n2) { return fmt("%zux%zu", n1, n2); }

std::string poly_label(const PolynomialNd& p) {
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += t.coeff < 0 ? "-" : "+";
    else if (t.coeff < 0) s += "-";
    s += fmt("%g", std::abs(t.coeff));
    for (std::size_t a = 0; a < t.exponents.size(); ++a)
      if (t.exponents[a]) s += fmt("z%zu^%u", a + 1, t.exponents[a]);
  }
  return s;
}

}  // namespace

std::vector<AuditReport> lemma1_suite(const AuditSuiteConfig& cfg, std::size_t count) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick_n(2, 10);
  std::vector<Partition> parts;
  for (std::size_t c = 0; c < count; ++c) parts.push_back(random_partition(rng, pick_n(rng)));

  std::vector<std::pair<AuditReport, AuditReport>> res(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < total; ++c) {
    const auto& p = parts[static_cast<std::size_t>(c)];
    res[static_cast<std::size_t>(c)] =
        audit_lemma1(p, cfg.rel_tol, fmt("lemma1/random-%03td(n=%zu)", c, p.n()));
  }
  std::vector<AuditReport> out;
  for (auto& [r, z] : res) {
    out.push_back(std::move(r));
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<AuditReport> ladder_suite(const AuditSuiteConfig& cfg, std::size_t random_count) {
  std::vector<AuditReport> out;
  auto append = [&out](std::vector<AuditReport> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(audit_rank_ladder(diff_matrix(Partition({0.0, 1.0, 2.0})), cfg.rel_tol, "ladder/Z{0;1;2}"));
  append(audit_rank_ladder(DenseMatrix{{0.0, 1.0}, {0.0, 0.0}}, cfg.rel_tol, "ladder/jordan2"));
  append(audit_rank_ladder(diff_matrix(Partition({0.0, 1.0})), cfg.rel_tol, "ladder/Z{0;1}"));
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick_n(2, 10);
  for (std::size_t c = 0; c < random_count; ++c) {
    const Partition p = random_partition(rng, pick_n(rng));
    append(audit_rank_ladder(balanced_diff_matrix(p), cfg.rel_tol,
                             fmt("ladder/random-%03zu(n=%zu)", c, p.n())));
  }
  return out;
}

std::vector<AuditReport> theorem_suite(const AuditSuiteConfig& cfg, std::size_t count) {
  std::vector<AuditReport> out;
  const double rt = cfg.rel_tol;
  {
    const double c[] = {1.0, 0.0, 1.0};
    out.push_back(audit_theorem1(diff_matrix(uniform_partition(0.0, 1.0, 4)), c, 0, rt,
                                 "theorem1/Z5-uniform:z^2+1"));
  }
  {
    const double c[] = {1.0};
    out.push_back(audit_theorem1(diff_matrix(Partition({0.0, 1.0, 2.0})), c, 2, rt, "theorem1/Z{0;1;2}:z^2"));
  }
  {
    const double c[] = {3.0};
    out.push_back(audit_theorem1(DenseMatrix{{-2.0, -1.0}, {4.0, 2.0}}, c, 1, rt, "theorem1/B2:3z"));
  }

  struct Case {
    Partition p;
    unsigned k;
    std::vector<double> coeffs;
  };
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_int_distribution<std::size_t> pick_n(2, 10);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::bernoulli_distribution sign(0.5);
  std::vector<Case> cases;
  for (std::size_t c = 0; c < count; ++c) {
    Partition p = random_partition(rng, pick_n(rng));
    const unsigned n = static_cast<unsigned>(p.n());
    const unsigned k = std::uniform_int_distribution<unsigned>(0, n)(rng);
    const unsigned m = std::uniform_int_distribution<unsigned>(k, n)(rng);
    std::vector<double> coeffs(m - k + 1);
    for (double& a : coeffs) a = (sign(rng) ? -1.0 : 1.0) * mag(rng);
    cases.push_back({std::move(p), k, std::move(coeffs)});
  }
  std::vector<AuditReport> res(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < total; ++c) {
    const auto& cs = cases[static_cast<std::size_t>(c)];
    res[static_cast<std::size_t>(c)] =
        audit_theorem3(cs.p, cs.coeffs, cs.k, rt,
                       fmt("theorem3/random-%03td(n=%zu;k=%u;m=%zu)", c, cs.p.n(), cs.k,
                           cs.k + cs.coeffs.size() - 1));
  }
  out.insert(out.end(), res.begin(), res.end());
  return out;
}

std::vector<AuditReport> counterexample_suite() {
  constexpr double tol = 1e-12;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double a = -2.0 + 4.0 * i / 19.0;
      const double b = -2.0 + 4.0 * j / 19.0;
      worst = std::max(worst, std::abs(counterexample_det(a, b) - (1.0 + 2.0 * (b - a))));
    }
  }
  return {make_report("counterexample/det-identity-grid-20x20", true, worst <= tol, tol),
          make_report("counterexample/singular-at(1;0.5)", true, std::abs(counterexample_det(1.0, 0.5)) <= tol, tol)};
}

std::vector<AuditReport> lifted_rank_suite(const AuditSuiteConfig& cfg, std::size_t max_n) {
  std::vector<AuditReport> out;
  std::mt19937_64 rng(cfg.seed + 2);
  for (std::size_t n1 = 1; n1 <= max_n; ++n1) {
    for (std::size_t n2 = 1; n2 <= max_n; ++n2) {
      const std::vector<Partition> ps{jittered_partition(rng, n1, -1.0, 1.0),
                                      jittered_partition(rng, n2, -1.0, 1.0)};
      const std::string dl = dims_label(n1, n2);
      for (std::size_t alpha = 1; alpha <= 2; ++alpha) {
        const std::size_t na = alpha == 1 ? n1 : n2;
        for (unsigned k = 0; k <= na + 1; ++k) {
          AuditReport r = audit_lifted_power_rank(ps, alpha, k, cfg.rel_tol);
          r.case_name = fmt("lifted-power/dims=%s/alpha=%zu/k=%u", dl.c_str(), alpha, k);
          out.push_back(std::move(r));
        }
      }
      for (unsigned k = 1; k <= n1; ++k) {
        for (unsigned l = 1; l <= n2; ++l) {
          AuditReport r = audit_lifted_mixed_rank(ps, 1, k, 2, l, cfg.rel_tol);
          r.case_name = fmt("lifted-mixed/dims=%s/k=%u/l=%u", dl.c_str(), k, l);
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

std::vector<AuditReport> mdrank_suite(const AuditSuiteConfig& cfg, std::size_t max_n) {
  std::vector<std::vector<unsigned>> monomials;
  for (unsigned e2 = 0; e2 <= 2; ++e2)
    for (unsigned e1 = 0; e1 <= 2; ++e1) monomials.push_back({e1, e2});

  std::vector<PolynomialNd> family;
  const std::size_t m = monomials.size();
  auto add = [&](std::vector<std::size_t> pick) {
    for (int pattern = 0; pattern < 2; ++pattern) {
      std::vector<MonomialTerm> terms;
      for (std::size_t t = 0; t < pick.size(); ++t) {
        static constexpr double kMixed[] = {-3.0, 2.0, -0.5};
        const double c = pattern == 0 ? 1.0 : kMixed[t];
        terms.push_back({c, monomials[pick[t]]});
      }
      family.emplace_back(2, std::move(terms));
    }
  };
  for (std::size_t a = 0; a < m; ++a) {
    add({a});
    for (std::size_t b = a + 1; b < m; ++b) {
      add({a, b});
      for (std::size_t c = b + 1; c < m; ++c) add({a, b, c});
    }
  }

  std::vector<AuditReport> out;
  for (std::size_t n1 = 1; n1 <= max_n; ++n1) {
    for (std::size_t n2 = 1; n2 <= max_n; ++n2) {
      const std::vector<Partition> ps{uniform_partition(-1.0, 1.0, n1), uniform_partition(-1.0, 1.0, n2)};
      std::vector<AuditReport> res(family.size());
      const auto total = static_cast<std::ptrdiff_t>(family.size());
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < total; ++i) {
        const auto& poly = family[static_cast<std::size_t>(i)];
        res[static_cast<std::size_t>(i)] = audit_mdrank(
            poly, ps, cfg.rel_tol, "mdrank/dims=" + dims_label(n1, n2) + "/P=" + poly_label(poly));
      }
      out.insert(out.end(), res.begin(), res.end());
    }
  }
  return out;
}

std::vector<AuditReport> run_audit_suite(const AuditSuiteConfig& cfg) {
  std::vector<AuditReport> out;
  auto append = [&out](std::vector<AuditReport> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(lemma1_suite(cfg));
  append(ladder_suite(cfg));
  append(theorem_suite(cfg));
  append(counterexample_suite());
  append(lifted_rank_suite(cfg));
  append(mdrank_suite(cfg));
  return out;
}

namespace {

std::string value_text(const AuditValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::to_string(std::get<std::int64_t>(v));
}

}  // namespace

void write_audit_csv(std::ostream& os, std::span<const AuditReport> reports) {
  os << "caseName,expected,observed,tolerance,pass\n";
  for (const auto& r : reports) {
    os << r.case_name << ',' << value_text(r.expected) << ',' << value_text(r.observed) << ','
       << fmt("%.1e", r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

}  // namespace liealg
