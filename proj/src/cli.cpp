#include "liealg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "liealg/bvp.hpp"
#include "liealg/errors.hpp"
#include "liealg/operator1d.hpp"
#include "liealg/partition.hpp"
#include "liealg/rank_audit.hpp"

namespace liealg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw InvalidInput("config: '" + key + "' expects a number, got '" + v + "'");
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used == v.size() && v.front() != '-') return x;
  } catch (const std::exception&) {
  }
  throw InvalidInput("config: '" + key + "' expects a non-negative integer, got '" + v + "'");
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InvalidInput("config: '" + key + "' expects true/false, got '" + v + "'");
}

Partition partition_from(const RunConfig& cfg) {
  if (cfg.nodes) {
    std::ifstream file(*cfg.nodes);
    if (file) return read_partition(file);
    std::vector<double> xs;
    std::stringstream ss(*cfg.nodes);
    std::string item;
    while (std::getline(ss, item, ',')) xs.push_back(to_double("nodes", trim(item)));
    return Partition(std::move(xs));
  }
  if (!cfg.n) throw InvalidInput("diffmat: give --nodes or --n");
  return uniform_partition(cfg.a.value_or(0.0), cfg.b.value_or(1.0), *cfg.n);
}

template <class Job>
std::vector<BvpReport> run_rows(std::size_t count, Job job) {
  std::vector<BvpReport> rows(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < total; ++i) rows[static_cast<std::size_t>(i)] = job(static_cast<std::size_t>(i));
  return rows;
}

}  // namespace

RunConfig parse_config(std::istream& is) {
  RunConfig cfg;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("config: expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "command") cfg.command = val;
    else if (key == "nodes") cfg.nodes = val;
    else if (key == "a") cfg.a = to_double(key, val);
    else if (key == "b") cfg.b = to_double(key, val);
    else if (key == "n") cfg.n = to_uint(key, val);
    else if (key == "n1") cfg.n1 = to_uint(key, val);
    else if (key == "n2") cfg.n2 = to_uint(key, val);
    else if (key == "out") cfg.out = val;
    else if (key == "rel-tol") cfg.rel_tol = to_double(key, val);
    else if (key == "include-zero-endpoint") cfg.include_zero_endpoint = to_bool(key, val);
    else if (key == "seed") cfg.seed = to_uint(key, val);
    else throw InvalidInput("config: unknown key '" + key + "'");
  }
  return cfg;
}

RunConfig merge_config(RunConfig file, const RunConfig& flags) {
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(file.command, flags.command);
  take(file.nodes, flags.nodes);
  take(file.a, flags.a);
  take(file.b, flags.b);
  take(file.n, flags.n);
  take(file.n1, flags.n1);
  take(file.n2, flags.n2);
  take(file.out, flags.out);
  take(file.rel_tol, flags.rel_tol);
  take(file.include_zero_endpoint, flags.include_zero_endpoint);
  take(file.seed, flags.seed);
  return file;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("LIEALG_SEED");
  if (!s || !*s) return 42;
  return to_uint("LIEALG_SEED", s);
}

void validate(const RunConfig& cfg) {
  if (!cfg.command) throw InvalidInput("no command given (diffmat, rank-audit, table1, table3, plot-figure1)");
  const std::string& c = *cfg.command;
  if (c != "diffmat" && c != "rank-audit" && c != "table1" && c != "table3" && c != "plot-figure1")
    throw InvalidInput("unknown command '" + c + "'");
  if (cfg.n && (*cfg.n < 1 || *cfg.n > 20)) throw InvalidInput("--n must lie in 1..20");
  for (const auto* v : {&cfg.n1, &cfg.n2})
    if (*v && (**v < 4 || **v > 20)) throw InvalidInput("--n1/--n2 must lie in 4..20");
  if (cfg.n1 && cfg.n2 && (*cfg.n1 + 1) * (*cfg.n2 + 1) > 1024) throw InvalidInput("grid size N exceeds 1024");
  if (cfg.rel_tol && !(*cfg.rel_tol > 0.0 && *cfg.rel_tol < 1.0)) throw InvalidInput("--rel-tol must lie in (0,1)");
  if (cfg.a && cfg.b && !(*cfg.a < *cfg.b)) throw InvalidInput("--a must be less than --b");
  if (c == "table1" && cfg.n && *cfg.n < 2) throw InvalidInput("table1: --n must be at least 2");
}

int run(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  const std::string& c = *cfg.command;

  if (c == "diffmat") {
    write_matrix(out, diff_matrix(partition_from(cfg)));
    return 0;
  }

  if (c == "rank-audit") {
    AuditSuiteConfig suite;
    suite.seed = cfg.seed.value_or(seed_from_env());
    suite.rel_tol = cfg.rel_tol.value_or(kDefaultRankTol);
    const auto reports = run_audit_suite(suite);
    write_audit_csv(out, reports);
    for (const auto& r : reports)
      if (!r.pass) return 1;
    return 0;
  }

  if (c == "table1") {
    std::vector<std::size_t> sizes{4, 8, 12, 16};
    if (cfg.n) sizes = {*cfg.n};
    const bool zero = cfg.include_zero_endpoint.value_or(false);
    const std::size_t m = sizes.size();
    const auto rows = run_rows(2 * m, [&](std::size_t i) {
      return i < m ? solve_bvp2(sizes[i], zero) : shooting_bvp2(sizes[i - m]);
    });
    write_table_header(out);
    for (const auto& r : rows) write_table_row(out, r);
    return 0;
  }

  if (c == "table3") {
    std::vector<std::pair<std::size_t, std::size_t>> grids{{10, 10}, {15, 15}};
    if (cfg.n1 || cfg.n2) grids = {{cfg.n1.value_or(15), cfg.n2.value_or(15)}};
    const auto rows = run_rows(grids.size(), [&](std::size_t i) {
      return solve_hyperbolic(grids[i].first, grids[i].second);
    });
    write_table_header(out);
    for (const auto& r : rows) write_table_row(out, r);
    return 0;
  }

  // plot-figure1
  write_surface(out, solve_hyperbolic(cfg.n1.value_or(15), cfg.n2.value_or(15)));
  return 0;
}

}  // namespace liealg
