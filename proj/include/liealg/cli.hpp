#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

/// Settings for one CLI invocation. Unset fields take command defaults.
struct RunConfig {
  std::optional<std::string> command;  // diffmat | rank-audit | table1 | table3 | plot-figure1
  std::optional<std::string> nodes;    // "x0,x1,..." or a partition file path
  std::optional<double> a;
  std::optional<double> b;
  std::optional<std::size_t> n;
  std::optional<std::size_t> n1;
  std::optional<std::size_t> n2;
  std::optional<std::string> out;
  std::optional<double> rel_tol;
  std::optional<bool> include_zero_endpoint;
  std::optional<std::uint64_t> seed;
};

/// key=value lines; '#' starts a comment. Keys match the long flag names
/// (command, nodes, a, b, n, n1, n2, out, rel-tol, include-zero-endpoint, seed).
RunConfig parse_config(std::istream& is);

/// Fields set in `flags` replace those in `file`.
RunConfig merge_config(RunConfig file, const RunConfig& flags);

/// Seed from LIEALG_SEED, 42 when unset.
std::uint64_t seed_from_env();

/// Throws InvalidInput naming the first offending field.
void validate(const RunConfig& cfg);

/// Executes the command, writing to `out` (the --out file is handled by the
/// caller). Returns the exit status: 0 on success, 1 when an audit row fails.
int run(const RunConfig& cfg, std::ostream& out);

}  // namespace liealg
