#ifndef VERBA_SWEEP_HPP
#define VERBA_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "verba/report.hpp"

namespace verba {

/// A declared case where the property holds but the verbal subgroup is not
/// p-nilpotent; absent p matches every prime.
struct ExpectedNonEquivalence {
  std::string group;
  std::string word;
  std::optional<std::uint64_t> p;
};

struct SweepConfig {
  std::vector<std::string> groups;  // catalog names or file paths
  std::vector<std::string> words;   // canonicalized descriptors
  std::vector<std::uint64_t> primes;  // empty: primes dividing each order
  std::vector<std::string> checks;
  std::vector<ExpectedNonEquivalence> expected_non_equivalences;
  std::optional<std::uint64_t> enumeration_cap;
  std::optional<std::uint64_t> tuple_cap;
  unsigned jobs = 1;
};

/// Validates check tokens, word descriptors, primes and jobs. Words are
/// stored canonicalized so gamma and delta forms are recognized however
/// they were written.
SweepConfig sweep_config_from_json(const nlohmann::json& j);
SweepConfig load_sweep_config(const std::string& path);

struct SweepResult {
  std::vector<CheckReport> reports;      // sorted by group, check, word, k, p
  std::vector<nlohmann::json> errors;    // per-entry failures; sweep continues
  nlohmann::json summary;
  int exit_code;  // 0 iff no mismatches and no errors
};

/// Runs every configured check over every group. A mismatch is a logical
/// inconsistency: a p-nilpotent verbal subgroup whose property fails, an
/// undeclared non-equivalence, a theorem or lemma failure, or a Frobenius or
/// whole-group disagreement with is_p_nilpotent. Results are deterministic;
/// with jobs > 1 the tasks run concurrently and are sorted afterwards.
SweepResult run_sweep(const SweepConfig& cfg);

/// Report lines, error lines, then the summary line.
std::string render_sweep(const SweepResult& r, bool pretty);

}  // namespace verba

#endif
