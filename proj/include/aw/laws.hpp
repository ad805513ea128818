#ifndef AW_LAWS_HPP
#define AW_LAWS_HPP

#include <json.hpp>

#include "aw/rng.hpp"

namespace aw::harness {

struct LawFailure {
  std::string law;
  std::uint64_t seed = 0;  // trial seed; re-running the law with it fails again
  nlohmann::json counterexample;
};

struct LawReport {
  std::string suite;
  std::uint64_t trials = 0;
  std::vector<LawFailure> failures;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Suites: glueing, transport, limits, ends, coarse, all. Each law in the
// suite runs min(trials, its own run cap) seeded trials; the first
// failure per law is recorded with a greedily minimized counterexample.
// Identical (suite, trials, seed) triples produce identical reports.
LawReport run_laws(const std::string& suite, std::uint64_t trials, std::uint64_t seed);

const std::vector<std::string>& suite_names();

// Re-runs one law once with the given trial seed; true when it fails.
// Backs the failure-replay contract and the mutation drills.
bool replay_fails(const std::string& law, std::uint64_t trial_seed);

}  // namespace aw::harness

#endif
