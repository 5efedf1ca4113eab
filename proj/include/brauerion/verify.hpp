#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauerion/catalog.hpp"

namespace brauerion {

struct Tally {
  long long passed = 0;
  long long failed = 0;
  void record(bool ok) { ok ? ++passed : ++failed; }
  Tally& operator+=(const Tally& o) {
    passed += o.passed;
    failed += o.failed;
    return *this;
  }
};

struct GroupResult {
  std::string label;
  int order = 0;
  Tally tally;
  /// Per-prime or per-check summary lines, in a fixed order.
  std::vector<std::string> details;
  /// First few failure descriptions.
  std::vector<std::string> failures;
  /// Set when the group was not examined, with the reason.
  std::optional<std::string> skipped;
  double seconds = 0;

  void check(bool ok, const std::string& what);
};

struct RunReport {
  std::string command;
  std::vector<GroupResult> groups;
  Tally tally;
  double seconds = 0;

  bool ok() const { return tally.failed == 0; }
  /// Deterministic text: no timings.
  std::string to_text() const;
  /// Timings are included only on request so that stdout stays
  /// reproducible.
  nlohmann::json to_json(bool with_timing) const;
};

struct SuiteOptions {
  std::optional<std::string> corpus;  ///< manifest path; default corpus otherwise
  int order_cap = 0;                  ///< 0 selects the suite's own bound
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// tables, fongswan, mackey, lemma21, lemma23, theorem1, theorem2, clifford,
/// consistency. BadSpec for an unknown name.
RunReport run_suite(const std::string& name, const SuiteOptions& options);

/// Classifies every corpus group for every prime dividing its order.
RunReport run_corpus(const SuiteOptions& options);

CorpusManifest corpus_for(const SuiteOptions& options);

}  // namespace brauerion
