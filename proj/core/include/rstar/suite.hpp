#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rstar/battery.hpp"

namespace rstar {

inline constexpr const char* kReportSchema = "rstar.theorem-report/1";

struct SuiteOptions {
  std::size_t max_order = 64;
  std::size_t star_cap = kDefaultStarCap;
  std::size_t jobs = 1;
  std::vector<RingPtr> rings;  // replaces the corpus when nonempty
  bool include_pid = true;
};

struct SuiteResult {
  std::size_t max_order = 0;
  std::size_t star_cap = 0;
  std::vector<RingBattery> rings;
  std::vector<PidBattery> pid;
  bool refuted = false;
  bool invariants_held = true;
  std::optional<std::string> first_failure;

  int exit_code() const { return refuted || !invariants_held ? 1 : 0; }
};

SuiteResult run_suite(const SuiteOptions& options);

nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const StatementResult& s);
nlohmann::ordered_json to_json(const InvariantResult& i);
nlohmann::ordered_json to_json(const Fingerprint& f);
nlohmann::ordered_json to_json(const RingBattery& b);
nlohmann::ordered_json to_json(const PidBattery& b);
nlohmann::ordered_json to_json(const SuiteResult& r);

std::string to_text(const SuiteResult& r);

// Corpus listing: label and fingerprint per entry.
nlohmann::ordered_json corpus_listing(const std::vector<RingPtr>& corpus);

}  // namespace rstar
