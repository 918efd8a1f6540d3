#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weightlab/evaluation.hpp"

namespace weightlab::verify {

struct VerifyConfig {
  int max_rank = 4;
  int window = 30;
  std::size_t samples = 100;
  std::uint64_t seed = 20240607;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string inject;    // "" or "cartan"
  std::vector<std::string> only;  // check names; empty runs all
};

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
  std::optional<std::string> counterexample;
  double seconds = 0;
};

struct RunReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool all_pass() const;
  bool any_fail() const;
  /// One JSON object per line.
  std::string to_jsonl(bool include_timing = true) const;
};

/// Names of every check, in report order.
const std::vector<std::string>& check_names();

/// Throws InvalidArgument on a bad configuration.
RunReport verify_all(const VerifyConfig& config);

/**
 * Seeded sl₂ descriptors with 0–3 factors mixing trivial, finite and simple
 * dense modules, over k[t] and k[t,u]/(tu − 1).
 */
std::vector<evaluation::EvaluationDescriptor> descriptor_battery(std::uint64_t seed, std::size_t count);

}  // namespace weightlab::verify
