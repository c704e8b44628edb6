#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "glab/cayley/ball.hpp"
#include "glab/groups/catalog.hpp"

namespace glab::lab {

inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus status);

struct CheckEntry {
  std::string id;
  int criterion = 0;   // acceptance criterion number, 0 when auxiliary
  std::string anchor;  // the statement being checked
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  CheckStatus status = CheckStatus::pass;
  nlohmann::ordered_json measured = nlohmann::ordered_json::object();
  std::vector<std::string> counterexamples;
  std::string note;
  double runtime_seconds = 0.0;
};

struct CheckReport {
  std::uint64_t seed = 0;
  std::uint32_t p = 20;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<CheckEntry> entries;

  bool all_passed() const;
  // Runtimes are the only nondeterministic fields; leave them out to
  // compare reports.
  nlohmann::ordered_json to_json(bool include_runtime = true) const;
  std::string to_text() const;
};

// Run parameters. Every check reads its own object under "checks.<id>";
// "skip": true there skips it.
struct LabConfig {
  std::uint64_t seed = 20201014;
  std::uint32_t p = 20;
  unsigned threads = 0;
  std::uint64_t memory_cap = kDefaultMemoryCap;
  // "perturbed-relation": G_p checks run against a model whose base uses
  // a^(p+1) while words still use the a^p relator.
  std::string fault;
  nlohmann::json checks = nlohmann::json::object();

  static LabConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
  // Integer parameter of a check with a default.
  std::int64_t param(const std::string& check, const std::string& key, std::int64_t fallback) const;
  bool skipped(const std::string& check) const;
};

// Ids in execution order.
std::vector<std::string> check_ids();

CheckEntry run_check(const std::string& id, const LabConfig& config);
CheckReport run_all(const LabConfig& config, const std::vector<std::string>& only = {});

// Individual verifiers, usable on their own.
CheckEntry check_lemma_noakisshort(std::uint32_t k, std::uint32_t L, const GpGroup& group,
                                   std::uint64_t budget = 100'000'000);
CheckEntry check_lemma_final_k1(const GpGroup& group, const Ball& ball);
CheckEntry check_theorem_forwibackwi(std::uint64_t K, const HGroup& group, const Ball& ball);

}  // namespace glab::lab
