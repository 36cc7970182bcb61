#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "lzpath/verify.hpp"

namespace lzp {

struct Caps {
  std::size_t depth = kDefaultMaxDepth;
  std::size_t node_cap = kDefaultNodeCap;
  long denom_bound = 12;
  long m_max = 64;
};

struct CheckSpec {
  std::string name;
  json params;
};

/// A parsed campaign: the algebra, the checks to run and the exploration caps.
struct CampaignConfig {
  json algebra;  // {"cartan", "special_vertex"}
  std::vector<CheckSpec> checks;
  Caps caps;
  std::string out;  // may be empty; the command line can supply it
  Fault fault = Fault::None;

  /// Throws Error(BadInput) on unknown check names, unknown keys or non-positive caps.
  /// Relative algebra file references resolve against `base_dir`.
  static CampaignConfig parse(const json& j, const std::filesystem::path& base_dir = {});
};

const std::vector<std::string>& known_checks();

/// The bundled smoke campaign on A₁⁽¹⁾.
json builtin_config(const std::string& name);

struct CampaignResult {
  std::vector<Report> reports;
  int exit_code = 0;
};

/// Runs every check (concurrently), then writes NN-<name>.json per check,
/// summary.json and the timings sidecar timings.json into `outdir` when it is non-empty.
CampaignResult run_campaign(const CampaignConfig& config, const std::filesystem::path& outdir);

/// 0 verified, 2 counterexample present, 3 otherwise inconclusive.
int exit_code_for(const std::vector<Report>& reports);

/// Reads a JSON file or parses the text itself when it starts with '{' or '['.
json load_json_arg(const std::string& arg);

}  // namespace lzp
