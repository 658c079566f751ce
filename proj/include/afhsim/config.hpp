#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "afhsim/errors.hpp"
#include "afhsim/interference.hpp"
#include "afhsim/strategy.hpp"

namespace afhsim {

enum class StrategyKind { no_afh, pdr_exclusion, eafh };

StrategyKind strategy_kind_from_string(const std::string& name);
std::string to_string(StrategyKind kind);

// Full declarative description of a run. Parsed from a flat JSON document;
// unknown keys and out-of-range values are rejected with the key named.
struct ScenarioConfig {
  StrategyKind strategy = StrategyKind::eafh;
  ScenarioKind scenario = ScenarioKind::continuous;
  double duration_s = 300.0;
  double interval_s = 0.02;
  std::uint64_t seed = 1;
  int repetitions = 1;
  int c_min = 8;

  EafhParams eafh;              // c_min mirrors the top-level value
  PdrExclusion::Params pdr;
  ScenarioParams interference;  // duration_s/seed are filled per run

  std::string out_dir = "out";
  bool write_events = false;

  void validate() const;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);
std::string serialize_config(const ScenarioConfig& config);

std::unique_ptr<AfhStrategy> make_strategy(const ScenarioConfig& config);

}  // namespace afhsim
