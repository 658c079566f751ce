#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "afhsim/config.hpp"
#include "afhsim/link_sim.hpp"
#include "afhsim/metrics.hpp"

namespace afhsim {

struct RepetitionResult {
  std::uint64_t seed;
  RunTrace trace;
  RunReport report;
};

// Runs config.repetitions scenarios; repetition i uses seed + i.
std::vector<RepetitionResult> run_repetitions(const ScenarioConfig& config);

// CSV builders. Floats are printed with fixed precision so identical runs
// produce byte-identical files. Column orders are documented in the README.
std::string summary_csv(const ScenarioConfig& config,
                        const std::vector<RepetitionResult>& results);
std::string timeseries_csv(const std::vector<RepetitionResult>& results);
std::string events_csv(const std::vector<RepetitionResult>& results);

// Runs the configured repetitions and writes summary.csv, timeseries.csv and
// (when enabled) events.csv under out_dir. Returns the results for callers
// that want to keep processing.
std::vector<RepetitionResult> run_and_report(const ScenarioConfig& config,
                                             const std::string& out_dir);

// Runs the same scenario once per strategy with shared seeds, writing each
// result set under out_dir/<strategy>/. All strategies face the identical
// interference realization.
void run_compare(const ScenarioConfig& config,
                 const std::vector<StrategyKind>& strategies,
                 const std::string& out_dir);

}  // namespace afhsim
