#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "afhsim/spectrum.hpp"

namespace afhsim {

// One entry of a jammer on/off timeline. `channel == nullopt` means the
// jammer is off during the interval. Intervals are half-open [start, end).
struct JamSegment {
  double start_s = 0.0;
  double end_s = 0.0;
  std::optional<WifiChannel> channel;
};

// Wifi-shaped interference: every BLE channel under the active Wifi footprint
// loses with probability p_main per transmission, and the single guard
// channel on each side of the overlap run loses with p_adj (splatter).
struct WifiJammerSource {
  std::vector<JamSegment> schedule;  // time-ordered, non-overlapping
  double p_main = 0.9;
  double p_adj = 0.3;
};

// Concurrent BLE traffic: a flat loss probability across all 37 channels.
struct CoexistenceSource {
  double p_uniform = 0.02;
};

// Externally supplied outcomes. Each row pins the loss probability of one
// channel to 0 or 1 from its timestamp until that channel's next row;
// channels without rows (or before their first row) are loss-free.
struct TraceSource {
  struct Row {
    double time_s;
    int channel;
    bool lost;
  };
  std::vector<Row> rows;  // sorted by time_s
};

using InterferenceSource =
    std::variant<WifiJammerSource, CoexistenceSource, TraceSource>;

// Time-varying per-channel loss probability, combined across sources as
// independent loss events: p(c,t) = 1 - prod_s (1 - p_s(c,t)).
class InterferenceField {
 public:
  InterferenceField() = default;
  explicit InterferenceField(std::vector<InterferenceSource> sources);

  double loss_probability(int channel, double t) const;
  const std::vector<InterferenceSource>& sources() const { return sources_; }

 private:
  struct PreparedSegment {
    double start_s;
    double end_s;
    bool active;
    int overlap_lo;  // inclusive; overlap_lo > overlap_hi means empty
    int overlap_hi;
  };
  struct PreparedJammer {
    std::vector<PreparedSegment> segments;
    double p_main;
    double p_adj;
  };
  struct PreparedTrace {
    // Per channel: change points (time, lost) sorted by time.
    std::vector<std::vector<std::pair<double, bool>>> per_channel;
  };
  using Prepared =
      std::variant<PreparedJammer, CoexistenceSource, PreparedTrace>;

  std::vector<InterferenceSource> sources_;
  std::vector<Prepared> prepared_;
};

enum class ScenarioKind {
  one_off,
  continuous,
  slow_dynamics,
  fast_dynamics,
  ble_coexistence,
  trace,
};

ScenarioKind scenario_kind_from_string(const std::string& name);
std::string to_string(ScenarioKind kind);

// Knobs for the built-in scenarios. p_adj defaults to p_main / 3 when unset.
struct ScenarioParams {
  double duration_s = 300.0;
  std::uint64_t seed = 0;
  double p_main = 0.9;
  std::optional<double> p_adj;
  double p_uniform = 0.02;
  int wifi_channel = 1;
  int wifi_half_width_mhz = 11;
  double segment_s = 30.0;
  std::vector<int> channel_pool = {1, 6, 11};
  double jam_start_s = 0.0;
  double jam_duration_s = 60.0;
  std::string trace_path;
};

// Builds the interference timeline for one scenario family:
//  - one_off:         one jam window on wifi_channel, then off for good
//  - continuous:      wifi_channel jammed for the whole run
//  - fast_dynamics:   a new pool channel every segment_s, no gaps
//  - slow_dynamics:   segment_s jammed / segment_s quiet, new channel each time
//  - ble_coexistence: p_uniform on all channels
//  - trace:           outcomes loaded from trace_path
// Deterministic: identical (kind, params) yield an identical field.
InterferenceField make_scenario(ScenarioKind kind, const ScenarioParams& params);

// CSV with header "time_s,channel,lost", rows sorted by time, lost in {0,1}.
TraceSource load_trace_csv(const std::string& path);
TraceSource parse_trace_csv(const std::string& text);

}  // namespace afhsim
