#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "afhsim/link_sim.hpp"

namespace afhsim {

struct ChannelTxAck {
  std::uint64_t tx = 0;
  std::uint64_t ack = 0;
};

struct RunReport {
  std::size_t total_events = 0;
  std::size_t first_attempts = 0;       // events carrying a fresh payload
  std::size_t first_attempt_acks = 0;
  // Fraction of exchanges delivered on their first transmission attempt.
  double link_pdr = 1.0;
  // Retransmitted events over all events.
  double retransmission_overhead = 0.0;
  std::size_t map_updates = 0;
  double updates_per_minute = 0.0;
  double update_overhead = 0.0;  // map_updates / total_events
  int resets = 0;
  // (time_s, active channel count) at t=0 and at every applied map change.
  std::vector<std::pair<double, int>> active_channels_series;
  std::array<ChannelTxAck, kNumDataChannels> per_channel{};
  int min_active_channels = kNumDataChannels;
  double mean_active_channels = kNumDataChannels;  // time-weighted
  int final_active_channels = kNumDataChannels;
};

// Folds a trace into the run metrics. Throws std::domain_error when the
// trace holds no outcomes.
RunReport aggregate(const RunTrace& trace);

}  // namespace afhsim
