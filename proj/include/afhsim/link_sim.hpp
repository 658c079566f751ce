#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "afhsim/channel_map.hpp"
#include "afhsim/config.hpp"
#include "afhsim/interference.hpp"
#include "afhsim/strategy.hpp"

namespace afhsim {

// The standard requires at least this many connection events between issuing
// a channel-map update and applying it.
inline constexpr std::uint64_t kMapUpdateDelayEvents = 6;

struct EventOutcome {
  std::uint64_t event;
  double time_s;
  int channel;
  bool acked;
  bool was_retransmission;
  bool map_update_sent;
};

struct PendingUpdate {
  ChannelMap map;
  std::uint64_t apply_at_event;
};

// Per-connection link-layer state. Loss draws are keyed by
// (seed, event, channel, direction), so the realization a channel would see
// at a given event is fixed by the seed alone; strategies that pick the same
// channel face the same outcome.
struct ConnectionState {
  std::uint64_t event_counter = 0;
  double interval_s = 0.02;
  ChannelMap map = ChannelMap::all();
  std::optional<PendingUpdate> pending_update;
  int tx_sn = 0;            // central's 1-bit sequence number
  int rx_nesn = 0;          // last NESN received from the peripheral
  int peripheral_nesn = 0;  // peripheral's next expected sequence number
  bool pending_retransmission = false;
  std::uint64_t seed = 0;      // loss-draw stream key
  std::uint64_t hop_seed = 0;  // channel-selection key
};

// Deterministic replacement for the standard's channel selection algorithms:
// a seeded per-round shuffle of the used channels. Within any window of
// K*|used| consecutive events on a fixed map, each used channel is selected
// between K-1 and K+1 times. Throws std::domain_error on an empty map.
int select_channel(const ChannelMap& map, std::uint64_t event_counter,
                   std::uint64_t hop_seed);

// Runs one connection event: applies a due map update, hops, exchanges one
// keep-alive round trip (two independent loss draws), advances the SN/NESN
// acknowledgment state, feeds the strategy, and schedules any map change the
// strategy returns for kMapUpdateDelayEvents ahead.
EventOutcome run_event(ConnectionState& state, const InterferenceField& field,
                       AfhStrategy& strategy);

struct MapChange {
  std::uint64_t event;  // first event the map is in force
  ChannelMap map;
};

struct UpdateRecord {
  std::uint64_t issue_event;
  std::uint64_t apply_event;
  ChannelMap map;
};

struct RunTrace {
  std::vector<EventOutcome> outcomes;
  std::vector<MapChange> map_history;  // [0] is the initial map at event 0
  std::vector<UpdateRecord> updates;
  int strategy_resets = 0;
  int min_strategy_step_channels = ChannelMap::kChannels;
  double interval_s = 0.02;
  double duration_s = 0.0;
};

// Executes ceil(duration / interval) events. A pure function of the config,
// including all randomness.
RunTrace run_scenario(const ScenarioConfig& config);

}  // namespace afhsim
