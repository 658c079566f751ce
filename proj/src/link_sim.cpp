#include "afhsim/link_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "afhsim/rng.hpp"

namespace afhsim {

namespace {

// Domain separators for the independent random streams of one run.
constexpr std::uint64_t kSaltLoss = 0x6c6f7373;      // per-event loss draws
constexpr std::uint64_t kSaltHop = 0x686f70;         // channel selection
constexpr std::uint64_t kSaltSchedule = 0x73636864;  // interference schedule

}  // namespace

int select_channel(const ChannelMap& map, std::uint64_t event_counter,
                   std::uint64_t hop_seed) {
  const int n = map.count();
  if (n == 0) {
    throw std::domain_error("select_channel: empty channel map");
  }
  const std::uint64_t round = event_counter / static_cast<std::uint64_t>(n);
  const int pos = static_cast<int>(event_counter % static_cast<std::uint64_t>(n));
  auto used = map.channels();
  // Fisher-Yates shuffle seeded per (seed, round, map): every used channel
  // appears exactly once per round of n events.
  SplitMix64 rng(hash3(hop_seed, round, map.bits()));
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(used[static_cast<std::size_t>(i)], used[static_cast<std::size_t>(j)]);
  }
  return used[static_cast<std::size_t>(pos)];
}

EventOutcome run_event(ConnectionState& state, const InterferenceField& field,
                       AfhStrategy& strategy) {
  const std::uint64_t ev = state.event_counter;
  if (state.pending_update && ev == state.pending_update->apply_at_event) {
    state.map = state.pending_update->map;
    state.pending_update.reset();
  }

  const int channel = select_channel(state.map, ev, state.hop_seed);
  const double t = static_cast<double>(ev) * state.interval_s;
  const double p = field.loss_probability(channel, t);

  // One keep-alive exchange: the central's packet and the peripheral's reply
  // each survive independently with probability 1-p. The draws are keyed by
  // (seed, event, channel, direction), never by strategy state.
  const bool forward_ok =
      to_unit(hash4(state.seed, ev, static_cast<std::uint64_t>(channel), 0)) >= p;
  const bool reply_ok =
      to_unit(hash4(state.seed, ev, static_cast<std::uint64_t>(channel), 1)) >= p;

  const bool was_retransmission = state.pending_retransmission;
  bool acked = false;
  if (forward_ok) {
    // Peripheral accepts fresh data (SN matches its NESN) and toggles;
    // a retransmitted SN is recognized as a duplicate and re-acknowledged.
    if (state.tx_sn == state.peripheral_nesn) state.peripheral_nesn ^= 1;
    if (reply_ok) {
      state.rx_nesn = state.peripheral_nesn;
      if (state.rx_nesn != state.tx_sn) {
        acked = true;
        state.tx_sn ^= 1;
      }
    }
  }
  state.pending_retransmission = !acked;

  strategy.observe(channel, acked);
  bool update_sent = false;
  const auto next = strategy.step(state.map, ev, state.pending_update.has_value());
  if (next && !state.pending_update) {
    state.pending_update = PendingUpdate{*next, ev + kMapUpdateDelayEvents};
    update_sent = true;
  }

  state.event_counter = ev + 1;
  return EventOutcome{ev, t, channel, acked, was_retransmission, update_sent};
}

RunTrace run_scenario(const ScenarioConfig& config) {
  config.validate();

  ScenarioParams interference = config.interference;
  interference.duration_s = config.duration_s;
  interference.seed = hash2(config.seed, kSaltSchedule);
  const InterferenceField field = make_scenario(config.scenario, interference);

  const auto strategy = make_strategy(config);

  ConnectionState state;
  state.interval_s = config.interval_s;
  state.map = ChannelMap::all();
  state.seed = hash2(config.seed, kSaltLoss);
  state.hop_seed = hash2(config.seed, kSaltHop);

  const auto n_events = static_cast<std::uint64_t>(
      std::ceil(config.duration_s / config.interval_s - 1e-9));

  RunTrace trace;
  trace.interval_s = config.interval_s;
  trace.duration_s = config.duration_s;
  trace.map_history.push_back({0, state.map});
  trace.outcomes.reserve(n_events);

  for (std::uint64_t e = 0; e < n_events; ++e) {
    const ChannelMap before = state.map;
    const EventOutcome out = run_event(state, field, *strategy);
    if (state.map != before) {
      trace.map_history.push_back({e, state.map});
    }
    if (out.map_update_sent) {
      trace.updates.push_back({e, state.pending_update->apply_at_event,
                               state.pending_update->map});
    }
    trace.outcomes.push_back(out);
  }
  trace.strategy_resets = strategy->resets();
  trace.min_strategy_step_channels = strategy->min_step_channels();
  return trace;
}

}  // namespace afhsim
