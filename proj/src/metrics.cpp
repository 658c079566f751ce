#include "afhsim/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace afhsim {

RunReport aggregate(const RunTrace& trace) {
  if (trace.outcomes.empty()) {
    throw std::domain_error("aggregate: no outcomes");
  }
  RunReport r;
  r.total_events = trace.outcomes.size();

  std::size_t retransmissions = 0;
  for (const auto& out : trace.outcomes) {
    auto& ch = r.per_channel[static_cast<std::size_t>(out.channel)];
    ++ch.tx;
    if (out.acked) ++ch.ack;
    if (out.was_retransmission) {
      ++retransmissions;
    } else {
      ++r.first_attempts;
      if (out.acked) ++r.first_attempt_acks;
    }
    if (out.map_update_sent) ++r.map_updates;
  }
  // Event 0 always starts a fresh payload, so first_attempts >= 1.
  r.link_pdr = static_cast<double>(r.first_attempt_acks) /
               static_cast<double>(r.first_attempts);
  r.retransmission_overhead = static_cast<double>(retransmissions) /
                              static_cast<double>(r.total_events);
  r.update_overhead = static_cast<double>(r.map_updates) /
                      static_cast<double>(r.total_events);
  r.updates_per_minute =
      static_cast<double>(r.map_updates) * 60.0 / trace.duration_s;
  r.resets = trace.strategy_resets;

  r.active_channels_series.clear();
  double weighted = 0.0;
  int min_active = ChannelMap::kChannels;
  for (std::size_t i = 0; i < trace.map_history.size(); ++i) {
    const auto& change = trace.map_history[i];
    const double t0 = static_cast<double>(change.event) * trace.interval_s;
    const double t1 =
        i + 1 < trace.map_history.size()
            ? static_cast<double>(trace.map_history[i + 1].event) *
                  trace.interval_s
            : trace.duration_s;
    const int count = change.map.count();
    r.active_channels_series.emplace_back(t0, count);
    weighted += static_cast<double>(count) * (t1 - t0);
    min_active = std::min(min_active, count);
  }
  r.min_active_channels = min_active;
  r.mean_active_channels = weighted / trace.duration_s;
  r.final_active_channels = trace.map_history.back().map.count();
  return r;
}

}  // namespace afhsim
