#include "afhsim/strategy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "afhsim/errors.hpp"

namespace afhsim {

void EafhParams::validate() const {
  if (!(t_exclu > 0.0 && t_exclu <= 1.0)) {
    throw ConfigError("t_exclu must be in (0,1], got " +
                      std::to_string(t_exclu));
  }
  if (!(alpha >= 0.0)) {
    throw ConfigError("alpha must be >= 0, got " + std::to_string(alpha));
  }
  if (!(d_seconds > 0.0)) {
    throw ConfigError("d_seconds must be > 0, got " + std::to_string(d_seconds));
  }
  if (window_short < 1) {
    throw ConfigError("window_short must be >= 1, got " +
                      std::to_string(window_short));
  }
  if (window_long < 1) {
    throw ConfigError("window_long must be >= 1, got " +
                      std::to_string(window_long));
  }
  if (l_max < 0 || l_max > 62) {
    throw ConfigError("l_max must be in [0,62], got " + std::to_string(l_max));
  }
  if (c_min < 2 || c_min > ChannelMap::kChannels) {
    throw ConfigError("c_min must be in [2,37], got " + std::to_string(c_min));
  }
}

void PdrExclusion::Params::validate() const {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ConfigError("pdr_threshold must be in (0,1], got " +
                      std::to_string(threshold));
  }
  if (window < 1) {
    throw ConfigError("pdr_window must be >= 1, got " + std::to_string(window));
  }
  if (c_min < 2 || c_min > ChannelMap::kChannels) {
    throw ConfigError("c_min must be in [2,37], got " + std::to_string(c_min));
  }
}

std::uint64_t exclusion_duration_events(double d_seconds, double interval_s) {
  if (!(interval_s > 0.0)) {
    throw ConfigError("interval_s must be > 0");
  }
  const auto events =
      static_cast<std::uint64_t>(std::llround(d_seconds / interval_s));
  return events > 0 ? events : 1;
}

double u_stale(const StatsArray& stats, int channel, std::uint64_t now_event,
               std::uint64_t d_events, int l_max) {
  const auto& s = stats.at(static_cast<std::size_t>(channel));
  if (!s.excluded_since_event) {
    throw std::domain_error("u_stale: channel " + std::to_string(channel) +
                            " is not excluded");
  }
  const auto counter =
      static_cast<double>(now_event - *s.excluded_since_event);
  const double required =
      static_cast<double>(d_events) *
      static_cast<double>(std::uint64_t{1} << s.losses(l_max));
  return counter / required;
}

double u_near(const StatsArray& stats, int channel, const ChannelMap& active) {
  double sum = 0.0;
  int n = 0;
  for (const int nb : {channel - 1, channel + 1}) {
    if (nb < 0 || nb >= ChannelMap::kChannels) continue;
    const auto& s = stats.at(static_cast<std::size_t>(nb));
    sum += active.contains(nb) ? s.pdr_short() : s.snapshot_pdr_short;
    ++n;
  }
  return -(1.0 - sum / n);
}

double uncertainty(const StatsArray& stats, int channel,
                   std::uint64_t now_event, const ChannelMap& active,
                   std::uint64_t d_events, const EafhParams& params) {
  return u_stale(stats, channel, now_event, d_events, params.l_max) +
         params.alpha * u_near(stats, channel, active);
}

std::vector<int> backfill_channels(const std::vector<double>& pdr_long,
                                   const ChannelMap& working, int needed) {
  std::vector<int> candidates;
  for (int c = 0; c < ChannelMap::kChannels; ++c) {
    if (!working.contains(c)) candidates.push_back(c);
  }
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    const double pa = pdr_long[static_cast<std::size_t>(a)];
    const double pb = pdr_long[static_cast<std::size_t>(b)];
    if (pa != pb) return pa > pb;
    return a < b;
  });
  if (needed < 0) needed = 0;
  if (static_cast<int>(candidates.size()) > needed) {
    candidates.resize(static_cast<std::size_t>(needed));
  }
  return candidates;
}

PdrExclusion::PdrExclusion(Params params) : params_(params) {
  params_.validate();
  windows_.reserve(ChannelMap::kChannels);
  for (int c = 0; c < ChannelMap::kChannels; ++c) {
    windows_.emplace_back(params_.window);
  }
}

void PdrExclusion::observe(int channel, bool acked) {
  windows_.at(static_cast<std::size_t>(channel)).push(acked);
}

std::optional<ChannelMap> PdrExclusion::step(const ChannelMap& in_force,
                                             std::uint64_t /*now_event*/,
                                             bool update_pending) {
  ChannelMap working = in_force;
  for (int c = 0; c < ChannelMap::kChannels; ++c) {
    const auto& win = windows_[static_cast<std::size_t>(c)];
    if (working.contains(c) && !win.empty() && win.ratio() < params_.threshold) {
      working.erase(c);
    }
  }
  if (working.count() < params_.c_min) {
    // Full reset: everything comes back and the channels that were out
    // restart from clean statistics. While an update is pending the decision
    // is discarded, and so are its side effects; it is recomputed once the
    // in-flight update lands.
    if (!update_pending) {
      for (int c = 0; c < ChannelMap::kChannels; ++c) {
        if (!working.contains(c)) windows_[static_cast<std::size_t>(c)].clear();
      }
      ++resets_;
    }
    working = ChannelMap::all();
  }
  min_step_channels_ = std::min(min_step_channels_, working.count());
  if (working != in_force && !update_pending) return working;
  return std::nullopt;
}

Eafh::Eafh(EafhParams params, double interval_s) : params_(params) {
  params_.validate();
  d_events_ = exclusion_duration_events(params_.d_seconds, interval_s);
  stats_.reserve(ChannelMap::kChannels);
  for (int c = 0; c < ChannelMap::kChannels; ++c) {
    stats_.emplace_back(params_.window_short, params_.window_long);
  }
}

void Eafh::observe(int channel, bool acked) {
  stats_.at(static_cast<std::size_t>(channel)).observe(acked);
}

void Eafh::reinstate(ChannelMap& map, int channel) {
  map.insert(channel);
  auto& s = stats_[static_cast<std::size_t>(channel)];
  s.short_window.clear();
  s.excluded_since_event.reset();
}

std::optional<ChannelMap> Eafh::step(const ChannelMap& in_force,
                                     std::uint64_t now_event,
                                     bool update_pending) {
  ChannelMap working = in_force;

  // 1. Exclusion. Needs evidence: an empty short window never excludes.
  for (int c = 0; c < ChannelMap::kChannels; ++c) {
    auto& s = stats_[static_cast<std::size_t>(c)];
    if (!working.contains(c) || s.short_window.empty()) continue;
    const double pdr = s.pdr_short();
    if (pdr < params_.t_exclu) {
      working.erase(c);
      s.snapshot_pdr_short = pdr;
      s.short_window.clear();
      s.excluded_since_event = now_event;
    }
  }

  // 2. Exploration. Uncertainty is scored for all excluded channels against
  // the post-exclusion map, then the qualifying set is included at once.
  std::array<bool, ChannelMap::kChannels> include{};
  for (int c = 0; c < ChannelMap::kChannels; ++c) {
    if (working.contains(c)) continue;
    include[static_cast<std::size_t>(c)] =
        uncertainty(stats_, c, now_event, working, d_events_, params_) >=
        params_.t_incl;
  }
  for (int c = 0; c < ChannelMap::kChannels; ++c) {
    if (include[static_cast<std::size_t>(c)]) reinstate(working, c);
  }

  // 3. Keep at least C_min channels, preferring long-term reliability.
  if (working.count() < params_.c_min) {
    std::vector<double> pdr_long(ChannelMap::kChannels);
    for (int c = 0; c < ChannelMap::kChannels; ++c) {
      pdr_long[static_cast<std::size_t>(c)] =
          stats_[static_cast<std::size_t>(c)].pdr_long();
    }
    for (const int c : backfill_channels(pdr_long, working,
                                         params_.c_min - working.count())) {
      reinstate(working, c);
    }
  }
  min_step_channels_ = std::min(min_step_channels_, working.count());

  // 4. Hand over for the update procedure, unless one is already in flight.
  if (working != in_force && !update_pending) return working;
  return std::nullopt;
}

}  // namespace afhsim
