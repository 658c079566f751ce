#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afhsim/channel_map.hpp"
#include "afhsim/stats.hpp"

namespace afhsim {

using StatsArray = std::vector<ChannelStats>;  // one entry per data channel

struct EafhParams {
  double t_exclu = 0.90;   // exclude active channels with PDR_short below this
  double t_incl = 1.0;     // re-include excluded channels once U reaches this
  double alpha = 2.0;      // weight of the neighbor term in U
  double d_seconds = 2.0;  // base exclusion duration before backoff doubling
  int window_short = 15;
  int window_long = 30;
  int l_max = 8;           // cap on the loss count feeding 2^losses
  int c_min = 8;

  void validate() const;  // throws ConfigError naming the bad field
};

// Connection events covered by the base exclusion duration D.
std::uint64_t exclusion_duration_events(double d_seconds, double interval_s);

// Staleness term: counter / (D_events * 2^losses). Grows by a fixed step per
// event while the channel stays excluded; halves (at fixed counter) for each
// additional loss in the long window. Throws std::domain_error when called
// on a channel that is not excluded.
double u_stale(const StatsArray& stats, int channel, std::uint64_t now_event,
               std::uint64_t d_events, int l_max);

// Neighbor-correlation term: -(1 - mean neighbor PDR_short), in [-1, 0].
// Active neighbors contribute their live PDR_short; excluded neighbors
// contribute the snapshot taken when they were excluded. Edge channels have
// a single neighbor.
double u_near(const StatsArray& stats, int channel, const ChannelMap& active);

// U = u_stale + alpha * u_near.
double uncertainty(const StatsArray& stats, int channel,
                   std::uint64_t now_event, const ChannelMap& active,
                   std::uint64_t d_events, const EafhParams& params);

// The excluded channels that step 3 brings back when fewer than C_min remain:
// highest PDR_long first, ties broken by lowest index. Only the ordering of
// pdr_long matters. Returns at most `needed` channels.
std::vector<int> backfill_channels(const std::vector<double>& pdr_long,
                                   const ChannelMap& working, int needed);

// A channel-map policy attached to one connection. The engine calls
// observe() with the finished event's (channel, acked), then step(). step()
// may return a replacement map; while a map update is in flight the engine
// passes update_pending = true and the strategy must keep its bookkeeping
// moving but return nothing.
class AfhStrategy {
 public:
  virtual ~AfhStrategy() = default;

  virtual void observe(int channel, bool acked) = 0;
  virtual std::optional<ChannelMap> step(const ChannelMap& in_force,
                                         std::uint64_t now_event,
                                         bool update_pending) = 0;
  virtual std::string_view name() const = 0;

  // Full-map resets performed so far (PDR-Exclusion only).
  virtual int resets() const { return 0; }
  // Smallest channel count any step produced, including gated steps.
  virtual int min_step_channels() const { return ChannelMap::kChannels; }
};

// Keeps all 37 channels forever.
class NoAfh final : public AfhStrategy {
 public:
  void observe(int, bool) override {}
  std::optional<ChannelMap> step(const ChannelMap&, std::uint64_t,
                                 bool) override {
    return std::nullopt;
  }
  std::string_view name() const override { return "no_afh"; }
};

// Exclusion-only baseline: drop active channels whose windowed PDR falls
// below the threshold; once fewer than C_min channels remain, bring back all
// 37 and reset the statistics of the channels that were out.
class PdrExclusion final : public AfhStrategy {
 public:
  struct Params {
    double threshold = 0.95;
    int window = 30;
    int c_min = 8;

    void validate() const;
  };

  explicit PdrExclusion(Params params);

  void observe(int channel, bool acked) override;
  std::optional<ChannelMap> step(const ChannelMap& in_force,
                                 std::uint64_t now_event,
                                 bool update_pending) override;
  std::string_view name() const override { return "pdr_exclusion"; }
  int resets() const override { return resets_; }
  int min_step_channels() const override { return min_step_channels_; }

 private:
  Params params_;
  std::vector<BoolWindow> windows_;
  int resets_ = 0;
  int min_step_channels_ = ChannelMap::kChannels;
};

// Exclusion with informed exploration. Each step:
//   1. exclude active channels whose PDR_short (non-empty window) is below
//      T_exclu, snapshotting and clearing their short window;
//   2. score every excluded channel's uncertainty U against the
//      post-exclusion map and re-include those with U >= T_incl;
//   3. if fewer than C_min channels remain, backfill by highest PDR_long;
//   4. hand the changed map to the engine unless an update is pending.
class Eafh final : public AfhStrategy {
 public:
  Eafh(EafhParams params, double interval_s);

  void observe(int channel, bool acked) override;
  std::optional<ChannelMap> step(const ChannelMap& in_force,
                                 std::uint64_t now_event,
                                 bool update_pending) override;
  std::string_view name() const override { return "eafh"; }
  int min_step_channels() const override { return min_step_channels_; }

  const StatsArray& stats() const { return stats_; }
  const EafhParams& params() const { return params_; }
  std::uint64_t d_events() const { return d_events_; }

 private:
  void reinstate(ChannelMap& map, int channel);

  EafhParams params_;
  std::uint64_t d_events_;
  StatsArray stats_;
  int min_step_channels_ = ChannelMap::kChannels;
};

}  // namespace afhsim
