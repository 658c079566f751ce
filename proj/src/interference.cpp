#include "afhsim/interference.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "afhsim/errors.hpp"
#include "afhsim/rng.hpp"

namespace afhsim {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(std::string(name) + " must be in [0,1], got " +
                      std::to_string(p));
  }
}

void check_schedule(const std::vector<JamSegment>& schedule) {
  double prev_end = 0.0;
  bool first = true;
  for (const auto& seg : schedule) {
    if (seg.end_s < seg.start_s) {
      throw ConfigError("jam segment ends before it starts");
    }
    if (!first && seg.start_s < prev_end) {
      throw ConfigError("jam schedule intervals overlap or are out of order");
    }
    prev_end = seg.end_s;
    first = false;
  }
}

}  // namespace

InterferenceField::InterferenceField(std::vector<InterferenceSource> sources)
    : sources_(std::move(sources)) {
  prepared_.reserve(sources_.size());
  for (const auto& source : sources_) {
    if (const auto* jam = std::get_if<WifiJammerSource>(&source)) {
      check_probability(jam->p_main, "p_main");
      check_probability(jam->p_adj, "p_adj");
      if (jam->p_adj > jam->p_main) {
        throw ConfigError("p_adj must not exceed p_main");
      }
      check_schedule(jam->schedule);
      PreparedJammer prep{{}, jam->p_main, jam->p_adj};
      prep.segments.reserve(jam->schedule.size());
      for (const auto& seg : jam->schedule) {
        PreparedSegment p{seg.start_s, seg.end_s, false, 1, 0};
        if (seg.channel) {
          const auto run = overlapped_ble_channels(*seg.channel);
          p.active = true;
          if (!run.empty()) {
            p.overlap_lo = run.front();
            p.overlap_hi = run.back();
          }
        }
        prep.segments.push_back(p);
      }
      prepared_.emplace_back(std::move(prep));
    } else if (const auto* coex = std::get_if<CoexistenceSource>(&source)) {
      check_probability(coex->p_uniform, "p_uniform");
      prepared_.emplace_back(*coex);
    } else {
      const auto& trace = std::get<TraceSource>(source);
      PreparedTrace prep;
      prep.per_channel.resize(kNumDataChannels);
      double prev_time = 0.0;
      bool first = true;
      for (const auto& row : trace.rows) {
        if (row.channel < 0 || row.channel >= kNumDataChannels) {
          throw ConfigError("trace channel out of range [0,36]: " +
                            std::to_string(row.channel));
        }
        if (!first && row.time_s < prev_time) {
          throw ConfigError("trace rows must be sorted by time_s");
        }
        prev_time = row.time_s;
        first = false;
        prep.per_channel[static_cast<std::size_t>(row.channel)].emplace_back(
            row.time_s, row.lost);
      }
      prepared_.emplace_back(std::move(prep));
    }
  }
}

double InterferenceField::loss_probability(int channel, double t) const {
  if (channel < 0 || channel >= kNumDataChannels) {
    throw std::domain_error("channel out of range [0,36]: " +
                            std::to_string(channel));
  }
  if (t < 0.0) {
    throw std::domain_error("time must be >= 0");
  }
  double pass = 1.0;
  for (const auto& prepared : prepared_) {
    double p = 0.0;
    if (const auto* jam = std::get_if<PreparedJammer>(&prepared)) {
      // Last segment starting at or before t, if t falls inside it.
      const auto it = std::upper_bound(
          jam->segments.begin(), jam->segments.end(), t,
          [](double v, const PreparedSegment& s) { return v < s.start_s; });
      if (it != jam->segments.begin()) {
        const auto& seg = *std::prev(it);
        if (t < seg.end_s && seg.active && seg.overlap_lo <= seg.overlap_hi) {
          if (channel >= seg.overlap_lo && channel <= seg.overlap_hi) {
            p = jam->p_main;
          } else if (channel == seg.overlap_lo - 1 ||
                     channel == seg.overlap_hi + 1) {
            p = jam->p_adj;
          }
        }
      }
    } else if (const auto* coex = std::get_if<CoexistenceSource>(&prepared)) {
      p = coex->p_uniform;
    } else {
      const auto& steps =
          std::get<PreparedTrace>(prepared).per_channel[static_cast<std::size_t>(
              channel)];
      const auto it = std::upper_bound(
          steps.begin(), steps.end(), t,
          [](double v, const std::pair<double, bool>& s) { return v < s.first; });
      if (it != steps.begin()) p = std::prev(it)->second ? 1.0 : 0.0;
    }
    pass *= 1.0 - p;
  }
  return 1.0 - pass;
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
  if (name == "one_off") return ScenarioKind::one_off;
  if (name == "continuous") return ScenarioKind::continuous;
  if (name == "slow_dynamics") return ScenarioKind::slow_dynamics;
  if (name == "fast_dynamics") return ScenarioKind::fast_dynamics;
  if (name == "ble_coexistence") return ScenarioKind::ble_coexistence;
  if (name == "trace") return ScenarioKind::trace;
  throw ConfigError("unknown scenario kind: " + name);
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::one_off: return "one_off";
    case ScenarioKind::continuous: return "continuous";
    case ScenarioKind::slow_dynamics: return "slow_dynamics";
    case ScenarioKind::fast_dynamics: return "fast_dynamics";
    case ScenarioKind::ble_coexistence: return "ble_coexistence";
    case ScenarioKind::trace: return "trace";
  }
  throw ConfigError("unknown scenario kind value");
}

namespace {

double effective_p_adj(const ScenarioParams& params) {
  const double p = params.p_adj.value_or(params.p_main / 3.0);
  check_probability(p, "p_adj");
  return p;
}

// Draws the next pool channel, never repeating the previous pick.
int next_pool_channel(const std::vector<int>& pool, int previous,
                      SplitMix64& rng) {
  if (pool.size() == 1) return pool.front();
  std::size_t prev_idx = pool.size();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] == previous) prev_idx = i;
  }
  const std::uint64_t span =
      pool.size() - (prev_idx < pool.size() ? 1 : 0);
  std::size_t pick = static_cast<std::size_t>(rng.next_below(span));
  if (prev_idx < pool.size() && pick >= prev_idx) ++pick;
  return pool[pick];
}

void check_pool(const std::vector<int>& pool) {
  if (pool.empty()) throw ConfigError("wifi_channel_pool must not be empty");
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] < 1 || pool[i] > 13) {
      throw ConfigError("wifi_channel_pool entries must be in [1,13]");
    }
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i] == pool[j]) {
        throw ConfigError("wifi_channel_pool entries must be distinct");
      }
    }
  }
}

}  // namespace

InterferenceField make_scenario(ScenarioKind kind,
                                const ScenarioParams& params) {
  if (params.duration_s <= 0.0) {
    throw ConfigError("duration_s must be > 0");
  }
  check_probability(params.p_main, "p_main");
  const int halfw = params.wifi_half_width_mhz;

  switch (kind) {
    case ScenarioKind::one_off: {
      WifiJammerSource jam;
      jam.p_main = params.p_main;
      jam.p_adj = effective_p_adj(params);
      jam.schedule.push_back({params.jam_start_s,
                              params.jam_start_s + params.jam_duration_s,
                              WifiChannel(params.wifi_channel, halfw)});
      return InterferenceField({jam});
    }
    case ScenarioKind::continuous: {
      WifiJammerSource jam;
      jam.p_main = params.p_main;
      jam.p_adj = effective_p_adj(params);
      jam.schedule.push_back(
          {0.0, params.duration_s, WifiChannel(params.wifi_channel, halfw)});
      return InterferenceField({jam});
    }
    case ScenarioKind::fast_dynamics:
    case ScenarioKind::slow_dynamics: {
      check_pool(params.channel_pool);
      if (params.segment_s <= 0.0) {
        throw ConfigError("segment_s must be > 0");
      }
      WifiJammerSource jam;
      jam.p_main = params.p_main;
      jam.p_adj = effective_p_adj(params);
      SplitMix64 rng(params.seed);
      // Fast: back-to-back jammed segments. Slow: each jammed segment is
      // followed by an equally long quiet gap.
      const double stride = kind == ScenarioKind::fast_dynamics
                                ? params.segment_s
                                : 2.0 * params.segment_s;
      int previous = -1;
      for (double t0 = 0.0; t0 < params.duration_s; t0 += stride) {
        const int ch = next_pool_channel(params.channel_pool, previous, rng);
        previous = ch;
        const double t1 = std::min(t0 + params.segment_s, params.duration_s);
        jam.schedule.push_back({t0, t1, WifiChannel(ch, halfw)});
      }
      return InterferenceField({jam});
    }
    case ScenarioKind::ble_coexistence:
      return InterferenceField({CoexistenceSource{params.p_uniform}});
    case ScenarioKind::trace:
      return InterferenceField({load_trace_csv(params.trace_path)});
  }
  throw ConfigError("unknown scenario kind value");
}

TraceSource parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("trace: empty file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "time_s,channel,lost") {
    throw ConfigError("trace: expected header 'time_s,channel,lost', got '" +
                      line + "'");
  }
  TraceSource trace;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string time_field, channel_field, lost_field;
    if (!std::getline(row, time_field, ',') ||
        !std::getline(row, channel_field, ',') ||
        !std::getline(row, lost_field)) {
      throw ConfigError("trace: malformed row at line " +
                        std::to_string(line_no));
    }
    try {
      const double time_s = std::stod(time_field);
      const int channel = std::stoi(channel_field);
      const int lost = std::stoi(lost_field);
      if (lost != 0 && lost != 1) {
        throw ConfigError("trace: lost must be 0 or 1 at line " +
                          std::to_string(line_no));
      }
      trace.rows.push_back({time_s, channel, lost == 1});
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("trace: malformed row at line " +
                        std::to_string(line_no));
    }
  }
  return trace;
}

TraceSource load_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("trace_path: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trace_csv(buf.str());
}

}  // namespace afhsim
