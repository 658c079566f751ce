#include "afhsim/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace afhsim {

namespace {

std::string fmt(double value, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

int active_channels_at(const RunTrace& trace, double t) {
  int count = trace.map_history.front().map.count();
  for (const auto& change : trace.map_history) {
    if (static_cast<double>(change.event) * trace.interval_s <= t) {
      count = change.map.count();
    } else {
      break;
    }
  }
  return count;
}

}  // namespace

std::vector<RepetitionResult> run_repetitions(const ScenarioConfig& config) {
  std::vector<RepetitionResult> results;
  results.reserve(static_cast<std::size_t>(config.repetitions));
  for (int i = 0; i < config.repetitions; ++i) {
    ScenarioConfig rep = config;
    rep.seed = config.seed + static_cast<std::uint64_t>(i);
    RunTrace trace = run_scenario(rep);
    RunReport report = aggregate(trace);
    results.push_back({rep.seed, std::move(trace), std::move(report)});
  }
  return results;
}

std::string summary_csv(const ScenarioConfig& config,
                        const std::vector<RepetitionResult>& results) {
  std::ostringstream out;
  out << "repetition,seed,strategy,scenario,duration_s,interval_s,events,"
         "link_pdr,retransmission_overhead,map_updates,updates_per_minute,"
         "update_overhead,resets,min_active_channels,mean_active_channels,"
         "final_active_channels\n";

  struct Stat {
    double sum = 0.0, min = 0.0, max = 0.0;
    bool init = false;
    void add(double v) {
      sum += v;
      min = init ? std::min(min, v) : v;
      max = init ? std::max(max, v) : v;
      init = true;
    }
  };
  Stat pdr, retx, updates, upm, overhead, resets, min_act, mean_act, final_act;

  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i].report;
    out << i << ',' << results[i].seed << ',' << to_string(config.strategy)
        << ',' << to_string(config.scenario) << ','
        << fmt(config.duration_s, 3) << ',' << fmt(config.interval_s, 4) << ','
        << r.total_events << ',' << fmt(r.link_pdr) << ','
        << fmt(r.retransmission_overhead) << ',' << r.map_updates << ','
        << fmt(r.updates_per_minute) << ',' << fmt(r.update_overhead) << ','
        << r.resets << ',' << r.min_active_channels << ','
        << fmt(r.mean_active_channels) << ',' << r.final_active_channels
        << '\n';
    pdr.add(r.link_pdr);
    retx.add(r.retransmission_overhead);
    updates.add(static_cast<double>(r.map_updates));
    upm.add(r.updates_per_minute);
    overhead.add(r.update_overhead);
    resets.add(static_cast<double>(r.resets));
    min_act.add(static_cast<double>(r.min_active_channels));
    mean_act.add(r.mean_active_channels);
    final_act.add(static_cast<double>(r.final_active_channels));
  }

  const double n = static_cast<double>(results.size());
  const auto row = [&](const char* label, auto pick) {
    out << label << ",," << to_string(config.strategy) << ','
        << to_string(config.scenario) << ',' << fmt(config.duration_s, 3)
        << ',' << fmt(config.interval_s, 4) << ','
        << results.front().report.total_events << ',' << fmt(pick(pdr)) << ','
        << fmt(pick(retx)) << ',' << fmt(pick(updates)) << ','
        << fmt(pick(upm)) << ',' << fmt(pick(overhead)) << ','
        << fmt(pick(resets)) << ',' << fmt(pick(min_act)) << ','
        << fmt(pick(mean_act)) << ',' << fmt(pick(final_act)) << '\n';
  };
  row("mean", [&](const Stat& s) { return s.sum / n; });
  row("min", [](const Stat& s) { return s.min; });
  row("max", [](const Stat& s) { return s.max; });
  return out.str();
}

std::string timeseries_csv(const std::vector<RepetitionResult>& results) {
  std::ostringstream out;
  out << "repetition,time_s,active_channels,cumulative_pdr\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& trace = results[i].trace;
    std::size_t next = 0;
    std::uint64_t first_attempts = 0;
    std::uint64_t first_attempt_acks = 0;
    for (double t = 1.0; t <= trace.duration_s + 1e-9; t += 1.0) {
      while (next < trace.outcomes.size() &&
             trace.outcomes[next].time_s < t - 1e-12) {
        const auto& o = trace.outcomes[next];
        if (!o.was_retransmission) {
          ++first_attempts;
          if (o.acked) ++first_attempt_acks;
        }
        ++next;
      }
      const double pdr =
          first_attempts == 0
              ? 1.0
              : static_cast<double>(first_attempt_acks) /
                    static_cast<double>(first_attempts);
      out << i << ',' << fmt(t, 2) << ',' << active_channels_at(trace, t)
          << ',' << fmt(pdr) << '\n';
    }
  }
  return out.str();
}

std::string events_csv(const std::vector<RepetitionResult>& results) {
  std::ostringstream out;
  out << "repetition,event,time_s,channel,acked,was_retransmission,"
         "map_update_sent\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const auto& o : results[i].trace.outcomes) {
      out << i << ',' << o.event << ',' << fmt(o.time_s, 6) << ',' << o.channel
          << ',' << (o.acked ? 1 : 0) << ',' << (o.was_retransmission ? 1 : 0)
          << ',' << (o.map_update_sent ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

std::vector<RepetitionResult> run_and_report(const ScenarioConfig& config,
                                             const std::string& out_dir) {
  auto results = run_repetitions(config);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "summary.csv", summary_csv(config, results));
  write_file(dir / "timeseries.csv", timeseries_csv(results));
  if (config.write_events) {
    write_file(dir / "events.csv", events_csv(results));
  }
  return results;
}

void run_compare(const ScenarioConfig& config,
                 const std::vector<StrategyKind>& strategies,
                 const std::string& out_dir) {
  std::cout << "strategy,mean_link_pdr,mean_update_overhead,"
               "mean_active_channels,resets_per_run\n";
  for (const StrategyKind strategy : strategies) {
    ScenarioConfig cfg = config;
    cfg.strategy = strategy;
    const auto results = run_and_report(
        cfg, (std::filesystem::path(out_dir) / to_string(strategy)).string());
    double pdr = 0.0, overhead = 0.0, active = 0.0, resets = 0.0;
    for (const auto& r : results) {
      pdr += r.report.link_pdr;
      overhead += r.report.update_overhead;
      active += r.report.mean_active_channels;
      resets += static_cast<double>(r.report.resets);
    }
    const double n = static_cast<double>(results.size());
    std::cout << to_string(strategy) << ',' << fmt(pdr / n) << ','
              << fmt(overhead / n) << ',' << fmt(active / n, 2) << ','
              << fmt(resets / n, 2) << '\n';
  }
}

}  // namespace afhsim
