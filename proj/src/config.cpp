#include "afhsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace afhsim {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "strategy",      "scenario",       "duration_s",
    "interval_s",    "seed",           "repetitions",
    "c_min",         "t_exclu",        "t_incl",
    "alpha",         "d_seconds",      "window_short",
    "window_long",   "l_max",          "pdr_threshold",
    "pdr_window",    "p_main",         "p_adj",
    "p_uniform",     "wifi_channel",   "wifi_half_width_mhz",
    "segment_s",     "wifi_channel_pool", "jam_start_s",
    "jam_duration_s", "trace_path",    "out_dir",
    "write_events",
};

template <typename T>
T get_as(const json& doc, const std::string& key, const char* type_name) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' must be a " + type_name);
  }
}

}  // namespace

StrategyKind strategy_kind_from_string(const std::string& name) {
  if (name == "no_afh") return StrategyKind::no_afh;
  if (name == "pdr_exclusion") return StrategyKind::pdr_exclusion;
  if (name == "eafh") return StrategyKind::eafh;
  throw ConfigError("unknown strategy: " + name);
}

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::no_afh: return "no_afh";
    case StrategyKind::pdr_exclusion: return "pdr_exclusion";
    case StrategyKind::eafh: return "eafh";
  }
  throw ConfigError("unknown strategy value");
}

void ScenarioConfig::validate() const {
  if (!(duration_s > 0.0)) throw ConfigError("duration_s must be > 0");
  if (!(interval_s > 0.0)) throw ConfigError("interval_s must be > 0");
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (c_min < 2 || c_min > ChannelMap::kChannels) {
    throw ConfigError("c_min must be in [2,37], got " + std::to_string(c_min));
  }
  eafh.validate();
  pdr.validate();
  if (!(interference.p_main >= 0.0 && interference.p_main <= 1.0)) {
    throw ConfigError("p_main must be in [0,1]");
  }
  if (interference.p_adj &&
      !(*interference.p_adj >= 0.0 && *interference.p_adj <= 1.0)) {
    throw ConfigError("p_adj must be in [0,1]");
  }
  if (!(interference.p_uniform >= 0.0 && interference.p_uniform <= 1.0)) {
    throw ConfigError("p_uniform must be in [0,1]");
  }
  if (interference.wifi_channel < 1 || interference.wifi_channel > 13) {
    throw ConfigError("wifi_channel must be in [1,13]");
  }
  if (interference.wifi_half_width_mhz < 0) {
    throw ConfigError("wifi_half_width_mhz must be >= 0");
  }
  if (!(interference.segment_s > 0.0)) {
    throw ConfigError("segment_s must be > 0");
  }
  if (interference.jam_start_s < 0.0) {
    throw ConfigError("jam_start_s must be >= 0");
  }
  if (!(interference.jam_duration_s > 0.0)) {
    throw ConfigError("jam_duration_s must be > 0");
  }
  if (scenario == ScenarioKind::trace && interference.trace_path.empty()) {
    throw ConfigError("trace_path is required for the trace scenario");
  }
}

ScenarioConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  for (const auto& item : doc.items()) {
    if (!kKnownKeys.count(item.key())) {
      throw ConfigError("unknown config key: '" + item.key() + "'");
    }
  }

  ScenarioConfig cfg;
  if (doc.contains("strategy")) {
    cfg.strategy = strategy_kind_from_string(
        get_as<std::string>(doc, "strategy", "string"));
  }
  if (doc.contains("scenario")) {
    cfg.scenario = scenario_kind_from_string(
        get_as<std::string>(doc, "scenario", "string"));
  }
  if (doc.contains("duration_s")) {
    cfg.duration_s = get_as<double>(doc, "duration_s", "number");
  }
  if (doc.contains("interval_s")) {
    cfg.interval_s = get_as<double>(doc, "interval_s", "number");
  }
  if (doc.contains("seed")) {
    cfg.seed = get_as<std::uint64_t>(doc, "seed", "nonnegative integer");
  }
  if (doc.contains("repetitions")) {
    cfg.repetitions = get_as<int>(doc, "repetitions", "integer");
  }
  if (doc.contains("c_min")) {
    cfg.c_min = get_as<int>(doc, "c_min", "integer");
  }
  if (doc.contains("t_exclu")) {
    cfg.eafh.t_exclu = get_as<double>(doc, "t_exclu", "number");
  }
  if (doc.contains("t_incl")) {
    cfg.eafh.t_incl = get_as<double>(doc, "t_incl", "number");
  }
  if (doc.contains("alpha")) {
    cfg.eafh.alpha = get_as<double>(doc, "alpha", "number");
  }
  if (doc.contains("d_seconds")) {
    cfg.eafh.d_seconds = get_as<double>(doc, "d_seconds", "number");
  }
  if (doc.contains("window_short")) {
    cfg.eafh.window_short = get_as<int>(doc, "window_short", "integer");
  }
  if (doc.contains("window_long")) {
    cfg.eafh.window_long = get_as<int>(doc, "window_long", "integer");
  }
  if (doc.contains("l_max")) {
    cfg.eafh.l_max = get_as<int>(doc, "l_max", "integer");
  }
  if (doc.contains("pdr_threshold")) {
    cfg.pdr.threshold = get_as<double>(doc, "pdr_threshold", "number");
  }
  if (doc.contains("pdr_window")) {
    cfg.pdr.window = get_as<int>(doc, "pdr_window", "integer");
  }
  if (doc.contains("p_main")) {
    cfg.interference.p_main = get_as<double>(doc, "p_main", "number");
  }
  if (doc.contains("p_adj")) {
    cfg.interference.p_adj = get_as<double>(doc, "p_adj", "number");
  }
  if (doc.contains("p_uniform")) {
    cfg.interference.p_uniform = get_as<double>(doc, "p_uniform", "number");
  }
  if (doc.contains("wifi_channel")) {
    cfg.interference.wifi_channel = get_as<int>(doc, "wifi_channel", "integer");
  }
  if (doc.contains("wifi_half_width_mhz")) {
    cfg.interference.wifi_half_width_mhz =
        get_as<int>(doc, "wifi_half_width_mhz", "integer");
  }
  if (doc.contains("segment_s")) {
    cfg.interference.segment_s = get_as<double>(doc, "segment_s", "number");
  }
  if (doc.contains("wifi_channel_pool")) {
    cfg.interference.channel_pool =
        get_as<std::vector<int>>(doc, "wifi_channel_pool", "integer array");
  }
  if (doc.contains("jam_start_s")) {
    cfg.interference.jam_start_s = get_as<double>(doc, "jam_start_s", "number");
  }
  if (doc.contains("jam_duration_s")) {
    cfg.interference.jam_duration_s =
        get_as<double>(doc, "jam_duration_s", "number");
  }
  if (doc.contains("trace_path")) {
    cfg.interference.trace_path =
        get_as<std::string>(doc, "trace_path", "string");
  }
  if (doc.contains("out_dir")) {
    cfg.out_dir = get_as<std::string>(doc, "out_dir", "string");
  }
  if (doc.contains("write_events")) {
    cfg.write_events = get_as<bool>(doc, "write_events", "boolean");
  }

  cfg.eafh.c_min = cfg.c_min;
  cfg.pdr.c_min = cfg.c_min;
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  json doc;
  doc["strategy"] = to_string(cfg.strategy);
  doc["scenario"] = to_string(cfg.scenario);
  doc["duration_s"] = cfg.duration_s;
  doc["interval_s"] = cfg.interval_s;
  doc["seed"] = cfg.seed;
  doc["repetitions"] = cfg.repetitions;
  doc["c_min"] = cfg.c_min;
  doc["t_exclu"] = cfg.eafh.t_exclu;
  doc["t_incl"] = cfg.eafh.t_incl;
  doc["alpha"] = cfg.eafh.alpha;
  doc["d_seconds"] = cfg.eafh.d_seconds;
  doc["window_short"] = cfg.eafh.window_short;
  doc["window_long"] = cfg.eafh.window_long;
  doc["l_max"] = cfg.eafh.l_max;
  doc["pdr_threshold"] = cfg.pdr.threshold;
  doc["pdr_window"] = cfg.pdr.window;
  doc["p_main"] = cfg.interference.p_main;
  if (cfg.interference.p_adj) doc["p_adj"] = *cfg.interference.p_adj;
  doc["p_uniform"] = cfg.interference.p_uniform;
  doc["wifi_channel"] = cfg.interference.wifi_channel;
  doc["wifi_half_width_mhz"] = cfg.interference.wifi_half_width_mhz;
  doc["segment_s"] = cfg.interference.segment_s;
  doc["wifi_channel_pool"] = cfg.interference.channel_pool;
  doc["jam_start_s"] = cfg.interference.jam_start_s;
  doc["jam_duration_s"] = cfg.interference.jam_duration_s;
  if (!cfg.interference.trace_path.empty()) {
    doc["trace_path"] = cfg.interference.trace_path;
  }
  doc["out_dir"] = cfg.out_dir;
  doc["write_events"] = cfg.write_events;
  return doc.dump(2);
}

std::unique_ptr<AfhStrategy> make_strategy(const ScenarioConfig& config) {
  switch (config.strategy) {
    case StrategyKind::no_afh:
      return std::make_unique<NoAfh>();
    case StrategyKind::pdr_exclusion: {
      auto params = config.pdr;
      params.c_min = config.c_min;
      return std::make_unique<PdrExclusion>(params);
    }
    case StrategyKind::eafh: {
      auto params = config.eafh;
      params.c_min = config.c_min;
      return std::make_unique<Eafh>(params, config.interval_s);
    }
  }
  throw ConfigError("unknown strategy value");
}

}  // namespace afhsim
