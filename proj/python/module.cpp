#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "afhsim/config.hpp"
#include "afhsim/interference.hpp"
#include "afhsim/link_sim.hpp"
#include "afhsim/metrics.hpp"
#include "afhsim/report.hpp"
#include "afhsim/spectrum.hpp"

namespace py = pybind11;
using namespace afhsim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seeded BLE link-layer simulator with pluggable adaptive "
            "frequency hopping strategies";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("data_channel_frequency", &data_channel_frequency_mhz, py::arg("index"),
        "Center frequency in MHz of a BLE data channel (0-36).");

  m.def(
      "overlapped_ble_channels",
      [](int number, int half_width_mhz) {
        return overlapped_ble_channels(WifiChannel(number, half_width_mhz));
      },
      py::arg("wifi_channel"), py::arg("half_width_mhz") = 11,
      "BLE data channels whose centers fall inside the Wifi footprint.");

  py::class_<ScenarioConfig>(m, "Config")
      .def_property_readonly(
          "strategy", [](const ScenarioConfig& c) { return to_string(c.strategy); })
      .def_property_readonly(
          "scenario", [](const ScenarioConfig& c) { return to_string(c.scenario); })
      .def_readwrite("duration_s", &ScenarioConfig::duration_s)
      .def_readwrite("interval_s", &ScenarioConfig::interval_s)
      .def_readwrite("seed", &ScenarioConfig::seed)
      .def_readwrite("repetitions", &ScenarioConfig::repetitions)
      .def_readwrite("c_min", &ScenarioConfig::c_min)
      .def("__repr__", [](const ScenarioConfig& c) {
        return "Config(" + serialize_config(c) + ")";
      });

  m.def("parse_config", &parse_config, py::arg("text"),
        "Parse a JSON scenario description; rejects unknown keys.");
  m.def("serialize_config", &serialize_config, py::arg("config"));

  py::class_<EventOutcome>(m, "EventOutcome")
      .def_readonly("event", &EventOutcome::event)
      .def_readonly("time_s", &EventOutcome::time_s)
      .def_readonly("channel", &EventOutcome::channel)
      .def_readonly("acked", &EventOutcome::acked)
      .def_readonly("was_retransmission", &EventOutcome::was_retransmission)
      .def_readonly("map_update_sent", &EventOutcome::map_update_sent);

  py::class_<RunTrace>(m, "Trace")
      .def_readonly("outcomes", &RunTrace::outcomes)
      .def_property_readonly(
          "map_history",
          [](const RunTrace& t) {
            std::vector<std::pair<std::uint64_t, std::vector<int>>> out;
            out.reserve(t.map_history.size());
            for (const auto& change : t.map_history) {
              out.emplace_back(change.event, change.map.channels());
            }
            return out;
          },
          "List of (event, active channel list), first entry is the initial "
          "map.")
      .def_readonly("duration_s", &RunTrace::duration_s)
      .def_readonly("interval_s", &RunTrace::interval_s);

  py::class_<RunReport>(m, "Report")
      .def_readonly("total_events", &RunReport::total_events)
      .def_readonly("link_pdr", &RunReport::link_pdr)
      .def_readonly("retransmission_overhead",
                    &RunReport::retransmission_overhead)
      .def_readonly("map_updates", &RunReport::map_updates)
      .def_readonly("updates_per_minute", &RunReport::updates_per_minute)
      .def_readonly("update_overhead", &RunReport::update_overhead)
      .def_readonly("resets", &RunReport::resets)
      .def_readonly("active_channels_series",
                    &RunReport::active_channels_series)
      .def_readonly("min_active_channels", &RunReport::min_active_channels)
      .def_readonly("mean_active_channels", &RunReport::mean_active_channels)
      .def_readonly("final_active_channels", &RunReport::final_active_channels)
      .def_property_readonly("per_channel", [](const RunReport& r) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        out.reserve(r.per_channel.size());
        for (const auto& ch : r.per_channel) out.emplace_back(ch.tx, ch.ack);
        return out;
      });

  m.def("run_scenario", &run_scenario, py::arg("config"),
        "Execute one deterministic run; returns the event trace.");
  m.def("aggregate", &aggregate, py::arg("trace"),
        "Fold a trace into the run metrics.");
  m.def(
      "run",
      [](const std::string& config_json) {
        const ScenarioConfig cfg = parse_config(config_json);
        const RunTrace trace = run_scenario(cfg);
        return py::make_tuple(trace, aggregate(trace));
      },
      py::arg("config_json"),
      "Parse, run and aggregate in one call; returns (trace, report).");
}
