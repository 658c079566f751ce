"""Seeded BLE link-layer simulator with pluggable AFH strategies."""

from ._core import (
    Config,
    ConfigError,
    EventOutcome,
    Report,
    Trace,
    aggregate,
    data_channel_frequency,
    overlapped_ble_channels,
    parse_config,
    run,
    run_scenario,
    serialize_config,
)

__all__ = [
    "Config",
    "ConfigError",
    "EventOutcome",
    "Report",
    "Trace",
    "aggregate",
    "data_channel_frequency",
    "overlapped_ble_channels",
    "parse_config",
    "run",
    "run_scenario",
    "serialize_config",
]
