#pragma once

#include <vector>

namespace afhsim {

// BLE uses 40 2-MHz channels in the 2.4 GHz band; 37 carry connection data.
// The advertising channels at 2402/2426/2480 MHz are skipped, which splits
// the data channels into two frequency segments: 0-10 at 2404-2424 MHz and
// 11-36 at 2428-2478 MHz.
inline constexpr int kNumDataChannels = 37;

// Center frequency of a data channel. Throws std::domain_error for indices
// outside [0, 36].
int data_channel_frequency_mhz(int index);

// An 802.11 2.4 GHz channel. Centers sit at 2412 + 5*(number-1) MHz; the
// occupancy footprint is [center - half_width, center + half_width]. The
// default half width of 11 MHz models the 22 MHz main lobe only; wider
// observed disturbance is handled by the interference model's adjacent
// splatter, not here.
struct WifiChannel {
  int number;
  int half_width_mhz;

  explicit WifiChannel(int number, int half_width_mhz = 11);
  int center_mhz() const { return 2412 + 5 * (number - 1); }
};

// Every data channel whose center frequency lies within the Wifi footprint,
// in ascending index order. Frequencies are monotone in the channel index,
// so the result is always a contiguous run.
std::vector<int> overlapped_ble_channels(const WifiChannel& wifi);

}  // namespace afhsim
