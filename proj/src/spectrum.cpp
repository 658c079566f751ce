#include "afhsim/spectrum.hpp"

#include <stdexcept>
#include <string>

namespace afhsim {

int data_channel_frequency_mhz(int index) {
  if (index < 0 || index >= kNumDataChannels) {
    throw std::domain_error("data channel index out of range [0,36]: " +
                            std::to_string(index));
  }
  // 2402, 2426 and 2480 MHz are advertising channels and are skipped.
  if (index <= 10) return 2404 + 2 * index;
  return 2428 + 2 * (index - 11);
}

WifiChannel::WifiChannel(int number, int half_width_mhz)
    : number(number), half_width_mhz(half_width_mhz) {
  if (number < 1 || number > 13) {
    throw std::domain_error("wifi channel out of range [1,13]: " +
                            std::to_string(number));
  }
  if (half_width_mhz < 0) {
    throw std::domain_error("wifi half width must be >= 0, got " +
                            std::to_string(half_width_mhz));
  }
}

std::vector<int> overlapped_ble_channels(const WifiChannel& wifi) {
  std::vector<int> out;
  const int lo = wifi.center_mhz() - wifi.half_width_mhz;
  const int hi = wifi.center_mhz() + wifi.half_width_mhz;
  for (int c = 0; c < kNumDataChannels; ++c) {
    const int f = data_channel_frequency_mhz(c);
    if (f >= lo && f <= hi) out.push_back(c);
  }
  return out;
}

}  // namespace afhsim
