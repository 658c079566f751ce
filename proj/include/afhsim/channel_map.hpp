#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "afhsim/spectrum.hpp"

namespace afhsim {

// The set of data channels a connection may hop on, stored as a 37-bit mask.
// Value type; equality is set equality.
class ChannelMap {
 public:
  static constexpr int kChannels = kNumDataChannels;

  ChannelMap() = default;

  static ChannelMap all() {
    ChannelMap m;
    m.bits_ = (std::uint64_t{1} << kChannels) - 1;
    return m;
  }

  bool contains(int channel) const { return (bits_ >> check(channel)) & 1u; }
  void insert(int channel) { bits_ |= std::uint64_t{1} << check(channel); }
  void erase(int channel) { bits_ &= ~(std::uint64_t{1} << check(channel)); }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  std::vector<int> channels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int c = 0; c < kChannels; ++c)
      if ((bits_ >> c) & 1u) out.push_back(c);
    return out;
  }

  friend bool operator==(const ChannelMap&, const ChannelMap&) = default;

 private:
  static int check(int channel) {
    if (channel < 0 || channel >= kChannels) {
      throw std::domain_error("channel index out of range [0,36]: " +
                              std::to_string(channel));
    }
    return channel;
  }

  std::uint64_t bits_ = 0;
};

}  // namespace afhsim
