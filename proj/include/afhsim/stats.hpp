#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace afhsim {

// Fixed-capacity FIFO of ack/loss outcomes with O(1) delivery-ratio reads.
class BoolWindow {
 public:
  explicit BoolWindow(int capacity)
      : ring_(static_cast<std::size_t>(capacity)) {}

  void push(bool value) {
    const int cap = capacity();
    if (size_ == cap) {
      trues_ -= ring_[static_cast<std::size_t>(head_)];
      ring_[static_cast<std::size_t>(head_)] = value ? 1 : 0;
      head_ = (head_ + 1) % cap;
    } else {
      ring_[static_cast<std::size_t>((head_ + size_) % cap)] = value ? 1 : 0;
      ++size_;
    }
    trues_ += value ? 1 : 0;
  }

  void clear() {
    head_ = 0;
    size_ = 0;
    trues_ = 0;
  }

  int capacity() const { return static_cast<int>(ring_.size()); }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int trues() const { return trues_; }
  int falses() const { return size_ - trues_; }

  // Delivery ratio over the window contents; 1.0 when empty.
  double ratio() const {
    return size_ == 0 ? 1.0 : static_cast<double>(trues_) / size_;
  }

 private:
  std::vector<std::uint8_t> ring_;
  int head_ = 0;
  int size_ = 0;
  int trues_ = 0;
};

// Per-channel estimator state. The short window is an optimistic, recent
// view: it is cleared whenever the channel's exclusion status changes. The
// long window persists across exclusions and feeds both the loss-count
// backoff and the C_min backfill ordering.
struct ChannelStats {
  BoolWindow short_window;
  BoolWindow long_window;
  // PDR_short captured at the moment of exclusion; stands in for the live
  // value while the channel collects no traffic.
  double snapshot_pdr_short = 1.0;
  std::optional<std::uint64_t> excluded_since_event;

  ChannelStats(int window_short, int window_long)
      : short_window(window_short), long_window(window_long) {}

  void observe(bool acked) {
    short_window.push(acked);
    long_window.push(acked);
  }

  double pdr_short() const { return short_window.ratio(); }
  double pdr_long() const { return long_window.ratio(); }
  int losses(int l_max) const { return std::min(long_window.falses(), l_max); }
};

}  // namespace afhsim
