#pragma once

#include <chrono>
#include <cstdint>
#include <functional>

namespace goldcord {

/// Called from long-running searches with the node count so far.
using ProgressFn = std::function<void(std::uint64_t nodes)>;

/// Rate-limits a ProgressFn to one call per interval. The clock is read only
/// every 4096 ticks so the hot loop stays cheap.
class ProgressTicker {
 public:
  explicit ProgressTicker(ProgressFn fn, std::chrono::milliseconds interval = std::chrono::seconds(10))
      : fn_(std::move(fn)), interval_(interval), last_(std::chrono::steady_clock::now()) {}

  void tick(std::uint64_t nodes) {
    if (!fn_ || (nodes & 0xFFF) != 0) return;
    const auto now = std::chrono::steady_clock::now();
    if (now - last_ >= interval_) {
      last_ = now;
      fn_(nodes);
    }
  }

 private:
  ProgressFn fn_;
  std::chrono::milliseconds interval_;
  std::chrono::steady_clock::time_point last_;
};

}  // namespace goldcord
