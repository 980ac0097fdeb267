#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace mindouble {

// Cooperative wall-clock limit. Solvers call expired() from their inner loops;
// the clock is only read every kPollInterval calls.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() : end_(Clock::time_point::max()) {}

  // A non-positive limit means "no limit".
  explicit Deadline(double seconds) : Deadline() {
    if (seconds > 0 && seconds < 1e9) {
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds));
    }
  }

  bool expired() {
    if (hit_) return true;
    if (end_ == Clock::time_point::max()) return false;
    if (++calls_ % kPollInterval != 0) return false;
    hit_ = Clock::now() >= end_;
    return hit_;
  }

  bool hit() const { return hit_; }

 private:
  static constexpr std::uint32_t kPollInterval = 256;
  Clock::time_point end_;
  std::uint32_t calls_ = 0;
  bool hit_ = false;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mindouble
