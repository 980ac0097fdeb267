#pragma once

#include <cstdint>

namespace mindouble {

// 64-bit LCG with the PCG multiplier/increment. Chosen so that any
// reimplementation reproduces the same instances bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Modulo bias is accepted; t is tiny compared to 2^64 here.
  std::uint64_t uniform_int(std::uint64_t t) { return next() % t; }

  bool bernoulli(double p) {
    double u = static_cast<double>(next() >> 11) / 9007199254740992.0;  // 2^53
    return u < p;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace mindouble
