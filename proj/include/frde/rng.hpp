#pragma once

#include <cmath>
#include <cstdint>

namespace frde {

// SplitMix64 step. The generators below derive their state by absorbing a
// key tuple (master seed, stream tag, agent, round), so every draw is a pure
// function of its key: agents can be evaluated in any order and two runs with
// the same master seed see identical noise.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum class Stream : std::uint64_t {
  Graph     = 0x6772617068ULL,
  Roles     = 0x726f6c6573ULL,
  Theta     = 0x7468657461ULL,
  Noise     = 0x6e6f697365ULL,
  Adversary = 0x6164766572ULL,
};

class Rng {
 public:
  explicit Rng(std::uint64_t master, Stream stream,
               std::uint64_t a = 0, std::uint64_t b = 0)
      : state_(master) {
    absorb(static_cast<std::uint64_t>(stream));
    absorb(a);
    absorb(b);
  }

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log() finite
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  void absorb(std::uint64_t word) {
    state_ ^= word + 0x9e3779b97f4a7c15ULL + (state_ << 6) + (state_ >> 2);
    (void)splitmix64_next(state_);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace frde
