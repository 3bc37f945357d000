#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace circfr {

// splitmix64; used both as a seed mixer and as the core uniform generator so
// that streams are identical across platforms and standard library versions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable seed derivation for (master, a, b) triples, e.g. (seed, n, rep).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s ^= a * 0xff51afd7ed558ccdULL;
  h ^= splitmix64(s);
  s ^= b * 0xc4ceb9fe1a85ec53ULL;
  h ^= splitmix64(s);
  return h;
}

// xoshiro256** seeded via splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Box-Muller; the spare is cached per generator.
  double normal(double mean, double sd) {
    if (spare_) {
      double z = *spare_;
      spare_.reset();
      return mean + sd * z;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    return mean + sd * r * std::cos(a);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
  std::optional<double> spare_;
};

}  // namespace circfr
