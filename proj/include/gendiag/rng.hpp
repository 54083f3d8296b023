#pragma once

#include <cmath>
#include <cstdint>

namespace gendiag {

/// SplitMix64 (Steele, Lea, Vigna).  Chosen over std::mt19937_64 +
/// std::normal_distribution because the whole pipeline is specified by the
/// algorithm, so streams are bit-identical across platforms and standard
/// library implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1].
  double next_unit() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; pairs are generated eagerly and the
  /// spare is cached, so the draw sequence is a pure function of the seed.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Splits an independent stream seed out of (seed, a, b).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  SplitMix64 g(seed);
  std::uint64_t s = g.next() ^ (a * 0x9e3779b97f4a7c15ULL);
  SplitMix64 h(s);
  return h.next() ^ (b * 0xbf58476d1ce4e5b9ULL);
}

}  // namespace gendiag
