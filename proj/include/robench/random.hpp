#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace robench {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Folds a sequence of words into one stream key.
constexpr std::uint64_t derive_stream_key(std::span<const std::uint64_t> words) noexcept {
  std::uint64_t h = 0x6A09E667F3BCC908ull;
  for (auto w : words) h = splitmix64(h ^ splitmix64(w));
  return h;
}

constexpr std::uint64_t derive_stream_key(std::initializer_list<std::uint64_t> words) noexcept {
  return derive_stream_key(std::span<const std::uint64_t>(words.begin(), words.size()));
}

enum class StreamPurpose : std::uint64_t {
  Shift = 1,
  Permutation = 2,
  Rotation = 3,
  Component = 4,
};

/// Portable random stream: std::mt19937_64 output is fixed by the standard,
/// and the conversions below avoid the implementation-defined std::
/// distributions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : engine_(key) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n), rejection sampled.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via the Marsaglia polar method.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace robench
