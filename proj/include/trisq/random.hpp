#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

namespace trisq {

// Counter-based generator built on the SplitMix64 finalizer.
//
// Output i of stream (seed, stream) is mix64(key + (i + 1) * GAMMA) with
// key = mix64(seed) ^ mix64(stream * GAMMA + ODD). Any (seed, stream, i)
// can be evaluated independently, so parallel workers take distinct
// streams and stay reproducible regardless of scheduling.
class CounterRng {
public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix64(seed) ^ mix64(stream * kGamma + 0x632be59bd9b4e019ULL)) {}

  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t operator()() { return mix64(key_ + (++counter_) * kGamma); }

  // Unbiased integer in [0, bound), bound > 0 (Lemire's multiply-shift
  // with rejection).
  std::uint64_t uniform(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform(i)]);
  }

  std::uint64_t counter() const noexcept { return counter_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace trisq
