#pragma once

// Randomness used throughout the library.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are not (libstdc++ and libc++ map the
// same engine output to different values), so bounded integers, unit reals
// and shuffles are derived here directly from raw engine output.
//
// Streams: every random decision draws from a stream seeded by
// derive_seed(base, purpose, indices...), a SplitMix64-based combine. Graph
// generation, attack planning and bundle ordering therefore never share a
// stream, and trial k of strategy j can be replayed in isolation.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace netvuln {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class StreamPurpose : std::uint64_t {
  generation = 1,
  plan = 2,
  node_bundles = 3,
  edge_transfer = 4,
  trial = 5,
};

/// Folds indices into base one at a time: h = mix64(h ^ mix64(index)).
std::uint64_t derive_seed(std::uint64_t base, StreamPurpose purpose,
                          std::initializer_list<std::uint64_t> indices = {});

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_real() < p; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netvuln
