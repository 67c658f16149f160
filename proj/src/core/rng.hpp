#pragma once

#include <cstdint>
#include <random>

namespace ugfpc {

/// The single source of randomness in the library.
///
/// The stream is std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so seeded runs are reproducible across platforms. Standard
/// distributions are *not* portable, so all derived draws (bounded integers,
/// bit strings, shuffles) are implemented here on top of the raw stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for task `stream` under a master seed. Used to give
  /// every trial/edge/match its own generator so results do not depend on
  /// scheduling order.
  static Rng derived(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }

  /// Uniform value with `count` random low bits (0 <= count <= 64).
  std::uint64_t bits(int count);

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <class It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      auto j = below(i);
      std::swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ugfpc
