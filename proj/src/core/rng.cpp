#include "core/rng.hpp"

#include <limits>

#include "core/error.hpp"

namespace ugfpc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::DependentBasis: return "dependent_basis";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::WrongPhase: return "wrong_phase";
    case ErrorKind::IllegalMove: return "illegal_move";
    case ErrorKind::NotFound: return "not_found";
  }
  return "unknown";
}

Rng Rng::derived(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x5eedu};
  Rng rng(0);
  rng.engine_.seed(seq);
  return rng;
}

std::uint64_t Rng::bits(int count) {
  if (count <= 0) return 0;
  if (count >= 64) return next();
  return next() >> (64 - count);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "Rng::below: bound must be positive");
  const auto max = std::numeric_limits<std::uint64_t>::max();
  const auto limit = max - (max % bound + 1) % bound;
  for (;;) {
    auto x = next();
    if (x <= limit) return x % bound;
  }
}

}  // namespace ugfpc
