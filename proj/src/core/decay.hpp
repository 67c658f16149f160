#pragma once

#include <cstdint>
#include <vector>

#include "core/rational.hpp"

namespace ugfpc {

struct DecayStep {
  int step = 0;                // i, path length
  Rational mean;               // exact empirical mean of X_i
  double mean_value = 0;
  double standard_error = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t zero_trials = 0;
};

struct DecayTrace {
  int m = 0, ell = 0, d = 0, r = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<DecayStep> steps;  // i = 1..r
};

inline constexpr std::uint64_t kDecayBudget = std::uint64_t{1} << 26;

/// Monte Carlo of X_i = sum over non-spanning length-i paths p of
/// (d^(m - dim Z(p)) - 1), on the tree of paths grown from one edge: each
/// path end branches into d - 1 fresh edges with independent uniform
/// l-dimensional Z. Trial t draws from Rng::derived(seed, t).
DecayTrace decay_simulation(int m, int ell, int d, int r, std::uint64_t trials, std::uint64_t seed);

}  // namespace ugfpc
