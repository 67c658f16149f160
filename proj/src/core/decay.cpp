#include "core/decay.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/gf2.hpp"
#include "core/rng.hpp"

namespace ugfpc {

DecayTrace decay_simulation(int m, int ell, int d, int r, std::uint64_t trials, std::uint64_t seed) {
  if (!(0 < ell && ell < m) || m > 30) throw Error(ErrorKind::Domain, "decay requires 0 < l < m <= 30");
  if (d < 2 || r < 1 || trials < 1) throw Error(ErrorKind::Domain, "decay requires d >= 2, r >= 1, trials >= 1");
  // Widest frontier: 2 (d-1)^(r-1) paths.
  long double width = 2.0L * std::pow(static_cast<long double>(d - 1), r - 1);
  if (width > static_cast<long double>(kDecayBudget))
    throw Error(ErrorKind::Budget, "decay: path tree of width " + std::to_string(static_cast<double>(width)) +
                                       " exceeds the budget");
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    long double w = std::pow(static_cast<long double>(d), m - k) - 1;
    if (w > 1e18L) throw Error(ErrorKind::Budget, "decay: d^(m-l) does not fit in 64 bits");
    weight[k] = static_cast<std::uint64_t>(std::llround(w));
  }

  DecayTrace trace{m, ell, d, r, trials, seed, {}};
  std::vector<BigInt> sum(static_cast<std::size_t>(r), 0);
  std::vector<long double> sum_sq(static_cast<std::size_t>(r), 0);
  trace.steps.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    trace.steps[i].step = i + 1;
    trace.steps[i].min = UINT64_MAX;
  }

  std::vector<Gf2Subspace> frontier, next;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::derived(seed, t);
    auto root = sample_subspace(m, ell, rng);
    // Both orientations of the root edge share its Z but grow into
    // disjoint subtrees.
    frontier.assign(2, root);
    for (int i = 0; i < r; ++i) {
      if (i > 0) {
        next.clear();
        for (const auto& span : frontier)
          for (int c = 0; c < d - 1; ++c) {
            auto grown = join(span, sample_subspace(m, ell, rng));
            if (!grown.is_full()) next.push_back(grown);
          }
        frontier.swap(next);
      }
      std::uint64_t x = 0;
      for (const auto& span : frontier) x += weight[span.dim()];
      auto& st = trace.steps[i];
      sum[i] += x;
      sum_sq[i] += static_cast<long double>(x) * static_cast<long double>(x);
      st.min = std::min(st.min, x);
      st.max = std::max(st.max, x);
      if (x == 0) ++st.zero_trials;
    }
  }
  for (int i = 0; i < r; ++i) {
    auto& st = trace.steps[i];
    st.mean = Rational(sum[i], BigInt(trials));
    st.mean_value = st.mean.convert_to<double>();
    long double mean = st.mean_value;
    long double var = trials > 1 ? (sum_sq[i] - trials * mean * mean) / (trials - 1) : 0;
    st.standard_error = static_cast<double>(std::sqrt(std::max<long double>(var, 0) / trials));
  }
  return trace;
}

}  // namespace ugfpc
