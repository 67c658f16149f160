#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/instance.hpp"

namespace ugfpc {

inline constexpr std::uint64_t kDefaultSolverBudget = std::uint64_t{1} << 30;

struct OptResult {
  Rational optimum;
  Assignment witness;
};

/// Exact optimum by branch and bound over assignments.
///
/// Vertices are assigned in name order with labels ascending. The first
/// vertex of every connected component is fixed to label 0: adding one
/// group element to every label of a component leaves each difference
/// a(u) + a(v) unchanged, so some optimum has that vertex at 0. The witness
/// is the lexicographically least optimal assignment under that pinning.
/// Throws Error(Budget) when q^(free vertices) exceeds `budget`.
OptResult exact_opt(const GroupUgInstance& u, std::uint64_t budget = kDefaultSolverBudget);

/// One derivation step: `vertex` was reached over `edge` using `shift`.
struct DerivationStep {
  VertexId vertex;
  EdgeId edge;
  Gf2Vector shift;
};

/// Two derivations from a component anchor forcing different labels on
/// `vertex`. Paths list the steps after the anchor.
struct Conflict {
  VertexId anchor;
  VertexId vertex;
  std::vector<DerivationStep> path_a;
  std::vector<DerivationStep> path_b;
  Gf2Vector label_a;
  Gf2Vector label_b;
  /// Steps in the inconsistent cycle: both paths minus their shared prefix.
  std::size_t cycle_length;
};

struct SatCheck {
  bool satisfiable = false;
  Assignment assignment;  // complete when satisfiable
  std::optional<Conflict> conflict;
};

/// Label propagation to a fixpoint from label 0 at one anchor per
/// component. The instance is completely satisfiable iff no vertex is forced
/// to two labels.
SatCheck is_completely_satisfiable(const GroupUgInstance& u);

}  // namespace ugfpc
