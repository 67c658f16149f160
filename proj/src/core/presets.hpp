#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/gf2.hpp"
#include "core/instance.hpp"

namespace ugfpc {

/// A base instance pair on one graph, the shared path-length parameter r
/// used by the tree strategy, and the lifted structures played on.
struct PresetPair {
  std::string name;
  GroupUgInstance u1, u2;
  int r = 2;
};

/// Triangle u, v, w over F_2: U1 has identity constraints only, U2 flips
/// the constraint on (u, v).
PresetPair fig2_pair();

/// K4 over F_2^2 with one-dimensional bundles Z(e); U1 uses Z(e), U2 uses
/// Z(e) + b(e) with b(v3, v4) = 10 and b = 00 elsewhere.
PresetPair fig3_pair();

/// Z per K4 edge (canonical order v1v2, v1v3, v1v4, v2v3, v2v4, v3v4) used by
/// fig3_pair.
std::vector<Gf2Subspace> fig3_subspaces();

/// Recomputes fig3_subspaces: with Z(v3, v4) = span{01} and
/// Z(v1, v4) = span{11} fixed, the first assignment of the other four edges
/// (odometer over one-dimensional subspaces in order, first edge most
/// significant) making every edge good at r = 2 and giving U2 optimum 5/12.
std::vector<Gf2Subspace> search_fig3_subspaces();

/// "fig2" or "fig3".
PresetPair preset_pair(std::string_view name);
std::vector<std::string> preset_pair_names();

/// Single instances: fig2-u1, fig2-u2, fig3-u1, fig3-u2, each also with a
/// "-lifted" suffix.
GroupUgInstance preset_instance(std::string_view name);
std::vector<std::string> preset_instance_names();

}  // namespace ugfpc
