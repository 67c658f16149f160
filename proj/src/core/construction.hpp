#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "core/gf2.hpp"
#include "core/graph.hpp"
#include "core/instance.hpp"
#include "core/params.hpp"

namespace ugfpc {

/// Subspace Z(e) and shift b(e) per edge, indexed by EdgeId of `graph`.
struct EdgeData {
  int m = 0;
  std::vector<Gf2Subspace> z;
  std::vector<Gf2Vector> b;
};

/// Independent uniform Z (dimension l) and b for every edge, drawn from one
/// stream seeded by `seed`, edges visited in canonical (sorted name) order,
/// Z before b.
EdgeData sample_edge_data(const MultiGraph& g, int m, int ell, std::uint64_t seed);

/// good[e] iff every edge-nonrepeating path of length r starting with e (in
/// either orientation) has Z's spanning all of F_2^m. Search stops early
/// along a branch once the span is full.
std::vector<char> classify_good_edges(const MultiGraph& g, const EdgeData& ed, int r);

struct ConstructionOutput {
  MultiGraph graph;  // canonical base graph
  EdgeData edge_data;
  int r = 1;
  std::vector<char> good;
  MultiGraph pruned;  // same vertices, good edges only
  EdgeData pruned_edge_data;
  GroupUgInstance u1_tilde, u2_tilde, u1, u2;
};

/// U1 bundles are Z(e), U2 bundles Z(e) + b(e); the tilde instances keep
/// every edge and the plain ones only the good edges.
ConstructionOutput build_gap_pair(const MultiGraph& g, const EdgeData& ed, int r);

/// Values g*(v) along `path` with the given end values such that for every
/// path edge (v', v), g*(v') + g*(v) + b(v', v) lies in Z(v', v). The basis
/// is the greedy scan: Z basis vectors in path order, kept when they enlarge
/// the running span. Returns nullopt when the required total shift lies
/// outside the span of the path's Z's. Throws on a repeated vertex.
std::optional<std::vector<Gf2Vector>> try_extend_along_path(const MultiGraph& g, const Path& path,
                                                            const EdgeData& ed, const Gf2Vector& g_start,
                                                            const Gf2Vector& g_end);

/// As above, but requires the path's Z's to span F_2^m and throws
/// Error(Domain) otherwise.
std::vector<Gf2Vector> extend_along_path(const MultiGraph& g, const Path& path, const EdgeData& ed,
                                         const Gf2Vector& g_start, const Gf2Vector& g_end);

/// Recovers (Z, b) from a base pair whose U1 bundles are subspaces and whose
/// U2 bundles are cosets of them on the same graph. b is the least element
/// of the coset. Both instances must share vertices and edges; the result
/// is indexed by the edges of the canonical graph.
EdgeData edge_data_from_pair(const GroupUgInstance& u1, const GroupUgInstance& u2);

nlohmann::ordered_json edge_data_to_json(const MultiGraph& g, const EdgeData& ed);

struct ConstructOptions {
  int m = 2;
  int ell = 1;
  int r = 2;
  std::uint64_t seed = 0;
  // When epsilon, delta and k are all given, the report compares the
  // override with the derived parameters and the girth bound (k+1)^2 r.
  std::optional<Rational> epsilon;
  std::optional<Rational> delta;
  std::optional<int> k;
};

nlohmann::ordered_json construction_report(const ConstructionOutput& out, const ConstructOptions& opts,
                                           std::uint64_t seed);

/// Writes graph.json, edgedata.json, u1.json, u2.json, u1tilde.json,
/// u2tilde.json and report.json into `dir` (created if missing).
void write_construction(const std::filesystem::path& dir, const ConstructionOutput& out,
                        const nlohmann::ordered_json& report);

}  // namespace ugfpc
