#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "core/gf2.hpp"
#include "core/graph.hpp"
#include "core/rational.hpp"

namespace ugfpc {

/// GroupUniqueGames instance over Z_2^m. Each edge carries a bundle of
/// shifts z, one constraint x_u - x_v = z per shift. Over characteristic 2
/// the constraint is the same read in either direction, so bundles sit on
/// undirected edges.
struct GroupUgInstance {
  int m = 1;
  MultiGraph graph;
  std::vector<std::vector<Gf2Vector>> bundles;  // indexed by EdgeId

  std::uint64_t q() const { return std::uint64_t{1} << m; }
  std::size_t constraint_count() const;
};

/// Label per vertex, indexed by VertexId.
using Assignment = std::vector<Gf2Vector>;

/// Fraction of constraints satisfied by `a`. Instances without constraints
/// have value 1 (nothing is violated).
Rational value(const GroupUgInstance& u, const Assignment& a);

/// Number of edges whose bundle contains a(u) + a(v).
std::size_t satisfied_count(const GroupUgInstance& u, const Assignment& a);

/// Human-readable invariant violations; empty when the instance is valid.
std::vector<std::string> validate(const GroupUgInstance& u);

/// Throws Error(InvalidArgument) listing every violation.
void require_valid(const GroupUgInstance& u);

/// Vertices, edges and shifts sorted. Throws on invalid input.
GroupUgInstance canonicalize(const GroupUgInstance& u);

nlohmann::ordered_json instance_to_json(const GroupUgInstance& u);
/// Parses the wire format. Structural problems raise Error(Parse); semantic
/// ones (wrong vector length, empty bundle) are left for validate().
GroupUgInstance instance_from_json(const nlohmann::json& j);

nlohmann::ordered_json assignment_to_json(const GroupUgInstance& u, const Assignment& a);
Assignment assignment_from_json(const GroupUgInstance& u, const nlohmann::json& j);

/// The instance read as a relational structure: universe = vertices, and
/// for each shift g the symmetric relation of pairs constrained by g.
/// Only the shift relations are materialized; every other permutation
/// relation of the full vocabulary is empty for group instances.
class RelationalView {
 public:
  explicit RelationalView(const GroupUgInstance& u);

  int universe_size() const noexcept { return size_; }

  /// Sorted shift words g with (a, b) in relation g.
  std::span<const std::uint64_t> relations(VertexId a, VertexId b) const;

 private:
  static std::uint64_t key(VertexId a, VertexId b);
  int size_ = 0;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> pairs_;
};

}  // namespace ugfpc
