#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ugfpc {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Undirected multigraph with named vertices.
///
/// Parallel edges and self-loops are representable (girth and path queries
/// treat them properly); base graphs of instances are required to be simple.
/// Edge endpoints are stored with the lexicographically smaller name first.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges);

  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId a, VertexId b);
  EdgeId add_edge(std::string_view a, std::string_view b);

  int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId require(std::string_view name) const;

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  VertexId other_end(EdgeId e, VertexId from) const;

  /// Lowest-numbered edge joining a and b, if any.
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  bool is_simple() const;
  bool is_regular(int d) const;

  /// Vertices sorted by name, edges sorted by (name(u), name(v)); the
  /// returned vector maps old edge ids to new ones.
  std::pair<MultiGraph, std::vector<EdgeId>> canonical() const;

  /// Component index per vertex, numbered in order of first vertex.
  std::vector<int> components() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Sentinel returned by girth() for forests.
inline constexpr int kInfiniteGirth = -1;

/// Length of a shortest cycle; a parallel pair is a 2-cycle and a loop a
/// 1-cycle. kInfiniteGirth for forests.
int girth(const MultiGraph& g);

struct Path {
  std::vector<VertexId> vertices;  // length() + 1 entries
  std::vector<EdgeId> edges;
  std::size_t length() const { return edges.size(); }
};

/// Every edge-nonrepeating path (v0, ..., vr) whose first edge is e, in both
/// orientations of e.
std::vector<Path> paths_from_edge(const MultiGraph& g, EdgeId e, int r);

/// Random simple d-regular graph with girth >= min_girth, or nullopt after
/// max_tries failed attempts. Vertices are named like presets ("v1".."vn").
std::optional<MultiGraph> random_regular(int n, int d, int min_girth, std::uint64_t seed,
                                         std::uint64_t max_tries);

/// Named graphs: K3, K4, Petersen, Heawood, McGee, TutteCoxeter.
MultiGraph preset_graph(std::string_view name);
std::vector<std::string> preset_graph_names();

/// Canonical vertex naming used by presets: "v1".."v9", zero padded when
/// there are ten or more vertices.
std::vector<std::string> numbered_names(int n);

nlohmann::ordered_json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

struct TreeSubgraph {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted
  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
};

/// Minimum-edge tree containing all terminals (Dreyfus-Wagner over terminal
/// subsets, exponential only in the number of terminals). The choice among
/// equally small trees is deterministic. Throws Error(Domain) when terminals
/// span several components or the set is empty.
TreeSubgraph steiner_tree(const MultiGraph& g, std::span<const VertexId> terminals);

}  // namespace ugfpc
