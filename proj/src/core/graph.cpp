#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace ugfpc {

MultiGraph::MultiGraph(std::vector<std::string> vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
  for (auto& v : vertices) add_vertex(std::move(v));
  for (const auto& [a, b] : edges) add_edge(a, b);
}

VertexId MultiGraph::add_vertex(std::string name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "vertex names must be nonempty");
  if (index_.count(name)) throw Error(ErrorKind::InvalidArgument, "duplicate vertex '" + name + "'");
  auto id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return id;
}

EdgeId MultiGraph::add_edge(VertexId a, VertexId b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  if (names_[b] < names_[a]) std::swap(a, b);
  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({a, b});
  adjacency_[a].push_back({b, id});
  if (a != b) adjacency_[b].push_back({a, id});
  return id;
}

EdgeId MultiGraph::add_edge(std::string_view a, std::string_view b) {
  return add_edge(require(a), require(b));
}

std::optional<VertexId> MultiGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId MultiGraph::require(std::string_view name) const {
  auto v = find(name);
  if (!v) throw Error(ErrorKind::NotFound, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

VertexId MultiGraph::other_end(EdgeId e, VertexId from) const {
  const auto& ed = edge(e);
  return ed.u == from ? ed.v : ed.u;
}

std::optional<EdgeId> MultiGraph::find_edge(VertexId a, VertexId b) const {
  std::optional<EdgeId> best;
  for (const auto& inc : incident(a))
    if (inc.neighbor == b && (!best || inc.edge < *best)) best = inc.edge;
  return best;
}

bool MultiGraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges_) {
    if (e.u == e.v) return false;
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool MultiGraph::is_regular(int d) const {
  for (VertexId v = 0; v < vertex_count(); ++v) {
    int deg = 0;
    for (const auto& inc : incident(v)) deg += inc.neighbor == v ? 2 : 1;
    if (deg != d) return false;
  }
  return true;
}

std::pair<MultiGraph, std::vector<EdgeId>> MultiGraph::canonical() const {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  MultiGraph out;
  for (auto& n : sorted) out.add_vertex(n);
  std::vector<EdgeId> order(edges_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) {
    const auto& ex = edges_[x];
    const auto& ey = edges_[y];
    return std::tie(names_[ex.u], names_[ex.v]) < std::tie(names_[ey.u], names_[ey.v]);
  });
  std::vector<EdgeId> remap(edges_.size());
  for (EdgeId e : order) remap[e] = out.add_edge(names_[edges_[e].u], names_[edges_[e].v]);
  return {std::move(out), std::move(remap)};
}

std::vector<int> MultiGraph::components() const {
  std::vector<int> comp(names_.size(), -1);
  int next = 0;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::deque<VertexId> queue{s};
    comp[s] = next;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (const auto& inc : incident(v))
        if (comp[inc.neighbor] < 0) {
          comp[inc.neighbor] = next;
          queue.push_back(inc.neighbor);
        }
    }
    ++next;
  }
  return comp;
}

int girth(const MultiGraph& g) {
  int best = std::numeric_limits<int>::max();
  for (const auto& e : g.edges())
    if (e.u == e.v) return 1;
  const int n = g.vertex_count();
  std::vector<int> dist(n), parent_edge(n);
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent_edge[s] = -1;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best) break;
      for (const auto& inc : g.incident(v)) {
        if (inc.edge == parent_edge[v]) continue;
        auto w = inc.neighbor;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = inc.edge;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? kInfiniteGirth : best;
}

namespace {

void extend_paths(const MultiGraph& g, Path& current, std::vector<char>& used, int r,
                  std::vector<Path>& out) {
  if (static_cast<int>(current.length()) == r) {
    out.push_back(current);
    return;
  }
  VertexId tail = current.vertices.back();
  for (const auto& inc : g.incident(tail)) {
    if (used[inc.edge]) continue;
    used[inc.edge] = 1;
    current.vertices.push_back(inc.neighbor);
    current.edges.push_back(inc.edge);
    extend_paths(g, current, used, r, out);
    current.vertices.pop_back();
    current.edges.pop_back();
    used[inc.edge] = 0;
  }
}

}  // namespace

std::vector<Path> paths_from_edge(const MultiGraph& g, EdgeId e, int r) {
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::NotFound, "edge not in graph");
  if (r < 1) throw Error(ErrorKind::Domain, "path length must be at least 1");
  std::vector<Path> out;
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  const auto& ed = g.edge(e);
  std::vector<std::pair<VertexId, VertexId>> orientations{{ed.u, ed.v}};
  if (ed.u != ed.v) orientations.emplace_back(ed.v, ed.u);
  for (auto [a, b] : orientations) {
    Path p{{a, b}, {e}};
    used[e] = 1;
    extend_paths(g, p, used, r, out);
    used[e] = 0;
  }
  return out;
}

std::vector<std::string> numbered_names(int n) {
  std::vector<std::string> out;
  const int width = n >= 10 ? static_cast<int>(std::to_string(n).size()) : 1;
  for (int i = 1; i <= n; ++i) {
    auto s = std::to_string(i);
    out.push_back("v" + std::string(static_cast<std::size_t>(width) - s.size(), '0') + s);
  }
  return out;
}

std::optional<MultiGraph> random_regular(int n, int d, int min_girth, std::uint64_t seed,
                                         std::uint64_t max_tries) {
  if (d < 1) throw Error(ErrorKind::Domain, "random_regular: degree must be positive");
  if (n <= d) throw Error(ErrorKind::Domain, "random_regular: need more than d vertices");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw Error(ErrorKind::Domain, "random_regular: n*d = " + std::to_string(n * d) + " is odd");
  Rng rng(seed);
  const auto names = numbered_names(n);
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    // Pairing model: points are (vertex, slot); the lowest open vertex is
    // paired with a uniformly chosen open point, rejecting partners that
    // would create a loop, a parallel edge or a cycle shorter than min_girth.
    std::vector<int> open(n, d);
    std::vector<std::vector<int>> adj(n);
    bool stuck = false;
    std::vector<int> dist(n);
    for (;;) {
      int v = -1;
      for (int i = 0; i < n; ++i)
        if (open[i] > 0) { v = i; break; }
      if (v < 0) break;
      std::fill(dist.begin(), dist.end(), -1);
      dist[v] = 0;
      std::deque<int> queue{v};
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (dist[x] >= std::max(min_girth - 2, 1)) continue;
        for (int y : adj[x])
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
      }
      std::vector<int> points;
      for (int w = 0; w < n; ++w) {
        if (w == v || open[w] == 0) continue;
        if (dist[w] >= 0 && dist[w] <= std::max(min_girth - 2, 1)) continue;
        for (int s = 0; s < open[w]; ++s) points.push_back(w);
      }
      if (points.empty()) {
        stuck = true;
        break;
      }
      int w = points[rng.below(points.size())];
      adj[v].push_back(w);
      adj[w].push_back(v);
      --open[v];
      --open[w];
    }
    if (stuck) continue;
    MultiGraph g;
    for (const auto& name : names) g.add_vertex(name);
    for (int v = 0; v < n; ++v)
      for (int w : adj[v])
        if (v < w) g.add_edge(v, w);
    auto canon = g.canonical().first;
    int gi = girth(canon);
    if (canon.is_simple() && canon.is_regular(d) && (gi == kInfiniteGirth || gi >= min_girth))
      return canon;
  }
  return std::nullopt;
}

namespace {

MultiGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  MultiGraph g;
  auto names = numbered_names(n);
  for (const auto& name : names) g.add_vertex(name);
  for (auto [a, b] : pairs) g.add_edge(a, b);
  return g.canonical().first;
}

MultiGraph from_lcf(int n, const std::vector<int>& shifts) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
    if (i < j) pairs.emplace_back(i, j);
  }
  return from_pairs(n, pairs);
}

}  // namespace

std::vector<std::string> preset_graph_names() {
  return {"K3", "K4", "Petersen", "Heawood", "McGee", "TutteCoxeter"};
}

MultiGraph preset_graph(std::string_view name) {
  if (name == "K3") return from_pairs(3, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "K4") return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "Petersen") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
      pairs.emplace_back(i, (i + 1) % 5);
      pairs.emplace_back(i, i + 5);
      pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return from_pairs(10, pairs);
  }
  if (name == "Heawood") return from_lcf(14, {5, -5});
  if (name == "McGee") return from_lcf(24, {12, 7, -7});
  if (name == "TutteCoxeter") return from_lcf(30, {-13, -9, 7, -7, 9, 13});
  throw Error(ErrorKind::NotFound, "unknown graph preset '" + std::string(name) + "'");
}

nlohmann::ordered_json graph_to_json(const MultiGraph& g) {
  auto canon = g.canonical().first;
  nlohmann::ordered_json j;
  j["format"] = "graph-v1";
  j["vertices"] = canon.names();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : canon.edges()) edges.push_back({canon.name(e.u), canon.name(e.v)});
  j["edges"] = edges;
  return j;
}

MultiGraph graph_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "graph-v1")
      throw Error(ErrorKind::Parse, "graph JSON: expected format graph-v1");
    MultiGraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "graph JSON: edges are [u, v] pairs");
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("graph JSON: ") + ex.what());
  }
}

bool TreeSubgraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool TreeSubgraph::has_edge(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

}  // namespace ugfpc
