#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "core/error.hpp"
#include "core/graph.hpp"

namespace ugfpc {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 4;

struct BfsTree {
  std::vector<int> dist;
  std::vector<EdgeId> parent_edge;
};

BfsTree bfs(const MultiGraph& g, VertexId source) {
  BfsTree t{std::vector<int>(g.vertex_count(), kUnreached), std::vector<EdgeId>(g.vertex_count(), -1)};
  t.dist[source] = 0;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(v))
      if (t.dist[inc.neighbor] == kUnreached) {
        t.dist[inc.neighbor] = t.dist[v] + 1;
        t.parent_edge[inc.neighbor] = inc.edge;
        queue.push_back(inc.neighbor);
      }
  }
  return t;
}

}  // namespace

TreeSubgraph steiner_tree(const MultiGraph& g, std::span<const VertexId> terminals) {
  std::vector<VertexId> term(terminals.begin(), terminals.end());
  std::sort(term.begin(), term.end());
  term.erase(std::unique(term.begin(), term.end()), term.end());
  if (term.empty()) throw Error(ErrorKind::Domain, "steiner_tree: empty terminal set");
  for (auto t : term)
    if (t < 0 || t >= g.vertex_count()) throw Error(ErrorKind::NotFound, "steiner_tree: terminal not in graph");
  if (term.size() > 16) throw Error(ErrorKind::Budget, "steiner_tree: more than 16 terminals");
  auto comp = g.components();
  for (auto t : term)
    if (comp[t] != comp[term[0]])
      throw Error(ErrorKind::Domain, "steiner_tree: terminals lie in different components");
  if (term.size() == 1) return {{term[0]}, {}};

  const int n = g.vertex_count();
  std::vector<BfsTree> trees;
  trees.reserve(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) trees.push_back(bfs(g, v));
  auto dist = [&](VertexId a, VertexId b) { return trees[a].dist[b]; };

  const int s = static_cast<int>(term.size());
  const unsigned full = (1u << s) - 1;
  std::vector<std::vector<int>> cost(full + 1, std::vector<int>(n, kUnreached));
  std::vector<std::vector<unsigned>> split(full + 1, std::vector<unsigned>(n, 0));
  std::vector<std::vector<VertexId>> via(full + 1, std::vector<VertexId>(n, -1));
  for (int i = 0; i < s; ++i)
    for (VertexId v = 0; v < n; ++v) cost[1u << i][v] = dist(term[i], v);

  std::vector<int> merged(n);
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    const unsigned low = mask & (~mask + 1);
    for (VertexId v = 0; v < n; ++v) {
      int best = kUnreached;
      for (unsigned sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        int c = cost[sub][v] + cost[mask ^ sub][v];
        if (c < best) {
          best = c;
          split[mask][v] = sub;
        }
      }
      merged[v] = best;
    }
    for (VertexId v = 0; v < n; ++v) {
      int best = kUnreached;
      for (VertexId w = 0; w < n; ++w) {
        if (merged[w] >= kUnreached || dist(w, v) >= kUnreached) continue;
        int c = merged[w] + dist(w, v);
        if (c < best) {
          best = c;
          via[mask][v] = w;
        }
      }
      cost[mask][v] = best;
    }
  }

  std::vector<EdgeId> edges;
  auto add_path = [&](VertexId from, VertexId to) {
    // Walk the BFS tree rooted at `from` back from `to`.
    for (VertexId x = to; x != from;) {
      EdgeId e = trees[from].parent_edge[x];
      edges.push_back(e);
      x = g.other_end(e, x);
    }
  };
  auto rebuild = [&](auto&& self, unsigned mask, VertexId v) -> void {
    if (std::popcount(mask) == 1) {
      add_path(term[std::countr_zero(mask)], v);
      return;
    }
    VertexId w = via[mask][v];
    add_path(w, v);
    unsigned sub = split[mask][w];
    self(self, sub, w);
    self(self, mask ^ sub, w);
  };
  rebuild(rebuild, full, term[0]);

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<VertexId> vertices(term);
  for (auto e : edges) {
    vertices.push_back(g.edge(e).u);
    vertices.push_back(g.edge(e).v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (edges.size() + 1 != vertices.size())
    throw Error(ErrorKind::Domain, "steiner_tree: reconstruction produced a non-tree");
  return {std::move(vertices), std::move(edges)};
}

}  // namespace ugfpc
