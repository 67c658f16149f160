#include "core/duplicator.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace ugfpc {

Bijection IdentityDuplicator::propose(const Game& game) {
  const auto& a = game.a();
  const auto& b = game.b();
  if (a.layout && b.layout && a.layout->base_names() == b.layout->base_names() && a.layout->m() == b.layout->m())
    return GStar{std::vector<Gf2Vector>(static_cast<std::size_t>(a.layout->base_count()),
                                        Gf2Vector::zero(a.layout->m()))};
  ExplicitTable t;
  t.image.resize(static_cast<std::size_t>(a.size()));
  std::iota(t.image.begin(), t.image.end(), 0);
  return t;
}

TreeDuplicator::TreeDuplicator(MultiGraph h, EdgeData ed, int r, TreeStrategyOptions opts)
    : h_(std::move(h)), ed_(std::move(ed)), r_(r), opts_(opts) {
  if (r_ < 1) throw Error(ErrorKind::Domain, "r must be at least 1");
  if (!(h_ == h_.canonical().first)) throw Error(ErrorKind::InvalidArgument, "strategy graph must be canonical");
  if (static_cast<int>(ed_.z.size()) != h_.edge_count() || static_cast<int>(ed_.b.size()) != h_.edge_count())
    throw Error(ErrorKind::InvalidArgument, "edge data does not match the strategy graph");
  component_ = h_.components();
  prev_g_.assign(static_cast<std::size_t>(h_.vertex_count()), std::nullopt);
}

TreeDuplicator TreeDuplicator::for_pair(const GroupUgInstance& u1, const GroupUgInstance& u2, int r,
                                        TreeStrategyOptions opts) {
  auto ed = edge_data_from_pair(u1, u2);
  return TreeDuplicator(canonicalize(u1).graph, std::move(ed), r, opts);
}

void TreeDuplicator::check_layout(const Game& game) const {
  const auto& la = game.a().layout;
  const auto& lb = game.b().layout;
  if (!la || !lb) throw Error(ErrorKind::InvalidArgument, "tree strategy needs lifted structures");
  if (la->base_names() != h_.names() || lb->base_names() != h_.names() || la->m() != ed_.m)
    throw Error(ErrorKind::InvalidArgument, "lifted structures do not match the strategy's base graph");
}

std::vector<VertexId> TreeDuplicator::pebbled_bases(const Game& game) const {
  std::vector<VertexId> out;
  for (auto [a, b] : game.pebbled()) out.push_back(game.a().layout->base_of(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TreeDuplicator::Local TreeDuplicator::compute_local(const std::vector<VertexId>& pebbled, VertexId u) {
  const int n = h_.vertex_count();
  Local out;
  std::vector<VertexId> terminals{u};
  for (auto p : pebbled)
    if (component_[p] == component_[u]) terminals.push_back(p);
  out.tree = steiner_tree(h_, terminals);
  const auto& tree = out.tree;
  auto& g = out.g;
  g.assign(static_cast<std::size_t>(n), std::nullopt);
  auto is_pebbled = [&](VertexId v) { return std::binary_search(pebbled.begin(), pebbled.end(), v); };

  // Step 1: agree with memory where the trees meet.
  for (auto v : tree.vertices)
    if (prev_tree_.has_vertex(v)) g[v] = prev_g_[v];

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto e : tree.edges) {
    ++degree[h_.edge(e).u];
    ++degree[h_.edge(e).v];
  }
  std::vector<char> breakpoint(static_cast<std::size_t>(n), 0);
  for (auto v : tree.vertices) {
    bool anchor = degree[v] >= 3 || is_pebbled(v) || v == u;
    if (anchor) out.anchors.push_back(v);
    breakpoint[v] = anchor || degree[v] <= 1 || prev_tree_.has_vertex(v);
  }

  // Cut the new edges into segments between breakpoints.
  std::vector<char> fresh(static_cast<std::size_t>(h_.edge_count()), 0);
  for (auto e : tree.edges)
    if (!prev_tree_.has_edge(e)) fresh[e] = 1;
  std::vector<std::vector<Incidence>> tree_adj(static_cast<std::size_t>(n));
  for (auto e : tree.edges) {
    tree_adj[h_.edge(e).u].push_back({h_.edge(e).v, e});
    tree_adj[h_.edge(e).v].push_back({h_.edge(e).u, e});
  }
  std::vector<char> taken(static_cast<std::size_t>(h_.edge_count()), 0);
  std::vector<Path> segments;
  for (auto start : tree.vertices) {
    if (!breakpoint[start]) continue;
    for (const auto& first : tree_adj[start]) {
      if (!fresh[first.edge] || taken[first.edge]) continue;
      Path p{{start}, {}};
      Incidence step = first;
      for (;;) {
        taken[step.edge] = 1;
        p.edges.push_back(step.edge);
        p.vertices.push_back(step.neighbor);
        if (breakpoint[step.neighbor]) break;
        auto next = std::find_if(tree_adj[step.neighbor].begin(), tree_adj[step.neighbor].end(),
                                 [&](const Incidence& inc) { return inc.edge != step.edge; });
        step = *next;
      }
      segments.push_back(std::move(p));
    }
  }

  // Step 2: the short segments, by the b-shift rule.
  std::vector<char> in_forest_vertex(static_cast<std::size_t>(n), 0);
  for (const auto& s : segments)
    if (static_cast<int>(s.length()) < r_) {
      out.forest.insert(out.forest.end(), s.edges.begin(), s.edges.end());
      for (auto v : s.vertices) in_forest_vertex[v] = 1;
    }
  std::sort(out.forest.begin(), out.forest.end());
  for (;;) {
    bool changed = false;
    for (auto e : out.forest) {
      auto [a, b] = h_.edge(e);
      if (g[a] && !g[b]) g[b] = *g[a] + ed_.b[e];
      else if (g[b] && !g[a]) g[a] = *g[b] + ed_.b[e];
      else continue;
      changed = true;
      break;
    }
    if (changed) continue;
    bool seeded = false;
    for (VertexId v = 0; v < n && !seeded; ++v)
      if (in_forest_vertex[v] && !g[v]) {
        g[v] = Gf2Vector::zero(ed_.m);
        seeded = true;
      }
    if (!seeded) break;
  }

  // Step 3: the long segments, by path extension.
  for (const auto& s : segments) {
    if (static_cast<int>(s.length()) < r_) continue;
    ++stats_.long_segments;
    auto first = s.vertices.front();
    auto last = s.vertices.back();
    if (!g[first]) g[first] = Gf2Vector::zero(ed_.m);
    if (!g[last]) g[last] = Gf2Vector::zero(ed_.m);
    auto filled = try_extend_along_path(h_, s, ed_, *g[first], *g[last]);
    if (filled) {
      for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i) g[s.vertices[i]] = (*filled)[i];
      continue;
    }
    ++stats_.extension_fallbacks;
    for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i)
      g[s.vertices[i]] = *g[s.vertices[i - 1]] + ed_.b[s.edges[i - 1]];
  }
  for (auto v : tree.vertices)
    if (!g[v]) g[v] = Gf2Vector::zero(ed_.m);

  if (opts_.repair && !is_pebbled(u)) {
    std::vector<EdgeId> pinned;
    for (const auto& inc : h_.incident(u))
      if (is_pebbled(inc.neighbor) && g[inc.neighbor]) pinned.push_back(inc.edge);
    auto fits = [&](const Gf2Vector& x) {
      for (auto e : pinned)
        if (!contains(ed_.z[e], x + *g[h_.other_end(e, u)] + ed_.b[e])) return false;
      return true;
    };
    if (!fits(*g[u]) && ed_.m <= 20) {
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << ed_.m); ++w) {
        Gf2Vector x(ed_.m, w);
        if (!fits(x)) continue;
        g[u] = x;
        out.repaired = true;
        ++stats_.repairs;
        break;
      }
    }
  }

  if (opts_.verify)
    for (auto e : tree.edges) {
      ++stats_.verified_edges;
      auto [a, b] = h_.edge(e);
      if (!contains(ed_.z[e], *g[a] + *g[b] + ed_.b[e])) ++stats_.tree_violations;
    }
  return out;
}

Bijection TreeDuplicator::propose(const Game& game) {
  check_layout(game);
  ++stats_.rounds;
  last_pebbled_ = pebbled_bases(game);
  scratch_.clear();
  GStar f;
  for (VertexId v = 0; v < h_.vertex_count(); ++v) {
    auto local = compute_local(last_pebbled_, v);
    f.shift.push_back(*local.g[v]);
    if (!opts_.lazy) scratch_.push_back(std::move(local));
  }
  return f;
}

void TreeDuplicator::on_placement(const Game& game, VertexId a) {
  VertexId u = game.a().layout->base_of(a);
  Local chosen = opts_.lazy ? compute_local(last_pebbled_, u) : scratch_.at(static_cast<std::size_t>(u));
  prev_tree_ = std::move(chosen.tree);
  prev_g_ = std::move(chosen.g);
}

void TreeDuplicator::restore_memory(TreeSubgraph tree, std::vector<std::optional<Gf2Vector>> g) {
  if (g.size() != static_cast<std::size_t>(h_.vertex_count()))
    throw Error(ErrorKind::InvalidArgument, "memory needs one entry per base vertex");
  for (VertexId v = 0; v < h_.vertex_count(); ++v) {
    if (g[v].has_value() != tree.has_vertex(v))
      throw Error(ErrorKind::InvalidArgument, "memory must be defined exactly on the tree vertices");
    if (g[v] && g[v]->dim() != ed_.m) throw Error(ErrorKind::InvalidArgument, "memory value has the wrong length");
  }
  for (auto e : tree.edges)
    if (e < 0 || e >= h_.edge_count()) throw Error(ErrorKind::InvalidArgument, "memory tree edge out of range");
  prev_tree_ = std::move(tree);
  prev_g_ = std::move(g);
}

std::string TreeDuplicator::memo_key() const {
  std::string key;
  for (auto e : prev_tree_.edges) key += std::to_string(e) + ",";
  key += "|";
  for (auto v : prev_tree_.vertices) key += std::to_string(v) + ":" + std::to_string(prev_g_[v]->word()) + ",";
  return key;
}

}  // namespace ugfpc
