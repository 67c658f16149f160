#include "core/solver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "core/error.hpp"

namespace ugfpc {

namespace {

// Membership of a difference word in one edge's bundle.
class BundleIndex {
 public:
  BundleIndex(const std::vector<Gf2Vector>& bundle, int m) {
    for (const auto& z : bundle) words_.push_back(z.word());
    std::sort(words_.begin(), words_.end());
    if (m <= 16) {
      table_.assign(std::size_t{1} << m, 0);
      for (auto w : words_) table_[w] = 1;
    }
  }
  bool has(std::uint64_t w) const {
    if (!table_.empty()) return table_[w] != 0;
    return std::binary_search(words_.begin(), words_.end(), w);
  }

 private:
  std::vector<std::uint64_t> words_;
  std::vector<char> table_;
};

struct Search {
  const GroupUgInstance& u;
  std::vector<VertexId> order;
  std::vector<int> position;
  std::vector<char> pinned;
  // Edges to earlier vertices in the order, for each position.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> back_edges;
  std::vector<BundleIndex> index;
  std::vector<std::uint64_t> labels;
  std::vector<std::uint64_t> best_labels;
  long long best = -1;
  std::uint64_t q;

  void run(std::size_t pos, long long satisfied, long long open_edges) {
    if (satisfied + open_edges <= best) return;
    if (pos == order.size()) {
      best = satisfied;
      best_labels = labels;
      return;
    }
    VertexId v = order[pos];
    const auto& back = back_edges[pos];
    const auto closing = static_cast<long long>(back.size());
    std::uint64_t limit = pinned[v] ? 1 : q;
    for (std::uint64_t g = 0; g < limit; ++g) {
      long long gained = 0;
      for (auto [w, e] : back) gained += index[e].has(g ^ labels[w]) ? 1 : 0;
      labels[v] = g;
      run(pos + 1, satisfied + gained, open_edges - closing);
      if (best == satisfied + open_edges) return;  // no later branch can beat this
    }
  }
};

}  // namespace

OptResult exact_opt(const GroupUgInstance& u, std::uint64_t budget) {
  require_valid(u);
  const int n = u.graph.vertex_count();
  Search s{u, {}, {}, {}, {}, {}, {}, {}, -1, u.q()};
  s.order.resize(static_cast<std::size_t>(n));
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(),
            [&](VertexId a, VertexId b) { return u.graph.name(a) < u.graph.name(b); });
  s.position.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.position[s.order[i]] = i;

  auto comp = u.graph.components();
  s.pinned.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> comp_seen(static_cast<std::size_t>(n), 0);
  int free_vertices = 0;
  for (auto v : s.order) {
    if (!comp_seen[comp[v]]) {
      comp_seen[comp[v]] = 1;
      s.pinned[v] = 1;
    } else {
      ++free_vertices;
    }
  }
  // q^free compared against the budget without overflow.
  BigInt count = pow_int(BigInt(u.q()), static_cast<unsigned>(free_vertices));
  if (count > BigInt(budget))
    throw Error(ErrorKind::Budget, "exact_opt: " + count.str() + " assignments exceed the budget of " +
                                       std::to_string(budget));

  s.back_edges.resize(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < u.graph.edge_count(); ++e) {
    const auto& ed = u.graph.edge(e);
    VertexId late = s.position[ed.u] > s.position[ed.v] ? ed.u : ed.v;
    VertexId early = u.graph.other_end(e, late);
    s.back_edges[s.position[late]].emplace_back(early, e);
  }
  for (const auto& b : u.bundles) s.index.emplace_back(b, u.m);
  s.labels.assign(static_cast<std::size_t>(n), 0);
  s.run(0, 0, u.graph.edge_count());

  OptResult out;
  for (VertexId v = 0; v < n; ++v) out.witness.emplace_back(u.m, s.best_labels[v]);
  out.optimum = value(u, out.witness);
  return out;
}

SatCheck is_completely_satisfiable(const GroupUgInstance& u) {
  require_valid(u);
  const int n = u.graph.vertex_count();
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return u.graph.name(a) < u.graph.name(b); });

  std::vector<std::optional<Gf2Vector>> label(static_cast<std::size_t>(n));
  std::vector<std::optional<DerivationStep>> parent(static_cast<std::size_t>(n));
  std::vector<VertexId> anchor_of(static_cast<std::size_t>(n), -1);

  auto derivation = [&](VertexId v) {
    std::vector<DerivationStep> steps;
    for (VertexId x = v; parent[x]; x = u.graph.other_end(parent[x]->edge, x)) steps.push_back(*parent[x]);
    std::reverse(steps.begin(), steps.end());
    return steps;
  };
  auto make_conflict = [&](VertexId anchor, VertexId vertex, std::vector<DerivationStep> a,
                           std::vector<DerivationStep> b, Gf2Vector la, Gf2Vector lb) {
    std::size_t common = 0;
    while (common < a.size() && common < b.size() && a[common].edge == b[common].edge &&
           a[common].vertex == b[common].vertex && a[common].shift == b[common].shift)
      ++common;
    std::size_t cycle = a.size() + b.size() - 2 * common;
    return Conflict{anchor, vertex, std::move(a), std::move(b), la, lb, cycle};
  };

  SatCheck out;
  for (auto root : order) {
    if (label[root]) continue;
    label[root] = Gf2Vector::zero(u.m);
    anchor_of[root] = root;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (const auto& inc : u.graph.incident(x)) {
        const auto& bundle = u.bundles[inc.edge];
        auto y = inc.neighbor;
        if (bundle.size() >= 2) {
          auto base = derivation(x);
          auto a = base;
          auto b = base;
          a.push_back({y, inc.edge, bundle[0]});
          b.push_back({y, inc.edge, bundle[1]});
          out.conflict = make_conflict(root, y, std::move(a), std::move(b), *label[x] + bundle[0],
                                       *label[x] + bundle[1]);
          return out;
        }
        auto want = *label[x] + bundle[0];
        if (!label[y]) {
          label[y] = want;
          parent[y] = DerivationStep{y, inc.edge, bundle[0]};
          anchor_of[y] = root;
          queue.push_back(y);
        } else if (*label[y] != want) {
          auto b = derivation(x);
          b.push_back({y, inc.edge, bundle[0]});
          out.conflict = make_conflict(root, y, derivation(y), std::move(b), *label[y], want);
          return out;
        }
      }
    }
  }
  out.satisfiable = true;
  for (VertexId v = 0; v < n; ++v) out.assignment.push_back(*label[v]);
  return out;
}

}  // namespace ugfpc
