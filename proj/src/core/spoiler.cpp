#include "core/spoiler.hpp"

#include <algorithm>
#include <unordered_map>

#include "core/error.hpp"
#include "core/solver.hpp"

namespace ugfpc {

int RandomSpoiler::choose_pickup(const Game& game) {
  return static_cast<int>(rng_.below(static_cast<std::uint64_t>(game.k())));
}

VertexId RandomSpoiler::choose_placement(const Game& game) {
  return static_cast<VertexId>(rng_.below(static_cast<std::uint64_t>(game.a().size())));
}

namespace {

// Vertices of the inconsistent cycle in a conflict, starting at the point
// where the two derivations split.
std::vector<VertexId> conflict_cycle(const GroupUgInstance& u, const Conflict& c) {
  std::size_t common = 0;
  while (common < c.path_a.size() && common < c.path_b.size() &&
         c.path_a[common].edge == c.path_b[common].edge && c.path_a[common].shift == c.path_b[common].shift)
    ++common;
  VertexId split = common == 0 ? c.anchor : c.path_a[common - 1].vertex;
  std::vector<VertexId> cycle{split};
  for (std::size_t i = common; i < c.path_a.size(); ++i) cycle.push_back(c.path_a[i].vertex);
  // Back along the other derivation, excluding its last vertex (the shared
  // endpoint) and the split point.
  for (std::size_t i = c.path_b.size(); i-- > common + 1;) cycle.push_back(c.path_b[i - 1].vertex);
  (void)u;
  cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

CycleGreedySpoiler::CycleGreedySpoiler(const Structure& a, const Structure& b, std::uint64_t seed)
    : fallback_(seed) {
  auto cb = is_completely_satisfiable(b.instance);
  if (cb.conflict) {
    cycle_ = conflict_cycle(b.instance, *cb.conflict);
    in_b_ = true;
  } else {
    auto ca = is_completely_satisfiable(a.instance);
    if (ca.conflict) {
      cycle_ = conflict_cycle(a.instance, *ca.conflict);
      in_b_ = false;
    }
  }
  if (!cycle_.empty()) offset_ = static_cast<std::size_t>(seed % cycle_.size());
}

int CycleGreedySpoiler::choose_pickup(const Game& game) {
  if (cycle_.empty()) return fallback_.choose_pickup(game);
  const std::size_t pos = step_ % cycle_.size();
  if (pos == 0 || game.k() == 1) return 0;
  return static_cast<int>(1 + (pos - 1) % static_cast<std::size_t>(game.k() - 1));
}

VertexId CycleGreedySpoiler::choose_placement(const Game& game) {
  if (cycle_.empty()) return fallback_.choose_placement(game);
  VertexId target = cycle_[(offset_ + step_ % cycle_.size()) % cycle_.size()];
  ++step_;
  if (!in_b_) return target;
  auto image = materialize(*game.pending(), game.a(), game.b());
  auto it = std::find(image.begin(), image.end(), target);
  return static_cast<VertexId>(it - image.begin());
}

namespace {

struct Searcher {
  std::unordered_map<std::string, bool> memo;
  std::uint64_t nodes = 0;

  static std::string key(const Game& g, const Duplicator& d, int depth) {
    auto pebbles = g.pebbled();
    std::sort(pebbles.begin(), pebbles.end());
    std::string k = std::to_string(depth) + "/";
    for (auto [a, b] : pebbles) k += std::to_string(a) + "-" + std::to_string(b) + ",";
    return k + "/" + d.memo_key();
  }

  bool wins(const Game& game, const Duplicator& dup, int depth, std::vector<SpoilerMove>* line) {
    if (depth <= 0) return false;
    std::string k;
    if (!line) {
      k = key(game, dup, depth);
      if (auto it = memo.find(k); it != memo.end()) return it->second;
    }
    bool result = false;
    std::vector<int> pickups;
    bool empty_seen = false;
    std::vector<std::pair<VertexId, VertexId>> occupied_seen;
    for (int i = 0; i < game.k(); ++i) {
      const auto& s = game.slots()[i];
      if (!s) {
        if (empty_seen) continue;
        empty_seen = true;
      } else {
        std::pair<VertexId, VertexId> p{s->a, s->b};
        if (std::find(occupied_seen.begin(), occupied_seen.end(), p) != occupied_seen.end()) continue;
        occupied_seen.push_back(p);
      }
      pickups.push_back(i);
    }
    for (int i : pickups) {
      Game after_pickup = game;
      auto d1 = dup.clone();
      after_pickup.pickup(i);
      after_pickup.propose(d1->propose(after_pickup));
      for (VertexId a = 0; a < game.a().size() && !result; ++a) {
        ++nodes;
        Game next = after_pickup;
        auto d2 = d1->clone();
        next.place(a);
        d2->on_placement(next, a);
        if (next.finished() || wins(next, *d2, depth - 1, nullptr)) {
          result = true;
          if (line) {
            line->push_back({i, a});
            if (!next.finished()) wins(next, *d2, depth - 1, line);
          }
        }
      }
      if (result) break;
    }
    if (!line) memo.emplace(std::move(k), result);
    return result;
  }
};

}  // namespace

SearchResult search_spoiler_win(const Game& game, const Duplicator& duplicator, int depth) {
  if (game.finished()) throw Error(ErrorKind::WrongPhase, "the game is over");
  if (game.phase() != Phase::AwaitPickup || game.picked())
    throw Error(ErrorKind::WrongPhase, "search starts before a pickup");
  Searcher s;
  SearchResult out;
  // Iterative deepening makes the recovered line a shortest one, so an agent
  // replanning every round makes progress. Each depth is decided with
  // memoization first; the line is then recovered along the winning branch.
  for (int d = 1; d <= depth && !out.spoiler_wins; ++d) {
    out.spoiler_wins = s.wins(game, duplicator, d, nullptr);
    if (out.spoiler_wins) s.wins(game, duplicator, d, &out.line);
  }
  out.nodes = s.nodes;
  return out;
}

int ExhaustiveSpoiler::choose_pickup(const Game& game) {
  planned_.reset();
  if (duplicator_) {
    auto result = search_spoiler_win(game, *duplicator_, depth_);
    if (result.spoiler_wins) planned_ = result.line.front();
  }
  return planned_ ? planned_->pickup : 0;
}

VertexId ExhaustiveSpoiler::choose_placement(const Game& game) {
  (void)game;
  return planned_ ? planned_->place : 0;
}

}  // namespace ugfpc
