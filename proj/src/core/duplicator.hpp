#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/construction.hpp"
#include "core/game.hpp"
#include "core/graph.hpp"

namespace ugfpc {

class Duplicator {
 public:
  virtual ~Duplicator() = default;
  /// Called after Spoiler's pickup; must respect the pebbles on the board.
  virtual Bijection propose(const Game& game) = 0;
  /// Called after Spoiler placed the picked pair on A-element `a`.
  virtual void on_placement(const Game& game, VertexId a) { (void)game, (void)a; }
  virtual std::unique_ptr<Duplicator> clone() const = 0;
  /// Encodes the strategy's memory; equal keys mean equal future behavior.
  virtual std::string memo_key() const { return {}; }
  virtual std::string name() const = 0;
};

/// f = identity: g* = 0 on lifted structures, the index map otherwise.
class IdentityDuplicator final : public Duplicator {
 public:
  Bijection propose(const Game& game) override;
  std::unique_ptr<Duplicator> clone() const override { return std::make_unique<IdentityDuplicator>(*this); }
  std::string name() const override { return "identity"; }
};

struct TreeStrategyOptions {
  /// Computing g*(i, u, .) for every u up front (eager) or only the diagonal
  /// values, recomputing the chosen u's map after placement (lazy). Both give
  /// the same bijections.
  bool lazy = false;
  /// If g*(u) breaks a constraint to a pebbled neighbor of u (possible when
  /// the girth is below what the strategy assumes), move g*(u) to the least
  /// value consistent with all pebbled neighbors when one exists.
  bool repair = true;
  /// Check every edge of T_i(u) against f_{i,u} and count failures.
  bool verify = false;
};

struct TreeStrategyStats {
  std::uint64_t rounds = 0;
  std::uint64_t repairs = 0;
  std::uint64_t long_segments = 0;
  std::uint64_t extension_fallbacks = 0;
  std::uint64_t verified_edges = 0;
  std::uint64_t tree_violations = 0;
};

/// The Duplicator that keeps f consistent along minimal trees spanning the
/// pebbled base vertices.
///
/// For each base vertex u: T(u) is the Steiner tree on u and the pebbled
/// vertices of u's component. g*(u, .) is copied from memory on V(T(u)) and
/// V(T_prev); the edges of T(u) outside T_prev are cut into segments at
/// anchors (degree >= 3, pebbled, or u), leaves and vertices of T_prev.
/// Segments shorter than r form the forest F(u), filled by
/// g*(v2) = g*(v1) + b(v1, v2) with an untouched component started at 0;
/// longer segments are filled by path extension between their (0 if unset)
/// end values. The proposed bijection is f(x_v^g) = x_v^(g + g*(v, v)).
/// After placement on u*, memory becomes (T(u*), g*(u*, .)).
class TreeDuplicator final : public Duplicator {
 public:
  /// `h` must be canonical and name the base vertices of the lifted
  /// structures; `ed` is indexed by h's edges.
  TreeDuplicator(MultiGraph h, EdgeData ed, int r, TreeStrategyOptions opts = {});

  /// Strategy for lift(u1) vs lift(u2) of a base pair on one graph.
  static TreeDuplicator for_pair(const GroupUgInstance& u1, const GroupUgInstance& u2, int r,
                                 TreeStrategyOptions opts = {});

  struct Local {
    TreeSubgraph tree;
    std::vector<VertexId> anchors;
    std::vector<EdgeId> forest;
    std::vector<std::optional<Gf2Vector>> g;  // defined exactly on tree vertices
    bool repaired = false;
  };

  /// g*(i, u, .) for the given pebbled base vertices against current memory.
  Local compute_local(const std::vector<VertexId>& pebbled, VertexId u);
  /// Replaces the memory (T, g*) carried between rounds, e.g. to resume from
  /// a recorded position. g must be defined exactly on the tree's vertices.
  void restore_memory(TreeSubgraph tree, std::vector<std::optional<Gf2Vector>> g);

  Bijection propose(const Game& game) override;
  void on_placement(const Game& game, VertexId a) override;
  std::unique_ptr<Duplicator> clone() const override { return std::make_unique<TreeDuplicator>(*this); }
  std::string memo_key() const override;
  std::string name() const override { return "tree"; }

  const MultiGraph& graph() const noexcept { return h_; }
  const EdgeData& edge_data() const noexcept { return ed_; }
  const TreeSubgraph& memory_tree() const noexcept { return prev_tree_; }
  const std::vector<std::optional<Gf2Vector>>& memory_g() const noexcept { return prev_g_; }
  /// Per-u maps of the last proposal (eager mode only).
  const std::vector<Local>& last_round() const noexcept { return scratch_; }
  const TreeStrategyStats& stats() const noexcept { return stats_; }

 private:
  std::vector<VertexId> pebbled_bases(const Game& game) const;
  void check_layout(const Game& game) const;

  MultiGraph h_;
  EdgeData ed_;
  int r_;
  TreeStrategyOptions opts_;
  std::vector<int> component_;
  TreeSubgraph prev_tree_;
  std::vector<std::optional<Gf2Vector>> prev_g_;
  std::vector<VertexId> last_pebbled_;
  std::vector<Local> scratch_;
  TreeStrategyStats stats_;
};

}  // namespace ugfpc
