#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/duplicator.hpp"
#include "core/game.hpp"
#include "core/rng.hpp"

namespace ugfpc {

class Spoiler {
 public:
  virtual ~Spoiler() = default;
  virtual int choose_pickup(const Game& game) = 0;
  /// Called with the proposed bijection pending.
  virtual VertexId choose_placement(const Game& game) = 0;
  /// Lets search-based agents see the opponent's memory; default ignores it.
  virtual void observe_duplicator(const Duplicator& d) { (void)d; }
  virtual std::string name() const = 0;
};

/// Uniform pickup index and uniform A-element.
class RandomSpoiler final : public Spoiler {
 public:
  explicit RandomSpoiler(std::uint64_t seed) : rng_(seed) {}
  int choose_pickup(const Game& game) override;
  VertexId choose_placement(const Game& game) override;
  std::string name() const override { return "random"; }

 private:
  Rng rng_;
};

/// Walks an inconsistent cycle: pair 0 stays on the cycle's first element,
/// the remaining pairs alternate along the rest of it. The cycle comes from
/// the propagation check of B (or of A when only A has one); pebbles are
/// put on f^-1 of B's cycle elements so the B-side pebbles trace the cycle.
/// The seed rotates the starting point. Without any inconsistent cycle it
/// plays like RandomSpoiler.
class CycleGreedySpoiler final : public Spoiler {
 public:
  CycleGreedySpoiler(const Structure& a, const Structure& b, std::uint64_t seed);
  int choose_pickup(const Game& game) override;
  VertexId choose_placement(const Game& game) override;
  std::string name() const override { return "cycle"; }

  const std::vector<VertexId>& cycle() const noexcept { return cycle_; }
  bool cycle_in_b() const noexcept { return in_b_; }

 private:
  std::vector<VertexId> cycle_;
  bool in_b_ = true;
  std::size_t step_ = 0;
  std::size_t offset_ = 0;
  RandomSpoiler fallback_;
};

struct SpoilerMove {
  int pickup = 0;
  VertexId place = 0;
};

struct SearchResult {
  bool spoiler_wins = false;
  std::vector<SpoilerMove> line;  // a forcing line when spoiler_wins
  std::uint64_t nodes = 0;
};

/// Whether Spoiler can force a win within `depth` rounds against the
/// deterministic `duplicator` (whose memory is cloned, not modified).
/// Explores every pickup (one representative empty slot) and every
/// placement, memoizing on pebble positions and the Duplicator's memory.
/// The returned line is a shortest forcing line.
SearchResult search_spoiler_win(const Game& game, const Duplicator& duplicator, int depth);

/// Plays the first move of a forcing line when one exists within `depth`
/// rounds, otherwise the first legal move.
class ExhaustiveSpoiler final : public Spoiler {
 public:
  explicit ExhaustiveSpoiler(int depth) : depth_(depth) {}
  int choose_pickup(const Game& game) override;
  VertexId choose_placement(const Game& game) override;
  void observe_duplicator(const Duplicator& d) override { duplicator_ = d.clone(); }
  std::string name() const override { return "exhaustive"; }

 private:
  int depth_;
  std::unique_ptr<Duplicator> duplicator_;
  std::optional<SpoilerMove> planned_;
};

}  // namespace ugfpc
