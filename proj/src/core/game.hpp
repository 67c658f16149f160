#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "core/instance.hpp"

namespace ugfpc {

/// Element bookkeeping for a label-lifted structure: element "v#g" is the
/// pair (base vertex index, label word). Base vertices are indexed in name
/// order.
class LiftedLayout {
 public:
  /// nullopt when some element name is not of the form "v#bits" with a
  /// common label length and a full set of q copies per base vertex.
  static std::optional<LiftedLayout> detect(const GroupUgInstance& u);

  int m() const noexcept { return m_; }
  int base_count() const noexcept { return static_cast<int>(base_names_.size()); }
  const std::vector<std::string>& base_names() const noexcept { return base_names_; }
  int base_of(VertexId element) const { return base_.at(static_cast<std::size_t>(element)); }
  std::uint64_t label_of(VertexId element) const { return label_.at(static_cast<std::size_t>(element)); }
  VertexId element(int base, std::uint64_t label) const;
  std::optional<int> find_base(const std::string& name) const;

 private:
  int m_ = 0;
  std::vector<std::string> base_names_;
  std::vector<int> base_;
  std::vector<std::uint64_t> label_;
  std::vector<VertexId> element_;  // base * q + label
};

/// One side of the game: an instance with its relational view.
struct Structure {
  explicit Structure(GroupUgInstance instance);

  GroupUgInstance instance;
  RelationalView view;
  std::optional<LiftedLayout> layout;

  int size() const noexcept { return view.universe_size(); }
  const std::string& name(VertexId e) const { return instance.graph.name(e); }
};

using StructurePtr = std::shared_ptr<const Structure>;

/// f(x_v^g) = x_v^(g + shift[v]) on lifted structures, indexed by base
/// vertex of the layout.
struct GStar {
  std::vector<Gf2Vector> shift;
};

/// Explicit image of every A-element.
struct ExplicitTable {
  std::vector<VertexId> image;
};

using Bijection = std::variant<GStar, ExplicitTable>;

/// Image of `a` under `f` (A and B must both be lifted for GStar).
VertexId apply(const Bijection& f, const Structure& a, const Structure& b, VertexId element);
std::vector<VertexId> materialize(const Bijection& f, const Structure& a, const Structure& b);
/// 16 hex digits of FNV-1a over the image table.
std::string table_digest(const std::vector<VertexId>& image);
nlohmann::ordered_json gstar_to_json(const GStar& g, const Structure& a);

struct Violation {
  std::size_t i = 0, j = 0;  // indices into the pair list
  std::string reason;
};

/// ok (nullopt) iff a_i -> b_i is injective both ways and every shift
/// relation holds on (a_i, a_j) exactly when it holds on (b_i, b_j).
std::optional<Violation> check_partial_isomorphism(const Structure& a, const Structure& b,
                                                   const std::vector<std::pair<VertexId, VertexId>>& pairs);

enum class Phase { AwaitPickup, AwaitPlacement };

struct Slot {
  VertexId a = -1;
  VertexId b = -1;
};

/// The k-pebble bijective game. Each round: pickup (a slot is emptied),
/// a bijection is proposed, then a pebble pair is placed on (a, f(a)).
class Game {
 public:
  Game(StructurePtr a, StructurePtr b, int k);

  const Structure& a() const { return *a_; }
  const Structure& b() const { return *b_; }
  const StructurePtr& a_ptr() const { return a_; }
  const StructurePtr& b_ptr() const { return b_; }
  int k() const noexcept { return static_cast<int>(slots_.size()); }
  Phase phase() const noexcept { return phase_; }
  int round() const noexcept { return round_; }
  bool finished() const noexcept { return winner_.has_value(); }
  const std::optional<std::string>& winner() const noexcept { return winner_; }
  const std::optional<std::string>& win_reason() const noexcept { return win_reason_; }
  const std::vector<std::optional<Slot>>& slots() const noexcept { return slots_; }
  std::optional<int> picked() const noexcept { return picked_; }
  const std::optional<Bijection>& pending() const noexcept { return pending_; }

  /// Occupied slots as (a, b) pairs in slot order.
  std::vector<std::pair<VertexId, VertexId>> pebbled() const;

  void pickup(int pair);
  void propose(Bijection f);
  /// Places the picked pair on (a, f(a)); returns f(a).
  VertexId place(VertexId a);

  nlohmann::ordered_json state_json() const;

 private:
  StructurePtr a_, b_;
  std::vector<std::optional<Slot>> slots_;
  Phase phase_ = Phase::AwaitPickup;
  int round_ = 0;
  std::optional<int> picked_;
  std::optional<Bijection> pending_;
  std::optional<std::string> winner_;
  std::optional<std::string> win_reason_;
};

}  // namespace ugfpc
