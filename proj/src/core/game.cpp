#include "core/game.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "core/error.hpp"
#include "core/lifting.hpp"

namespace ugfpc {

std::optional<LiftedLayout> LiftedLayout::detect(const GroupUgInstance& u) {
  LiftedLayout out;
  const int n = u.graph.vertex_count();
  std::map<std::string, int> bases;
  std::vector<LiftedName> parsed;
  for (VertexId v = 0; v < n; ++v) {
    auto p = parse_lifted_name(u.graph.name(v));
    if (!p || p->label.dim() != u.m) return std::nullopt;
    bases.emplace(p->base, 0);
    parsed.push_back(std::move(*p));
  }
  if (u.m > 20) return std::nullopt;
  const std::uint64_t q = std::uint64_t{1} << u.m;
  if (static_cast<std::uint64_t>(n) != bases.size() * q) return std::nullopt;
  int index = 0;
  for (auto& [name, id] : bases) {
    id = index++;
    out.base_names_.push_back(name);
  }
  out.m_ = u.m;
  out.element_.assign(bases.size() * q, -1);
  for (VertexId v = 0; v < n; ++v) {
    int b = bases[parsed[v].base];
    auto slot = static_cast<std::size_t>(b) * q + parsed[v].label.word();
    if (out.element_[slot] >= 0) return std::nullopt;
    out.element_[slot] = v;
    out.base_.push_back(b);
    out.label_.push_back(parsed[v].label.word());
  }
  return out;
}

VertexId LiftedLayout::element(int base, std::uint64_t label) const {
  return element_.at((static_cast<std::size_t>(base) << m_) + label);
}

std::optional<int> LiftedLayout::find_base(const std::string& name) const {
  auto it = std::lower_bound(base_names_.begin(), base_names_.end(), name);
  if (it == base_names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - base_names_.begin());
}

Structure::Structure(GroupUgInstance inst)
    : instance(canonicalize(inst)), view(instance), layout(LiftedLayout::detect(instance)) {}

namespace {

void require_matching_layouts(const Structure& a, const Structure& b) {
  if (!a.layout || !b.layout) throw Error(ErrorKind::InvalidArgument, "g* bijections need lifted structures");
  if (a.layout->m() != b.layout->m() || a.layout->base_names() != b.layout->base_names())
    throw Error(ErrorKind::InvalidArgument, "lifted structures have different base vertices");
}

}  // namespace

VertexId apply(const Bijection& f, const Structure& a, const Structure& b, VertexId element) {
  if (const auto* g = std::get_if<GStar>(&f)) {
    const auto& la = *a.layout;
    int base = la.base_of(element);
    return b.layout->element(base, la.label_of(element) ^ g->shift.at(static_cast<std::size_t>(base)).word());
  }
  return std::get<ExplicitTable>(f).image.at(static_cast<std::size_t>(element));
}

std::vector<VertexId> materialize(const Bijection& f, const Structure& a, const Structure& b) {
  std::vector<VertexId> out;
  for (VertexId e = 0; e < a.size(); ++e) out.push_back(apply(f, a, b, e));
  return out;
}

std::string table_digest(const std::vector<VertexId>& image) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : image) {
    auto x = static_cast<std::uint32_t>(v);
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (x >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json gstar_to_json(const GStar& g, const Structure& a) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  const auto& names = a.layout->base_names();
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = g.shift.at(i).str();
  return j;
}

std::optional<Violation> check_partial_isomorphism(const Structure& a, const Structure& b,
                                                   const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i; j < pairs.size(); ++j) {
      auto [ai, bi] = pairs[i];
      auto [aj, bj] = pairs[j];
      if ((ai == aj) != (bi == bj))
        return Violation{i, j, "pebbles " + a.name(ai) + "/" + b.name(bi) + " and " + a.name(aj) + "/" +
                                   b.name(bj) + " break injectivity"};
      auto ra = a.view.relations(ai, aj);
      auto rb = b.view.relations(bi, bj);
      if (std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) continue;
      // Name the least shift present on one side only.
      std::vector<std::uint64_t> diff;
      std::set_symmetric_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(diff));
      bool in_a = std::binary_search(ra.begin(), ra.end(), diff.front());
      auto shift = Gf2Vector(a.instance.m, diff.front()).str();
      std::string where_yes = in_a ? "(" + a.name(ai) + ", " + a.name(aj) + ") in A"
                                   : "(" + b.name(bi) + ", " + b.name(bj) + ") in B";
      std::string where_no = in_a ? "(" + b.name(bi) + ", " + b.name(bj) + ") in B"
                                  : "(" + a.name(ai) + ", " + a.name(aj) + ") in A";
      return Violation{i, j, "shift " + shift + " holds on " + where_yes + " but not on " + where_no};
    }
  return std::nullopt;
}

Game::Game(StructurePtr a, StructurePtr b, int k) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_ || !b_) throw Error(ErrorKind::InvalidArgument, "missing structure");
  if (a_->size() != b_->size())
    throw Error(ErrorKind::InvalidArgument, "universe sizes differ: " + std::to_string(a_->size()) + " vs " +
                                                std::to_string(b_->size()));
  if (a_->instance.m != b_->instance.m) throw Error(ErrorKind::InvalidArgument, "structures differ in m");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  slots_.resize(static_cast<std::size_t>(k));
}

std::vector<std::pair<VertexId, VertexId>> Game::pebbled() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& s : slots_)
    if (s) out.emplace_back(s->a, s->b);
  return out;
}

void Game::pickup(int pair) {
  if (winner_) throw Error(ErrorKind::WrongPhase, "the game is over");
  if (phase_ != Phase::AwaitPickup) throw Error(ErrorKind::WrongPhase, "pickup is only legal before a bijection");
  if (picked_) throw Error(ErrorKind::WrongPhase, "a pair was already picked up this round");
  if (pair < 0 || pair >= k())
    throw Error(ErrorKind::IllegalMove, "pair index " + std::to_string(pair) + " outside [0, " +
                                            std::to_string(k()) + ")");
  slots_[static_cast<std::size_t>(pair)].reset();
  picked_ = pair;
}

void Game::propose(Bijection f) {
  if (winner_) throw Error(ErrorKind::WrongPhase, "the game is over");
  if (phase_ != Phase::AwaitPickup || !picked_)
    throw Error(ErrorKind::WrongPhase, "a bijection needs a pickup first");
  if (auto* g = std::get_if<GStar>(&f)) {
    require_matching_layouts(*a_, *b_);
    if (static_cast<int>(g->shift.size()) != a_->layout->base_count())
      throw Error(ErrorKind::IllegalMove, "g* must give one shift per base vertex");
    for (const auto& s : g->shift)
      if (s.dim() != a_->instance.m) throw Error(ErrorKind::IllegalMove, "g* shift has the wrong length");
  } else {
    const auto& image = std::get<ExplicitTable>(f).image;
    if (static_cast<int>(image.size()) != a_->size())
      throw Error(ErrorKind::IllegalMove, "bijection table has the wrong size");
    std::vector<char> hit(image.size(), 0);
    for (auto v : image) {
      if (v < 0 || v >= b_->size() || hit[v]) throw Error(ErrorKind::IllegalMove, "table is not a bijection");
      hit[v] = 1;
    }
  }
  for (const auto& s : slots_)
    if (s && apply(f, *a_, *b_, s->a) != s->b)
      throw Error(ErrorKind::IllegalMove, "bijection sends pebbled " + a_->name(s->a) + " away from " +
                                              b_->name(s->b));
  pending_ = std::move(f);
  phase_ = Phase::AwaitPlacement;
}

VertexId Game::place(VertexId a) {
  if (winner_) throw Error(ErrorKind::WrongPhase, "the game is over");
  if (phase_ != Phase::AwaitPlacement) throw Error(ErrorKind::WrongPhase, "placement needs a bijection first");
  if (a < 0 || a >= a_->size()) throw Error(ErrorKind::IllegalMove, "element not in A");
  VertexId b = apply(*pending_, *a_, *b_, a);
  slots_[static_cast<std::size_t>(*picked_)] = Slot{a, b};
  picked_.reset();
  pending_.reset();
  phase_ = Phase::AwaitPickup;
  ++round_;
  if (auto v = check_partial_isomorphism(*a_, *b_, pebbled())) {
    winner_ = "spoiler";
    win_reason_ = v->reason;
  }
  return b;
}

nlohmann::ordered_json Game::state_json() const {
  nlohmann::ordered_json j;
  j["round"] = round_;
  j["phase"] = phase_ == Phase::AwaitPickup ? "pickup" : "placement";
  j["k"] = k();
  j["picked"] = picked_ ? nlohmann::ordered_json(*picked_) : nlohmann::ordered_json(nullptr);
  auto slots = nlohmann::ordered_json::array();
  for (const auto& s : slots_) {
    if (!s) {
      slots.push_back(nullptr);
      continue;
    }
    slots.push_back({{"a", a_->name(s->a)}, {"b", b_->name(s->b)}});
  }
  j["slots"] = slots;
  j["winner"] = winner_ ? nlohmann::ordered_json(*winner_) : nlohmann::ordered_json(nullptr);
  if (win_reason_) j["reason"] = *win_reason_;
  return j;
}

}  // namespace ugfpc
