#include "core/presets.hpp"

#include "core/construction.hpp"
#include "core/error.hpp"
#include "core/lifting.hpp"
#include "core/solver.hpp"

namespace ugfpc {

namespace {

Gf2Subspace span_of(const char* bits) {
  auto v = Gf2Vector::parse(bits);
  return rref_basis(std::span<const Gf2Vector>(&v, 1), v.dim());
}

std::pair<GroupUgInstance, GroupUgInstance> k4_pair(const std::vector<Gf2Subspace>& z) {
  auto k4 = preset_graph("K4");
  GroupUgInstance u1{2, k4, {}}, u2{2, k4, {}};
  for (EdgeId e = 0; e < k4.edge_count(); ++e) {
    bool shifted = k4.name(k4.edge(e).u) == "v3" && k4.name(k4.edge(e).v) == "v4";
    auto b = shifted ? Gf2Vector::parse("10") : Gf2Vector::zero(2);
    std::vector<Gf2Vector> plain, moved;
    for (const auto& x : z[e].elements()) {
      plain.push_back(x);
      moved.push_back(x + b);
    }
    u1.bundles.push_back(plain);
    u2.bundles.push_back(moved);
  }
  return {canonicalize(u1), canonicalize(u2)};
}

}  // namespace

PresetPair fig2_pair() {
  MultiGraph g({"u", "v", "w"}, {{"u", "v"}, {"u", "w"}, {"v", "w"}});
  auto zero = Gf2Vector::parse("0");
  auto one = Gf2Vector::parse("1");
  GroupUgInstance u1{1, g, {{zero}, {zero}, {zero}}};
  GroupUgInstance u2{1, g, {{one}, {zero}, {zero}}};
  return {"fig2", canonicalize(u1), canonicalize(u2), 2};
}

std::vector<Gf2Subspace> fig3_subspaces() {
  return {span_of("01"), span_of("10"), span_of("11"), span_of("11"), span_of("10"), span_of("01")};
}

std::vector<Gf2Subspace> search_fig3_subspaces() {
  const std::vector<Gf2Subspace> lines{span_of("01"), span_of("10"), span_of("11")};
  auto k4 = preset_graph("K4");
  // Canonical K4 edges: v1v2, v1v3, v1v4, v2v3, v2v4, v3v4.
  const std::vector<int> free_edges{0, 1, 3, 4};
  std::vector<Gf2Subspace> z(6);
  z[2] = span_of("11");
  z[5] = span_of("01");
  for (int code = 0; code < 81; ++code) {
    int rest = code;
    for (int i = 3; i >= 0; --i) {
      z[free_edges[i]] = lines[rest % 3];
      rest /= 3;
    }
    EdgeData ed{2, z, std::vector<Gf2Vector>(6, Gf2Vector::zero(2))};
    ed.b[5] = Gf2Vector::parse("10");
    auto good = classify_good_edges(k4, ed, 2);
    bool all_good = true;
    for (char c : good) all_good = all_good && c;
    if (!all_good) continue;
    if (exact_opt(k4_pair(z).second).optimum == Rational(5, 12)) return z;
  }
  throw Error(ErrorKind::NotFound, "no K4 subspace assignment meets the fig3 conditions");
}

PresetPair fig3_pair() {
  auto [u1, u2] = k4_pair(fig3_subspaces());
  return {"fig3", u1, u2, 2};
}

PresetPair preset_pair(std::string_view name) {
  if (name == "fig2") return fig2_pair();
  if (name == "fig3") return fig3_pair();
  throw Error(ErrorKind::NotFound, "unknown preset pair '" + std::string(name) + "'");
}

std::vector<std::string> preset_pair_names() { return {"fig2", "fig3"}; }

GroupUgInstance preset_instance(std::string_view name) {
  std::string_view base = name;
  bool lifted = false;
  constexpr std::string_view suffix = "-lifted";
  if (base.size() > suffix.size() && base.substr(base.size() - suffix.size()) == suffix) {
    lifted = true;
    base.remove_suffix(suffix.size());
  }
  auto dash = base.rfind('-');
  if (dash != std::string_view::npos) {
    auto pair_name = base.substr(0, dash);
    auto which = base.substr(dash + 1);
    if ((pair_name == "fig2" || pair_name == "fig3") && (which == "u1" || which == "u2")) {
      auto p = preset_pair(pair_name);
      const auto& u = which == "u1" ? p.u1 : p.u2;
      return lifted ? lift(u) : u;
    }
  }
  throw Error(ErrorKind::NotFound, "unknown preset instance '" + std::string(name) + "'");
}

std::vector<std::string> preset_instance_names() {
  std::vector<std::string> out;
  for (const char* p : {"fig2", "fig3"})
    for (const char* w : {"u1", "u2"}) {
      out.push_back(std::string(p) + "-" + w);
      out.push_back(std::string(p) + "-" + w + "-lifted");
    }
  return out;
}

}  // namespace ugfpc
