#include "core/construction.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace ugfpc {

EdgeData sample_edge_data(const MultiGraph& g, int m, int ell, std::uint64_t seed) {
  if (!(0 < ell && ell < m)) throw Error(ErrorKind::Domain, "sample_edge_data requires 0 < l < m");
  if (m > kMaxDim) throw Error(ErrorKind::Domain, "m exceeds 64");
  auto remap = g.canonical().second;
  std::vector<EdgeId> visit(remap.size());
  for (std::size_t e = 0; e < remap.size(); ++e) visit[remap[e]] = static_cast<EdgeId>(e);
  Rng rng(seed);
  EdgeData ed{m, std::vector<Gf2Subspace>(remap.size()), std::vector<Gf2Vector>(remap.size())};
  for (auto e : visit) {
    ed.z[e] = sample_subspace(m, ell, rng);
    ed.b[e] = sample_vector(m, rng);
  }
  return ed;
}

namespace {

void check_edge_data(const MultiGraph& g, const EdgeData& ed) {
  if (static_cast<int>(ed.z.size()) != g.edge_count() || static_cast<int>(ed.b.size()) != g.edge_count())
    throw Error(ErrorKind::InvalidArgument, "edge data does not match the graph's edge count");
  for (std::size_t e = 0; e < ed.z.size(); ++e)
    if (ed.z[e].ambient_dim() != ed.m || ed.b[e].dim() != ed.m)
      throw Error(ErrorKind::DimensionMismatch, "edge data has vectors of the wrong length");
}

// True when every continuation of the current path to total length r
// reaches a spanning set.
bool all_extensions_span(const MultiGraph& g, const EdgeData& ed, int r, VertexId tail, int length,
                         const Gf2Subspace& span, std::vector<char>& used) {
  if (span.is_full()) return true;
  if (length == r) return false;
  for (const auto& inc : g.incident(tail)) {
    if (used[inc.edge]) continue;
    used[inc.edge] = 1;
    bool ok = all_extensions_span(g, ed, r, inc.neighbor, length + 1, join(span, ed.z[inc.edge]), used);
    used[inc.edge] = 0;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::vector<char> classify_good_edges(const MultiGraph& g, const EdgeData& ed, int r) {
  if (r < 1) throw Error(ErrorKind::Domain, "r must be at least 1");
  check_edge_data(g, ed);
  std::vector<char> good(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> used(good.size(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    used[e] = 1;
    good[e] = all_extensions_span(g, ed, r, edge.v, 1, ed.z[e], used) &&
              all_extensions_span(g, ed, r, edge.u, 1, ed.z[e], used);
    used[e] = 0;
  }
  return good;
}

ConstructionOutput build_gap_pair(const MultiGraph& g, const EdgeData& ed, int r) {
  check_edge_data(g, ed);
  auto [canon, remap] = g.canonical();
  EdgeData ced{ed.m, std::vector<Gf2Subspace>(ed.z.size()), std::vector<Gf2Vector>(ed.b.size())};
  for (std::size_t e = 0; e < remap.size(); ++e) {
    ced.z[remap[e]] = ed.z[e];
    ced.b[remap[e]] = ed.b[e];
  }
  ConstructionOutput out;
  out.graph = canon;
  out.edge_data = ced;
  out.r = r;
  out.good = classify_good_edges(canon, ced, r);
  out.pruned_edge_data.m = ced.m;
  for (const auto& name : canon.names()) out.pruned.add_vertex(name);

  auto make = [&](bool shifted, bool only_good) {
    GroupUgInstance u{ced.m, {}, {}};
    for (const auto& name : canon.names()) u.graph.add_vertex(name);
    for (EdgeId e = 0; e < canon.edge_count(); ++e) {
      if (only_good && !out.good[e]) continue;
      u.graph.add_edge(canon.edge(e).u, canon.edge(e).v);
      std::vector<Gf2Vector> bundle;
      for (const auto& z : ced.z[e].elements()) bundle.push_back(shifted ? z + ced.b[e] : z);
      u.bundles.push_back(std::move(bundle));
    }
    return canonicalize(u);
  };
  for (EdgeId e = 0; e < canon.edge_count(); ++e) {
    if (!out.good[e]) continue;
    out.pruned.add_edge(canon.edge(e).u, canon.edge(e).v);
    out.pruned_edge_data.z.push_back(ced.z[e]);
    out.pruned_edge_data.b.push_back(ced.b[e]);
  }
  out.u1_tilde = make(false, false);
  out.u2_tilde = make(true, false);
  out.u1 = make(false, true);
  out.u2 = make(true, true);
  return out;
}

std::optional<std::vector<Gf2Vector>> try_extend_along_path(const MultiGraph& g, const Path& path,
                                                            const EdgeData& ed, const Gf2Vector& g_start,
                                                            const Gf2Vector& g_end) {
  check_edge_data(g, ed);
  if (path.vertices.size() != path.edges.size() + 1) throw Error(ErrorKind::InvalidArgument, "malformed path");
  if (g_start.dim() != ed.m || g_end.dim() != ed.m)
    throw Error(ErrorKind::DimensionMismatch, "end values have the wrong length");
  {
    std::set<VertexId> seen(path.vertices.begin(), path.vertices.end());
    if (seen.size() != path.vertices.size()) throw Error(ErrorKind::InvalidArgument, "path repeats a vertex");
  }
  // Greedy basis B; owner[j] is the path step that contributed basis[j].
  std::vector<Gf2Vector> basis;
  std::vector<std::size_t> owner;
  Gf2Subspace running(ed.m);
  Gf2Vector target = g_start + g_end;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    auto e = path.edges[i];
    target += ed.b[e];
    for (const auto& z : ed.z[e].basis()) {
      if (contains(running, z)) continue;
      basis.push_back(z);
      owner.push_back(i);
      running = join(running, rref_basis(std::span<const Gf2Vector>(&z, 1), ed.m));
    }
  }
  auto coeff = coordinates(basis, target);
  if (!coeff) return std::nullopt;
  std::vector<Gf2Vector> out{g_start};
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    Gf2Vector next = out.back() + ed.b[path.edges[i]];
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (owner[j] == i && (*coeff)[j]) next += basis[j];
    out.push_back(next);
  }
  if (out.back() != g_end) throw Error(ErrorKind::Domain, "path extension failed to reach the end value");
  return out;
}

std::vector<Gf2Vector> extend_along_path(const MultiGraph& g, const Path& path, const EdgeData& ed,
                                         const Gf2Vector& g_start, const Gf2Vector& g_end) {
  check_edge_data(g, ed);
  Gf2Subspace span(ed.m);
  for (auto e : path.edges) span = join(span, ed.z[e]);
  if (!span.is_full())
    throw Error(ErrorKind::Domain, "path Z's span only dimension " + std::to_string(span.dim()) + " of " +
                                       std::to_string(ed.m));
  auto out = try_extend_along_path(g, path, ed, g_start, g_end);
  if (!out) throw Error(ErrorKind::Domain, "path extension failed");
  return *out;
}

EdgeData edge_data_from_pair(const GroupUgInstance& first, const GroupUgInstance& second) {
  auto u1 = canonicalize(first);
  auto u2 = canonicalize(second);
  if (u1.m != u2.m) throw Error(ErrorKind::DimensionMismatch, "pair instances differ in m");
  if (u1.graph.names() != u2.graph.names() || u1.graph.edges() != u2.graph.edges())
    throw Error(ErrorKind::InvalidArgument, "pair instances must share vertices and edges");
  EdgeData ed{u1.m, {}, {}};
  for (EdgeId e = 0; e < u1.graph.edge_count(); ++e) {
    auto s = rref_basis(u1.bundles[e], u1.m);
    std::vector<Gf2Vector> sub(u1.bundles[e]);
    std::sort(sub.begin(), sub.end());
    if (s.dim() > 20 || s.elements() != sub)
      throw Error(ErrorKind::InvalidArgument, "first instance bundle on edge " + std::to_string(e) +
                                                  " is not a subspace");
    Gf2Vector b = *std::min_element(u2.bundles[e].begin(), u2.bundles[e].end());
    std::vector<Gf2Vector> coset;
    for (const auto& z : sub) coset.push_back(z + b);
    std::sort(coset.begin(), coset.end());
    std::vector<Gf2Vector> other(u2.bundles[e]);
    std::sort(other.begin(), other.end());
    if (coset != other)
      throw Error(ErrorKind::InvalidArgument, "second instance bundle on edge " + std::to_string(e) +
                                                  " is not a coset of the first");
    ed.z.push_back(s);
    ed.b.push_back(b);
  }
  return ed;
}

nlohmann::ordered_json edge_data_to_json(const MultiGraph& g, const EdgeData& ed) {
  auto arr = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    nlohmann::ordered_json item;
    item["edge"] = {g.name(g.edge(e).u), g.name(g.edge(e).v)};
    item["Z"] = ed.z[e].to_strings();
    item["b"] = ed.b[e].str();
    arr.push_back(item);
  }
  return arr;
}

nlohmann::ordered_json construction_report(const ConstructionOutput& out, const ConstructOptions& opts,
                                           std::uint64_t seed) {
  nlohmann::ordered_json j;
  int good = 0;
  for (char c : out.good) good += c ? 1 : 0;
  const int gi = girth(out.graph);
  j["m"] = opts.m;
  j["ell"] = opts.ell;
  j["d"] = (1 << opts.ell) + 1;
  j["r"] = opts.r;
  j["seed"] = seed;
  j["vertices"] = out.graph.vertex_count();
  j["edges"] = out.graph.edge_count();
  j["girth"] = gi == kInfiniteGirth ? nlohmann::ordered_json("infinite") : nlohmann::ordered_json(gi);
  j["good_edges"] = good;
  j["bad_edges"] = out.graph.edge_count() - good;
  j["u1_constraints"] = out.u1.constraint_count();
  j["u2_constraints"] = out.u2.constraint_count();
  j["completeness_target"] = to_string(Rational(1) / pow_int(BigInt(2), static_cast<unsigned>(opts.ell)));

  bool faithful = false;
  if (opts.epsilon && opts.delta && opts.k) {
    auto p = derive_params(*opts.epsilon, *opts.delta, opts.ell);
    BigInt girth_needed = BigInt(*opts.k + 1) * (*opts.k + 1) * p.r;
    bool regular = out.graph.is_simple() && out.graph.is_regular(p.d);
    faithful = p.m == opts.m && p.r == BigInt(opts.r) && regular && gi != kInfiniteGirth &&
               BigInt(gi) >= girth_needed;
    nlohmann::ordered_json derived;
    derived["epsilon"] = to_string(p.epsilon);
    derived["delta"] = to_string(p.delta);
    derived["k"] = *opts.k;
    derived["m"] = p.m;
    derived["r"] = p.r.str();
    derived["required_girth"] = girth_needed.str();
    j["derived"] = derived;
  }
  j["faithful"] = faithful;
  return j;
}

namespace {

void write_json(const std::filesystem::path& file, const nlohmann::ordered_json& j) {
  std::ofstream os(file);
  if (!os) throw Error(ErrorKind::Io, "cannot write " + file.string());
  os << j.dump(2) << '\n';
  if (!os) throw Error(ErrorKind::Io, "failed writing " + file.string());
}

}  // namespace

void write_construction(const std::filesystem::path& dir, const ConstructionOutput& out,
                        const nlohmann::ordered_json& report) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
  write_json(dir / "graph.json", graph_to_json(out.graph));
  write_json(dir / "edgedata.json", edge_data_to_json(out.graph, out.edge_data));
  write_json(dir / "u1.json", instance_to_json(out.u1));
  write_json(dir / "u2.json", instance_to_json(out.u2));
  write_json(dir / "u1tilde.json", instance_to_json(out.u1_tilde));
  write_json(dir / "u2tilde.json", instance_to_json(out.u2_tilde));
  write_json(dir / "report.json", report);
}

}  // namespace ugfpc
