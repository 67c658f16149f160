#include "core/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "core/error.hpp"

namespace ugfpc {

std::size_t GroupUgInstance::constraint_count() const {
  std::size_t total = 0;
  for (const auto& b : bundles) total += b.size();
  return total;
}

std::size_t satisfied_count(const GroupUgInstance& u, const Assignment& a) {
  if (static_cast<int>(a.size()) != u.graph.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "assignment does not cover every vertex");
  std::size_t hits = 0;
  for (EdgeId e = 0; e < u.graph.edge_count(); ++e) {
    const auto& ed = u.graph.edge(e);
    auto shift = a[ed.u] + a[ed.v];
    int matches = 0;
    for (const auto& z : u.bundles[e]) matches += z == shift ? 1 : 0;
    // Distinct shifts: at most one constraint per edge can hold.
    if (matches > 1) throw Error(ErrorKind::InvalidArgument, "bundle contains duplicate shifts");
    hits += static_cast<std::size_t>(matches);
  }
  return hits;
}

Rational value(const GroupUgInstance& u, const Assignment& a) {
  auto hits = satisfied_count(u, a);
  auto total = u.constraint_count();
  if (total == 0) return Rational(1);
  return Rational(BigInt(hits), BigInt(total));
}

std::vector<std::string> validate(const GroupUgInstance& u) {
  std::vector<std::string> issues;
  if (u.m < 1 || u.m > kMaxDim) issues.push_back("m must lie in [1, " + std::to_string(kMaxDim) + "]");
  if (static_cast<int>(u.bundles.size()) != u.graph.edge_count())
    issues.push_back("bundle count " + std::to_string(u.bundles.size()) + " differs from edge count " +
                     std::to_string(u.graph.edge_count()));
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < u.graph.edge_count(); ++e) {
    const auto& ed = u.graph.edge(e);
    std::string label = "edge (" + u.graph.name(ed.u) + ", " + u.graph.name(ed.v) + ")";
    if (ed.u == ed.v) issues.push_back(label + " is a self-loop");
    if (!seen.insert(std::minmax(ed.u, ed.v)).second) issues.push_back(label + " is a parallel edge");
    if (e >= static_cast<EdgeId>(u.bundles.size())) continue;
    const auto& bundle = u.bundles[e];
    if (bundle.empty()) issues.push_back(label + " has no bundle");
    std::set<Gf2Vector> distinct;
    for (const auto& z : bundle) {
      if (z.dim() != u.m)
        issues.push_back(label + " shift '" + z.str() + "' has length " + std::to_string(z.dim()) +
                         ", expected " + std::to_string(u.m));
      if (!distinct.insert(z).second) issues.push_back(label + " repeats shift '" + z.str() + "'");
    }
  }
  return issues;
}

void require_valid(const GroupUgInstance& u) {
  auto issues = validate(u);
  if (issues.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& s : issues) msg += " " + s + ";";
  msg.pop_back();
  throw Error(ErrorKind::InvalidArgument, msg);
}

GroupUgInstance canonicalize(const GroupUgInstance& u) {
  require_valid(u);
  auto [graph, remap] = u.graph.canonical();
  GroupUgInstance out{u.m, std::move(graph), {}};
  out.bundles.resize(u.bundles.size());
  for (std::size_t e = 0; e < u.bundles.size(); ++e) {
    auto bundle = u.bundles[e];
    std::sort(bundle.begin(), bundle.end());
    out.bundles[remap[e]] = std::move(bundle);
  }
  return out;
}

nlohmann::ordered_json instance_to_json(const GroupUgInstance& u) {
  auto c = canonicalize(u);
  nlohmann::ordered_json j;
  j["format"] = "ug-group-v1";
  j["m"] = c.m;
  j["vertices"] = c.graph.names();
  auto edges = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < c.graph.edge_count(); ++e) {
    nlohmann::ordered_json item;
    item["u"] = c.graph.name(c.graph.edge(e).u);
    item["v"] = c.graph.name(c.graph.edge(e).v);
    auto shifts = nlohmann::ordered_json::array();
    for (const auto& z : c.bundles[e]) shifts.push_back(z.str());
    item["shifts"] = shifts;
    edges.push_back(item);
  }
  j["edges"] = edges;
  return j;
}

GroupUgInstance instance_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "instance JSON must be an object");
    if (j.at("format").get<std::string>() != "ug-group-v1")
      throw Error(ErrorKind::Parse, "instance JSON: expected format ug-group-v1");
    GroupUgInstance u;
    u.m = j.at("m").get<int>();
    if (u.m < 1 || u.m > kMaxDim) throw Error(ErrorKind::Parse, "instance JSON: m out of range");
    for (const auto& v : j.at("vertices")) u.graph.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
      u.graph.add_edge(e.at("u").get<std::string>(), e.at("v").get<std::string>());
      std::vector<Gf2Vector> bundle;
      if (e.contains("shifts"))
        for (const auto& z : e.at("shifts")) bundle.push_back(Gf2Vector::parse(z.get<std::string>()));
      u.bundles.push_back(std::move(bundle));
    }
    return u;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("instance JSON: ") + ex.what());
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, std::string("instance JSON: ") + ex.what());
  }
}

nlohmann::ordered_json assignment_to_json(const GroupUgInstance& u, const Assignment& a) {
  std::vector<VertexId> order(static_cast<std::size_t>(u.graph.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId x, VertexId y) { return u.graph.name(x) < u.graph.name(y); });
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto v : order) j[u.graph.name(v)] = a.at(static_cast<std::size_t>(v)).str();
  return j;
}

Assignment assignment_from_json(const GroupUgInstance& u, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "assignment must be an object");
  Assignment a(static_cast<std::size_t>(u.graph.vertex_count()));
  std::vector<char> seen(a.size(), 0);
  for (const auto& [name, bits] : j.items()) {
    auto v = u.graph.require(name);
    auto label = Gf2Vector::parse(bits.get<std::string>());
    if (label.dim() != u.m) throw Error(ErrorKind::DimensionMismatch, "label for '" + name + "' has wrong length");
    a[v] = label;
    seen[v] = 1;
  }
  for (VertexId v = 0; v < u.graph.vertex_count(); ++v)
    if (!seen[v]) throw Error(ErrorKind::InvalidArgument, "assignment misses vertex '" + u.graph.name(v) + "'");
  return a;
}

RelationalView::RelationalView(const GroupUgInstance& u) : size_(u.graph.vertex_count()) {
  for (EdgeId e = 0; e < u.graph.edge_count(); ++e) {
    const auto& ed = u.graph.edge(e);
    auto& list = pairs_[key(ed.u, ed.v)];
    for (const auto& z : u.bundles[e]) list.push_back(z.word());
  }
  for (auto& [k, list] : pairs_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::uint64_t RelationalView::key(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::span<const std::uint64_t> RelationalView::relations(VertexId a, VertexId b) const {
  auto it = pairs_.find(key(a, b));
  if (it == pairs_.end()) return {};
  return it->second;
}

}  // namespace ugfpc
