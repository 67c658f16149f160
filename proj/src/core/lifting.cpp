#include "core/lifting.hpp"

#include "core/error.hpp"

namespace ugfpc {

std::string lifted_name(std::string_view base, const Gf2Vector& g) {
  return std::string(base) + "#" + g.str();
}

std::optional<LiftedName> parse_lifted_name(std::string_view name) {
  auto hash = name.rfind('#');
  if (hash == std::string_view::npos || hash == 0 || hash + 1 == name.size()) return std::nullopt;
  try {
    return LiftedName{std::string(name.substr(0, hash)), Gf2Vector::parse(name.substr(hash + 1))};
  } catch (const Error&) {
    return std::nullopt;
  }
}

GroupUgInstance lift(const GroupUgInstance& u, std::uint64_t budget) {
  auto base = canonicalize(u);
  if (base.m > 20) throw Error(ErrorKind::Budget, "lift: q = 2^" + std::to_string(base.m) + " is too large");
  const std::uint64_t q = base.q();
  BigInt constraints = BigInt(q) * q * base.constraint_count();
  BigInt vertices = BigInt(q) * base.graph.vertex_count();
  if (constraints > BigInt(budget) || vertices > BigInt(budget))
    throw Error(ErrorKind::Budget, "lift: " + constraints.str() + " lifted constraints exceed the budget of " +
                                       std::to_string(budget));
  GroupUgInstance out;
  out.m = base.m;
  for (VertexId v = 0; v < base.graph.vertex_count(); ++v)
    for (std::uint64_t g = 0; g < q; ++g) out.graph.add_vertex(lifted_name(base.graph.name(v), Gf2Vector(base.m, g)));
  auto id = [&](VertexId v, std::uint64_t g) { return static_cast<VertexId>(v * static_cast<VertexId>(q) + static_cast<VertexId>(g)); };
  for (EdgeId e = 0; e < base.graph.edge_count(); ++e) {
    const auto& ed = base.graph.edge(e);
    for (std::uint64_t g1 = 0; g1 < q; ++g1)
      for (std::uint64_t g2 = 0; g2 < q; ++g2) {
        out.graph.add_edge(id(ed.u, g1), id(ed.v, g2));
        std::vector<Gf2Vector> bundle;
        for (const auto& z : base.bundles[e]) bundle.emplace_back(base.m, z.word() ^ g1 ^ g2);
        out.bundles.push_back(std::move(bundle));
      }
  }
  return canonicalize(out);
}

Assignment lift_assignment(const GroupUgInstance& base, const GroupUgInstance& lifted, const Assignment& a) {
  Assignment out;
  for (VertexId v = 0; v < lifted.graph.vertex_count(); ++v) {
    auto parsed = parse_lifted_name(lifted.graph.name(v));
    if (!parsed) throw Error(ErrorKind::InvalidArgument, "not a lifted vertex name: " + lifted.graph.name(v));
    out.push_back(a.at(static_cast<std::size_t>(base.graph.require(parsed->base))) + parsed->label);
  }
  return out;
}

}  // namespace ugfpc
