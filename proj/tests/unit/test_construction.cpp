#include <doctest.h>

#include <filesystem>

#include "core/construction.hpp"
#include "core/error.hpp"
#include "core/lifting.hpp"
#include "core/solver.hpp"
#include "oracles.hpp"

using namespace ugfpc;

namespace {

struct PathFixture {
  MultiGraph graph;
  Path path;
  EdgeData ed;
};

// Path p0 - p1 - ... - pL with independent Z, b, resampled until the Z's
// span F_2^m.
PathFixture spanning_path(Rng& rng, int m, int ell, int length) {
  PathFixture f;
  std::vector<std::string> names;
  for (int i = 0; i <= length; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < length; ++i) edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(i + 1)]);
  f.graph = MultiGraph(names, edges);
  for (int i = 0; i <= length; ++i) f.path.vertices.push_back(i);
  for (int i = 0; i < length; ++i) f.path.edges.push_back(i);
  f.ed.m = m;
  while (true) {
    f.ed.z.clear();
    f.ed.b.clear();
    Gf2Subspace total(m);
    for (int i = 0; i < length; ++i) {
      f.ed.z.push_back(sample_subspace(m, ell, rng));
      f.ed.b.push_back(sample_vector(m, rng));
      total = join(total, f.ed.z.back());
    }
    if (total.is_full()) return f;
  }
}

GroupUgInstance bundles_of(const MultiGraph& g, const EdgeData& ed, bool shifted) {
  GroupUgInstance u{ed.m, g, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<Gf2Vector> bundle;
    for (const auto& z : ed.z[static_cast<std::size_t>(e)].elements())
      bundle.push_back(shifted ? z + ed.b[static_cast<std::size_t>(e)] : z);
    u.bundles.push_back(bundle);
  }
  return canonicalize(u);
}

}  // namespace

TEST_CASE("path extension yields a partial isomorphism along the whole path") {
  Rng rng(31337);
  for (int t = 0; t < 60; ++t) {
    int m = 2 + static_cast<int>(rng.below(3));
    int ell = 1 + static_cast<int>(rng.below(m == 2 ? 1 : 2));
    int length = (m + ell - 1) / ell + static_cast<int>(rng.below(3));
    auto f = spanning_path(rng, m, ell, length);
    auto gs = sample_vector(m, rng), ge = sample_vector(m, rng);
    auto g = extend_along_path(f.graph, f.path, f.ed, gs, ge);
    REQUIRE(g.size() == f.path.vertices.size());
    CHECK(g.front() == gs);
    CHECK(g.back() == ge);
    auto a = lift(bundles_of(f.graph, f.ed, false));
    auto b = lift(bundles_of(f.graph, f.ed, true));
    std::vector<std::pair<int, int>> pairs;
    for (VertexId v = 0; v < f.graph.vertex_count(); ++v)
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        Gf2Vector label(m, x);
        pairs.emplace_back(*a.graph.find(lifted_name(f.graph.name(v), label)),
                           *b.graph.find(lifted_name(f.graph.name(v), label + g[static_cast<std::size_t>(v)])));
      }
    CHECK(oracle::naive_partial_iso(a, b, pairs));
  }
}

TEST_CASE("path extension refuses non-spanning paths") {
  MultiGraph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EdgeData ed{2, {rref_basis(std::vector<Gf2Vector>{Gf2Vector::parse("01")}, 2),
                  rref_basis(std::vector<Gf2Vector>{Gf2Vector::parse("01")}, 2)},
              {Gf2Vector::zero(2), Gf2Vector::zero(2)}};
  Path p{{0, 1, 2}, {0, 1}};
  CHECK_THROWS_AS(extend_along_path(g, p, ed, Gf2Vector::zero(2), Gf2Vector::parse("10")), Error);
  CHECK_FALSE(try_extend_along_path(g, p, ed, Gf2Vector::zero(2), Gf2Vector::parse("10")).has_value());
  auto ok = try_extend_along_path(g, p, ed, Gf2Vector::zero(2), Gf2Vector::parse("01"));
  REQUIRE(ok.has_value());
  CHECK((*ok)[2].str() == "01");
}

TEST_CASE("good edges match direct path enumeration") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = preset_graph(seed % 2 ? "Petersen" : "K4");
    auto ed = sample_edge_data(g, 2 + static_cast<int>(seed % 2), 1, seed);
    for (int r = 1; r <= 3; ++r) {
      auto good = classify_good_edges(g, ed, r);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        bool expect = true;
        for (const auto& p : paths_from_edge(g, e, r)) {
          std::vector<Gf2Vector> vs;
          for (auto pe : p.edges)
            for (const auto& v : ed.z[static_cast<std::size_t>(pe)].basis()) vs.push_back(v);
          if (!rref_basis(vs, ed.m).is_full()) expect = false;
        }
        CHECK(static_cast<bool>(good[static_cast<std::size_t>(e)]) == expect);
      }
    }
  }
}

TEST_CASE("sampling is deterministic and recoverable from the instance pair") {
  auto g = preset_graph("Petersen");
  auto a = sample_edge_data(g, 3, 2, 5), b = sample_edge_data(g, 3, 2, 5);
  CHECK(a.z == b.z);
  CHECK(a.b == b.b);
  for (const auto& z : a.z) CHECK(z.dim() == 2);
  auto out = build_gap_pair(g, a, 1);
  auto back = edge_data_from_pair(out.u1_tilde, out.u2_tilde);
  CHECK(back.z == out.edge_data.z);
  for (std::size_t e = 0; e < back.b.size(); ++e)
    CHECK(contains(out.edge_data.z[e], back.b[e] + out.edge_data.b[e]));
}

TEST_CASE("gap pair keeps good edges only in U1 and U2") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = preset_graph("K4");
    auto ed = sample_edge_data(g, 2, 1, seed);
    auto out = build_gap_pair(g, ed, 2);
    int good = 0;
    for (char c : out.good) good += c;
    CHECK(out.u1.graph.edge_count() == good);
    CHECK(out.u2.graph.edge_count() == good);
    CHECK(out.u1_tilde.graph.edge_count() == 6);
    CHECK(out.u1.graph.vertex_count() == 4);
    for (std::size_t e = 0; e < out.u1_tilde.bundles.size(); ++e) CHECK(out.u1_tilde.bundles[e].size() == 2);
    CHECK(exact_opt(out.u1_tilde).optimum == Rational(1, 2));
    if (good > 0) CHECK(exact_opt(out.u1).optimum == Rational(1, 2));
  }
}

TEST_CASE("completeness holds on the full instance for m = 3") {
  // With l = 1 and r = 2 no path spans F_2^3, so U1 is empty; the bundle
  // argument still applies to the full instance.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto out = build_gap_pair(preset_graph("K4"), sample_edge_data(preset_graph("K4"), 3, 1, seed), 2);
    CHECK(out.u1.constraint_count() == 0);
    CHECK(exact_opt(out.u1_tilde).optimum == Rational(1, 2));
    CHECK(oracle::brute_opt(out.u1_tilde) == Rational(1, 2));
  }
}

TEST_CASE("construction output is written and reported") {
  auto dir = std::filesystem::temp_directory_path() / "ugfpc_construct_test";
  std::filesystem::remove_all(dir);
  auto g = preset_graph("K4");
  ConstructOptions o;
  o.m = 2;
  o.seed = 3;
  o.epsilon = Rational(1, 4);
  o.delta = Rational(1, 3);
  o.k = 2;
  auto out = build_gap_pair(g, sample_edge_data(g, 2, 1, 3), 2);
  auto report = construction_report(out, o, 3);
  CHECK(report["faithful"] == false);
  CHECK(report["derived"]["r"] == "644939777");
  CHECK(report["derived"]["required_girth"] == "5804457993");
  write_construction(dir, out, report);
  for (auto name : {"graph.json", "edgedata.json", "u1.json", "u2.json", "u1tilde.json", "u2tilde.json", "report.json"})
    CHECK(std::filesystem::exists(dir / name));
  std::filesystem::remove_all(dir);
}
