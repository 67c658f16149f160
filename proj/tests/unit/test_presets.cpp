#include <doctest.h>

#include "core/construction.hpp"
#include "core/error.hpp"
#include "core/lifting.hpp"
#include "core/presets.hpp"
#include "core/solver.hpp"
#include "oracles.hpp"

using namespace ugfpc;

TEST_CASE("triangle pair optima") {
  auto p = fig2_pair();
  CHECK(exact_opt(p.u1).optimum == 1);
  CHECK(exact_opt(p.u2).optimum == Rational(2, 3));
  CHECK(oracle::brute_opt(p.u2) == Rational(2, 3));
  CHECK(oracle::brute_opt(lift(p.u1)) == 1);
  CHECK(oracle::brute_opt(lift(p.u2)) == Rational(2, 3));
  CHECK(is_completely_satisfiable(p.u1).satisfiable);
  CHECK_FALSE(is_completely_satisfiable(p.u2).satisfiable);
}

TEST_CASE("K4 pair optima and frozen subspaces") {
  auto p = fig3_pair();
  CHECK(exact_opt(p.u1).optimum == Rational(1, 2));
  CHECK(exact_opt(p.u2).optimum == Rational(5, 12));
  CHECK(oracle::brute_opt(p.u2) == Rational(5, 12));
  CHECK(search_fig3_subspaces() == fig3_subspaces());
  auto ed = edge_data_from_pair(p.u1, p.u2);
  CHECK(ed.z == fig3_subspaces());
  auto good = classify_good_edges(p.u1.graph, ed, 2);
  for (char c : good) CHECK(c);
  for (std::size_t e = 0; e < ed.b.size(); ++e) CHECK(ed.b[e].str() == (e == 5 ? "10" : "00"));
}

TEST_CASE("preset instance names") {
  for (const auto& name : preset_instance_names()) CHECK_NOTHROW(preset_instance(name));
  CHECK(preset_instance("fig3-u1-lifted").graph.vertex_count() == 16);
  CHECK(preset_instance("fig2-u2-lifted").graph.vertex_count() == 6);
  CHECK_THROWS_AS(preset_instance("fig4-u1"), Error);
}
