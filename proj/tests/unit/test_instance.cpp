#include <doctest.h>

#include "core/error.hpp"
#include "core/instance.hpp"
#include "core/lifting.hpp"
#include "core/solver.hpp"
#include "oracles.hpp"

using namespace ugfpc;

TEST_CASE("instance JSON round trips canonically") {
  auto j = nlohmann::json::parse(R"({"format":"ug-group-v1","m":2,"vertices":["b","a","c"],
    "edges":[{"u":"b","v":"a","shifts":["11","01"]},{"u":"a","v":"c","shifts":["00"]}]})");
  auto u = canonicalize(instance_from_json(j));
  auto back = instance_from_json(nlohmann::json::parse(instance_to_json(u).dump()));
  CHECK(instance_to_json(back) == instance_to_json(u));
  CHECK(u.graph.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(u.constraint_count() == 3);
}

TEST_CASE("validation reports each broken invariant") {
  GroupUgInstance u;
  u.m = 2;
  u.graph.add_vertex("a");
  u.graph.add_vertex("b");
  u.graph.add_edge(0, 1);
  u.bundles.push_back({});
  CHECK_FALSE(validate(u).empty());
  u.bundles[0] = {Gf2Vector::parse("1")};
  CHECK_FALSE(validate(u).empty());
  u.bundles[0] = {Gf2Vector::parse("01"), Gf2Vector::parse("01")};
  CHECK_FALSE(validate(u).empty());
  u.bundles[0] = {Gf2Vector::parse("01")};
  CHECK(validate(u).empty());
  u.graph.add_edge(0, 1);
  u.bundles.push_back({Gf2Vector::parse("10")});
  CHECK_FALSE(validate(u).empty());
  CHECK_THROWS_AS(require_valid(u), Error);
  CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"m":1})")), Error);
}

TEST_CASE("value counts bundle hits and treats the empty instance as 1") {
  GroupUgInstance empty;
  empty.m = 1;
  empty.graph.add_vertex("a");
  CHECK(value(empty, {Gf2Vector::zero(1)}) == 1);
  auto j = nlohmann::json::parse(R"({"format":"ug-group-v1","m":1,"vertices":["a","b","c"],
    "edges":[{"u":"a","v":"b","shifts":["1"]},{"u":"b","v":"c","shifts":["0"]},{"u":"a","v":"c","shifts":["0"]}]})");
  auto u = canonicalize(instance_from_json(j));
  auto a = assignment_from_json(u, nlohmann::json::parse(R"({"a":"0","b":"0","c":"0"})"));
  CHECK(value(u, a) == Rational(2, 3));
  CHECK_THROWS_AS(assignment_from_json(u, nlohmann::json::parse(R"({"a":"0"})")), Error);
}

TEST_CASE("exact optimum agrees with exhaustive enumeration") {
  Rng rng(2024);
  for (int t = 0; t < 150; ++t) {
    int m = 1 + static_cast<int>(rng.below(3));
    int n = 2 + static_cast<int>(rng.below(m == 3 ? 3 : 4));
    auto u = oracle::random_instance(rng, m, n, 1 + static_cast<int>(rng.below(6)), 3);
    auto r = exact_opt(u);
    CHECK(r.optimum == oracle::brute_opt(u));
    CHECK(value(u, r.witness) == r.optimum);
  }
}

TEST_CASE("exact optimum respects its budget") {
  Rng rng(1);
  auto u = oracle::random_instance(rng, 4, 6, 8, 2);
  CHECK_THROWS_AS(exact_opt(u, 1000), Error);
}

TEST_CASE("satisfiability check agrees with the optimum and certifies conflicts") {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    int m = 1 + static_cast<int>(rng.below(2));
    auto u = oracle::random_instance(rng, m, 2 + static_cast<int>(rng.below(4)), 1 + static_cast<int>(rng.below(6)),
                                     t % 3 == 0 ? 2 : 1);
    auto s = is_completely_satisfiable(u);
    CHECK(s.satisfiable == (oracle::brute_opt(u) == 1));
    if (s.satisfiable) {
      CHECK(value(u, s.assignment) == 1);
    } else {
      REQUIRE(s.conflict.has_value());
      CHECK(s.conflict->label_a != s.conflict->label_b);
    }
  }
}

TEST_CASE("lifting preserves the optimum and maps witnesses") {
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    auto u = oracle::random_instance(rng, 1, 2 + static_cast<int>(rng.below(2)), 1 + static_cast<int>(rng.below(3)), 2);
    auto l = lift(u);
    CHECK(l.graph.vertex_count() == u.graph.vertex_count() * 2);
    CHECK(l.constraint_count() == u.constraint_count() * 4);
    CHECK(oracle::brute_opt(l) == oracle::brute_opt(u));
    auto base = exact_opt(u);
    CHECK(value(l, lift_assignment(u, l, base.witness)) == base.optimum);
  }
}

TEST_CASE("lifted names split at the last separator") {
  auto p = parse_lifted_name("a#b#0110");
  REQUIRE(p.has_value());
  CHECK(p->base == "a#b");
  CHECK(p->label.str() == "0110");
  CHECK_FALSE(parse_lifted_name("plain").has_value());
  CHECK_FALSE(parse_lifted_name("v#12").has_value());
  CHECK(lifted_name("v", Gf2Vector::parse("01")) == "v#01");
}
