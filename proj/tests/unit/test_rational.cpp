#include <doctest.h>

#include "core/error.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

using namespace ugfpc;

TEST_CASE("rationals cross the boundary as num/den") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("3")) == "3/1");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/"), Error);
  CHECK(ceil(parse_rational("7/2")) == 4);
  CHECK(floor(parse_rational("-7/2")) == -4);
  CHECK(ceil(parse_rational("-7/2")) == -3);
  CHECK(pow_int(3, 40).str() == "12157665459056928801");
}

TEST_CASE("seeded streams are reproducible and independent per task") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  auto x = Rng::derived(1, 0), y = Rng::derived(1, 1), z = Rng::derived(1, 0);
  auto xv = x.next();
  CHECK(xv != y.next());
  CHECK(xv == z.next());
  Rng r(5);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
  CHECK(r.bits(0) == 0);
}
