#include <doctest.h>

#include "core/error.hpp"
#include "core/params.hpp"

using namespace ugfpc;

// Fixtures frozen from tests/oracles/params_oracle.py (Python Fraction
// arithmetic, exact integer comparison for the logarithm).
TEST_CASE("derived parameters match the independent oracle") {
  struct Row {
    const char *eps, *delta;
    int ell, d;
    const char* gamma;
    int m;
    const char* r;
  };
  for (auto row : {Row{"1/4", "1/3", 1, 3, "1/4", 10, "644939777"},
                   Row{"1/4", "1/3", 2, 5, "15/26", 10, "5679772126414"},
                   Row{"1/8", "1/2", 1, 3, "3/10", 9, "179131735"},
                   Row{"1/3", "1/10", 1, 3, "3/26", 29, "638657990304312894423041"}}) {
    CAPTURE(row.eps);
    CAPTURE(row.ell);
    auto p = derive_params(parse_rational(row.eps), parse_rational(row.delta), row.ell);
    CHECK(p.d == row.d);
    CHECK(to_string(p.gamma) == to_string(parse_rational(row.gamma)));
    CHECK(p.m == row.m);
    CHECK(p.r.str() == row.r);
    CHECK(p.q == pow_int(2, static_cast<unsigned>(row.m)));
  }
}

TEST_CASE("parameter domain is enforced") {
  CHECK_THROWS_AS(derive_params(parse_rational("1/2"), parse_rational("1/3"), 1), Error);
  CHECK_THROWS_AS(derive_params(parse_rational("1/4"), parse_rational("0"), 1), Error);
  CHECK_THROWS_AS(derive_params(parse_rational("1/4"), parse_rational("1/3"), 0), Error);
}

TEST_CASE("counting inequality slack") {
  CHECK(lemma53_gap(3, 1) == 0);
  CHECK(lemma53_gap(3, 2) == Rational(1, 2));
  for (int d = 3; d <= 10; ++d)
    for (int n = 1; n <= 12; ++n) CHECK(lemma53_gap(d, n) >= 0);
  CHECK_THROWS_AS(lemma53_gap(2, 1), Error);
}

TEST_CASE("approximation gap choice meets s <= alpha c and flags the closed form") {
  struct Row {
    const char* alpha;
    int ell, ell_formula;
  };
  for (auto row : {Row{"1", 2, 1}, Row{"1/2", 3, 2}, Row{"1/4", 4, 2}, Row{"1/10", 6, 3}, Row{"3/4", 3, 2},
                   Row{"1/100", 9, 5}}) {
    CAPTURE(row.alpha);
    auto g = approx_gap_params(parse_rational(row.alpha));
    CHECK(g.ell == row.ell);
    CHECK(g.ell_formula == row.ell_formula);
    CHECK(g.s <= g.alpha * g.c);
    CHECK(g.c == Rational(1) / pow_int(2, static_cast<unsigned>(g.ell)));
    CHECK(g.s == soundness_base(g.ell) + g.delta);
    CHECK(g.formula_sufficient == (row.ell_formula >= row.ell));
  }
  CHECK_FALSE(approx_gap_params(1).formula_sufficient);
  CHECK_THROWS_AS(approx_gap_params(0), Error);
  CHECK_THROWS_AS(approx_gap_params(Rational(3, 2)), Error);
}
