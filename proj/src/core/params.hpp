#pragma once

#include "core/rational.hpp"

namespace ugfpc {

/// Parameters of the gap construction. r grows like 2^(m l), so it is a
/// big integer; q = 2^m.
struct ConstructionParams {
  Rational epsilon;
  Rational delta;
  int ell = 1;
  int d = 3;
  Rational gamma;
  int m = 2;
  BigInt r;
  BigInt q;
};

/// 1 / (2^(2l-1) + 2^(l-1)), the soundness value the construction targets
/// before the additive delta.
Rational soundness_base(int ell);

/// d = 2^l + 1,
/// gamma = 1 - (s0 + delta/2^l) / (s0 + delta),
/// m = ceil(1/delta + (2/(delta d) + 1) l - (2/(delta d)) log2 epsilon),
/// r = ceil(2^(m l + 1) (d^(m-l) - 1) / (gamma epsilon)) + 1,
/// all evaluated exactly (the logarithm through integer power comparisons).
/// Throws Error(Domain) unless 0 < epsilon < 1/2, delta > 0, l >= 1.
ConstructionParams derive_params(const Rational& epsilon, const Rational& delta, int ell);

/// (d^n - 1)/(d - 1) - [(d^n - d^(n-1))/(d - 1)^n + d^(n-1) - 1]; the
/// inequality claims this is never negative. Requires d >= 3, n >= 1.
Rational lemma53_gap(int d, int n);

struct GapParams {
  Rational alpha;
  int ell = 1;          // least l with s/c <= alpha
  Rational delta;
  Rational c;           // completeness 2^-l
  Rational s;           // soundness s0 + delta
  Rational ratio;       // s / c
  int ell_formula = 1;  // ceil((2 - log2 alpha) / 2)
  Rational ratio_formula;
  bool formula_sufficient = true;
};

/// Chooses l for an alpha-approximation gap by the exact inequality
/// 2^(l+1) / (2^(2l-1) + 2^(l-1)) <= alpha, and reports the closed-form
/// choice ceil((2 - log2 alpha)/2) next to it together with whether that
/// choice actually meets the bound. Requires 0 < alpha <= 1.
GapParams approx_gap_params(const Rational& alpha);

}  // namespace ugfpc
