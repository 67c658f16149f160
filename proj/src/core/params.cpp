#include "core/params.hpp"

#include <cmath>

#include "core/error.hpp"

namespace ugfpc {

namespace {

Rational pow2(int e) {
  if (e >= 0) return Rational(pow_int(BigInt(2), static_cast<unsigned>(e)));
  return Rational(BigInt(1), pow_int(BigInt(2), static_cast<unsigned>(-e)));
}

// True iff 2^t >= x for rational t and rational x > 0. With t = p/k (k > 0)
// this is 2^p >= x^k, compared as integers.
bool pow2_at_least(const Rational& t, const Rational& x) {
  BigInt p = numerator_of(t);
  BigInt k = denominator_of(t);
  if (k > 4096) throw Error(ErrorKind::Domain, "exponent denominator too large for exact comparison");
  auto kk = static_cast<unsigned>(k);
  BigInt xn = pow_int(numerator_of(x), kk);
  BigInt xd = pow_int(denominator_of(x), kk);
  if (p >= 0) {
    if (p > 1u << 20) throw Error(ErrorKind::Domain, "exponent too large for exact comparison");
    return pow_int(BigInt(2), static_cast<unsigned>(p)) * xd >= xn;
  }
  BigInt mp = -p;
  if (mp > 1u << 20) throw Error(ErrorKind::Domain, "exponent too large for exact comparison");
  return xd >= xn * pow_int(BigInt(2), static_cast<unsigned>(mp));
}

}  // namespace

Rational soundness_base(int ell) {
  if (ell < 1) throw Error(ErrorKind::Domain, "l must be a positive integer");
  return Rational(1) / (pow2(2 * ell - 1) + pow2(ell - 1));
}

ConstructionParams derive_params(const Rational& epsilon, const Rational& delta, int ell) {
  if (!(epsilon > 0 && epsilon < Rational(1, 2)))
    throw Error(ErrorKind::Domain, "epsilon must lie in (0, 1/2), got " + to_string(epsilon));
  if (!(delta > 0)) throw Error(ErrorKind::Domain, "delta must be positive, got " + to_string(delta));
  if (ell < 1 || ell > 16) throw Error(ErrorKind::Domain, "l must lie in [1, 16]");

  ConstructionParams p;
  p.epsilon = epsilon;
  p.delta = delta;
  p.ell = ell;
  p.d = (1 << ell) + 1;
  const Rational s0 = soundness_base(ell);
  p.gamma = 1 - (s0 + delta / pow2(ell)) / (s0 + delta);
  if (!(p.gamma > 0)) throw Error(ErrorKind::Domain, "gamma is not positive");

  // m = ceil(a + b log2(1/eps)) is the least integer M with
  // 2^((M - a)/b) >= 1/eps. Start from a floating estimate and correct it
  // with exact comparisons.
  const Rational a = Rational(1) / delta + (Rational(2) / (delta * p.d) + 1) * ell;
  const Rational b = Rational(2) / (delta * p.d);
  const Rational inv_eps = Rational(1) / epsilon;
  const double estimate = a.convert_to<double>() + b.convert_to<double>() * std::log2(inv_eps.convert_to<double>());
  if (!std::isfinite(estimate) || estimate > 4096) throw Error(ErrorKind::Domain, "m is too large to represent");
  BigInt mm = BigInt(static_cast<long long>(std::ceil(estimate)));
  auto ok = [&](const BigInt& cand) { return pow2_at_least((Rational(cand) - a) / b, inv_eps); };
  while (!ok(mm)) ++mm;
  while (ok(mm - 1)) --mm;
  p.m = static_cast<int>(mm);
  if (p.m < ell + 1) throw Error(ErrorKind::Domain, "derived m is not above l");

  const BigInt top = pow_int(BigInt(2), static_cast<unsigned>(p.m * ell + 1)) *
                     (pow_int(BigInt(p.d), static_cast<unsigned>(p.m - ell)) - 1);
  p.r = ceil(Rational(top) / (p.gamma * epsilon)) + 1;
  p.q = pow_int(BigInt(2), static_cast<unsigned>(p.m));
  return p;
}

Rational lemma53_gap(int d, int n) {
  if (d < 3 || n < 1) throw Error(ErrorKind::Domain, "lemma53_gap requires d >= 3 and n >= 1");
  const BigInt dn = pow_int(BigInt(d), static_cast<unsigned>(n));
  const BigInt dn1 = pow_int(BigInt(d), static_cast<unsigned>(n - 1));
  const Rational rhs = Rational(dn - 1, BigInt(d - 1));
  const Rational lhs = Rational(dn - dn1, pow_int(BigInt(d - 1), static_cast<unsigned>(n))) + Rational(dn1) - 1;
  return rhs - lhs;
}

GapParams approx_gap_params(const Rational& alpha) {
  if (!(alpha > 0 && alpha <= 1)) throw Error(ErrorKind::Domain, "alpha must lie in (0, 1], got " + to_string(alpha));
  auto ratio_at = [](int ell) { return pow2(ell + 1) / (pow2(2 * ell - 1) + pow2(ell - 1)); };
  GapParams g;
  g.alpha = alpha;
  g.ell = 1;
  while (ratio_at(g.ell) > alpha) {
    ++g.ell;
    if (g.ell > 4096) throw Error(ErrorKind::Domain, "alpha too small");
  }
  g.delta = soundness_base(g.ell);
  g.c = pow2(-g.ell);
  g.s = soundness_base(g.ell) + g.delta;
  g.ratio = g.s / g.c;
  // ceil((2 - log2 alpha)/2) is the least l with alpha 4^(l-1) >= 1.
  g.ell_formula = 1;
  while (alpha * pow2(2 * (g.ell_formula - 1)) < 1) ++g.ell_formula;
  g.ratio_formula = ratio_at(g.ell_formula);
  g.formula_sufficient = g.ratio_formula <= alpha;
  return g;
}

}  // namespace ugfpc
