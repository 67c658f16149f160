#!/usr/bin/env python3
"""Independent exact-arithmetic evaluation of the construction parameters.

Used once to freeze the fixture values asserted in the C++ tests. Uses only
Python's Fraction and integer arithmetic; log2 is handled by an exact integer
comparison instead of floating point.
"""
from fractions import Fraction as F
import itertools
import math


def ceil_frac(x: F) -> int:
    return -((-x.numerator) // x.denominator)


def soundness_base(ell):
    return F(1, 2 ** (2 * ell - 1) + 2 ** (ell - 1))


def params(eps: F, delta: F, ell: int):
    d = 2 ** ell + 1
    s0 = soundness_base(ell)
    gamma = 1 - (s0 + delta / 2 ** ell) / (s0 + delta)
    a = 1 / delta + (F(2) / (delta * d) + 1) * ell
    b = F(2) / (delta * d)
    # m = ceil(a + b * log2(1/eps)); smallest M with (M - a)/b >= log2(1/eps),
    # i.e. 2^((M-a)/b) >= 1/eps; compare 2^p >= (1/eps)^q exactly.
    inv = 1 / eps
    def ok(M):
        t = (F(M) - a) / b
        p, q = t.numerator, t.denominator
        if p >= 0:
            return 2 ** p * inv.denominator ** q >= inv.numerator ** q
        return inv.denominator ** q >= inv.numerator ** q * 2 ** (-p)
    M = ceil_frac(a)
    while not ok(M):
        M += 1
    m = M
    r = ceil_frac(F(2 ** (m * ell + 1) * (d ** (m - ell) - 1)) / (gamma * eps)) + 1
    return d, gamma, m, r


def lemma53(d, n):
    lhs = F(d ** n - d ** (n - 1), (d - 1) ** n) + d ** (n - 1) - 1
    rhs = F(d ** n - 1, d - 1)
    return rhs - lhs


def gap(alpha: F):
    ell = 1
    while F(2 ** (ell + 1), 2 ** (2 * ell - 1) + 2 ** (ell - 1)) > alpha:
        ell += 1
    # closed-form rule: smallest ell with alpha * 4^(ell-1) >= 1
    lp = 1
    while alpha * 4 ** (lp - 1) < 1:
        lp += 1
    return ell, lp


if __name__ == "__main__":
    for args in [(F(1, 4), F(1, 3), 1), (F(1, 4), F(1, 3), 2), (F(1, 8), F(1, 2), 1), (F(1, 3), F(1, 10), 1)]:
        print("params", args, params(*args))
    print("lemma53(3,1)", lemma53(3, 1), "lemma53(3,2)", lemma53(3, 2))
    print("lemma53 min over sweep", min(lemma53(d, n) for d in range(3, 11) for n in range(1, 13)))
    for a in [F(1), F(1, 2), F(1, 4), F(1, 10), F(3, 4), F(1, 100)]:
        print("gap", a, gap(a))
    # Gaussian binomial (4 choose 2)_2 by brute enumeration of 2-dim subspaces of F_2^4
    spaces = set()
    for u, v in itertools.combinations(range(1, 16), 2):
        spaces.add(frozenset({0, u, v, u ^ v}))
    print("subspaces(4,2)", len(spaces))
