"""Exact integer helpers: rational scalars and multi-integer Bezout coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# Rational scalars are plain fractions.Fraction values: always in lowest terms
# with a positive denominator, which is the canonical form everything else
# relies on.
Rat = Fraction


@dataclass(frozen=True)
class BezoutResult:
    """gcd g > 0 of a weight vector plus integer coefficients with sum(m*w) == g."""

    g: int
    coeffs: tuple[int, ...]


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, x, y) with a*x + b*y == g and g == gcd(|a|, |b|).

    Classical recursion on nonnegative remainders, so the coefficients are a
    deterministic function of the input.
    """
    if b < 0:
        g, x, y = ext_gcd(a, -b)
        return g, x, -y
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def bezout_multi(weights: Sequence[int]) -> BezoutResult:
    """Fold ext_gcd over a weight vector, left to right.

    Zero entries get coefficient 0.  Folding the next nonzero entry w into the
    running gcd g replaces every earlier coefficient c by c*y and sets the new
    one to x, where (g', x, y) = ext_gcd(w, g).  The fold order makes the
    coefficient list deterministic.
    """
    ws = [int(w) for w in weights]
    if not ws or all(w == 0 for w in ws):
        raise ValueError("gcd undefined for zero vector")
    coeffs = [0] * len(ws)
    g = 0
    for i, w in enumerate(ws):
        if w == 0:
            continue
        if g == 0:
            g = abs(w)
            coeffs[i] = 1 if w > 0 else -1
            continue
        g, x, y = ext_gcd(w, g)
        for j in range(i):
            coeffs[j] *= y
        coeffs[i] = x
    return BezoutResult(g, tuple(coeffs))
