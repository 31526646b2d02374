"""Shared generators for the test suite: hypothesis strategies and seeded
random builders for polynomials, weight vectors and triangular automorphisms."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from ssderiv import DiagonalDerivation, LaurentPoly, RingCtx

CTX_X = RingCtx(("x",))
CTX_XY = RingCtx(("x", "y"))
CTX_XYZ = RingCtx(("x", "y", "z"))


def exponent_vectors(n: int, bound: int = 5):
    return st.tuples(*([st.integers(-bound, bound)] * n))


def polys(ctx: RingCtx, max_terms: int = 8, exp_bound: int = 5):
    return st.dictionaries(
        exponent_vectors(ctx.n, exp_bound),
        st.fractions(min_value=-9, max_value=9, max_denominator=9),
        max_size=max_terms,
    ).map(lambda terms: LaurentPoly(ctx, terms))


def nonzero_polys(ctx: RingCtx, **kwargs):
    return polys(ctx, **kwargs).filter(lambda p: not p.is_zero())


def monomials(ctx: RingCtx, exp_bound: int = 5):
    return st.tuples(
        exponent_vectors(ctx.n, exp_bound),
        st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool),
    ).map(lambda pair: LaurentPoly.monomial(ctx, pair[0], pair[1]))


def weight_vectors(n: int, bound: int = 5):
    return st.tuples(*([st.integers(-bound, bound)] * n))


def random_poly(
    rng: random.Random,
    ctx: RingCtx,
    max_terms: int = 6,
    exp_bound: int = 3,
    nonneg: bool = False,
) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        low = 0 if nonneg else -exp_bound
        exps = tuple(rng.randint(low, exp_bound) for _ in range(ctx.n))
        terms[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return LaurentPoly(ctx, terms)


def random_weights(rng: random.Random, n: int, bound: int, nonzero: bool = True):
    while True:
        weights = tuple(rng.randint(-bound, bound) for _ in range(n))
        if not nonzero or any(weights):
            return weights


def random_derivation(rng: random.Random, ctx: RingCtx, bound: int = 5, nonzero: bool = True):
    return DiagonalDerivation(ctx, random_weights(rng, ctx.n, bound, nonzero))


def random_triangular_pair(rng: random.Random, ctx: RingCtx, steps: int = 2, exp_bound: int = 2):
    """Composition of elementary maps x_i -> x_i + h(x_j for j > i), returned
    as (phi_images, psi_images); the two are exact mutual inverses."""
    n = ctx.n
    identity = [LaurentPoly.variable(ctx, i) for i in range(n)]
    phi = list(identity)
    psi = list(identity)
    for _ in range(steps):
        i = rng.randrange(n)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exps = [0] * n
            for j in range(i + 1, n):
                exps[j] = rng.randint(0, exp_bound)
            terms[tuple(exps)] = Fraction(rng.randint(-3, 3))
        h = LaurentPoly(ctx, terms)
        tau = list(identity)
        tau[i] = identity[i] + h
        tau_inv = list(identity)
        tau_inv[i] = identity[i] - h
        phi = [p.substitute(tau) for p in phi]
        psi = [t.substitute(psi) for t in tau_inv]
    return phi, psi
