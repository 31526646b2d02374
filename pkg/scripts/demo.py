#!/usr/bin/env python3
"""End-to-end tour: weight decomposition, slice synthesis, kernels and the
local-finiteness probe on a couple of small diagonal derivations."""

from ssderiv import (
    DiagonalDerivation,
    GeneralDerivation,
    LocallyFinite,
    NotLocallyFinite,
    RingCtx,
    build_slice,
    conjugate,
    kernel_generators_localized,
    kernel_in_B,
    local_finiteness_probe,
    parse,
    scalar_multiple_semisimple,
    slice_coordinates,
)


def section(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    ctx = RingCtx(("x", "y"))
    x = parse("x", ctx)
    y = parse("y", ctx)

    section("weights (1, -1): the hyperbolic derivation x*dx - y*dy")
    d = DiagonalDerivation(ctx, (1, -1))
    p = parse("x*y + x - 2*y^-1", ctx)
    for w, c in d.weight_decompose(p).components.items():
        print(f"  weight {w}: {c}")
    print(f"  kernel generators in Q[x, y]: {[str(g) for g in kernel_in_B(d)]}")
    print(f"  a = x*y multiplies D into a semisimple derivation: "
          f"{scalar_multiple_semisimple(x * y, d)}")

    section("the multiple (xy)*D is not even locally finite")
    delta = GeneralDerivation(ctx, (parse("x^2*y", ctx), parse("-x*y^2", ctx)))
    verdict = local_finiteness_probe(delta, bound=6)
    assert isinstance(verdict, NotLocallyFinite)
    print("  iterate chain:", " -> ".join(str(q) for q in verdict.chain))
    print(f"  exponent shift per step: {verdict.shift}")

    section("weights (2, -3): slice, localized kernel, slice coordinates")
    d = DiagonalDerivation(ctx, (2, -3))
    data = build_slice(d)
    print(f"  Bezout exponents m = {data.m}, slice s = {data.s}, denominator f = {data.f}")
    print(f"  D(s) = {d.apply(data.s)}")
    gens = kernel_generators_localized(d, data.s)
    for name, u in zip(gens.uctx.names, gens.u):
        print(f"  {name} = {u}   (D({name}) = {d.apply(u)})")
    q = parse("x^3*y^2 + 5*x - y", ctx)
    coords = slice_coordinates(d, data.s, q)
    print(f"  {q} in slice coordinates:")
    for w, c in coords.components.items():
        print(f"    s^{w} * ({c})")

    section("conjugation by the shear y -> y + x^2 keeps weights (1, 3)")
    d = DiagonalDerivation(ctx, (1, 3))
    transported = conjugate(d, [x, y + x**2], [x, y - x**2])
    for name, image in zip(ctx.names, transported.images):
        print(f"  D'({name}) = {image}")
    verdict = local_finiteness_probe(transported, bound=6)
    assert isinstance(verdict, LocallyFinite)
    print(f"  locally finite with span dimensions {verdict.span_dims}")


if __name__ == "__main__":
    main()
