#!/usr/bin/env python3
"""Tour of the basic invariants: flags, center, derivations, centroid.

Run:  python3 demos/structure_tour.py
"""

from fractions import Fraction as F

from liestruct import (
    Matrix,
    build,
    casimir_adjoint,
    centroid,
    classical,
    derivations,
    example_algebra,
    inner_derivations,
    split_centroid,
)


def describe(g, label):
    fl = g.flags()
    on = ", ".join(sorted(k for k, v in fl.items() if v)) or "none"
    der = derivations(g)
    inner = inner_derivations(g)
    cent = centroid(g)
    nil, semi = split_centroid(g)
    print(f"{label}  (dim {g.dim}, basis {', '.join(g.names)})")
    print(f"  flags set: {on}")
    print(f"  center dim {g.center().dim}, commutator dim {g.commutator_algebra().dim}")
    print(f"  Der dim {der.dim} (inner {inner.dim}, outer {der.dim - inner.dim})")
    print(f"  Cent dim {cent.dim} = N dim {nil.dim} + S dim {semi.dim}")
    print()


def main():
    sl2 = classical("sl", 2)
    describe(sl2, "sl(2)")
    describe(classical("so", 3), "so(3)")
    describe(classical("gl", 2), "gl(2)")
    describe(example_algebra("two_dim"), "the solvable 2-dim algebra {x1,x2}=x1")
    heis = build(3, {(0, 1): {2: F(1)}}, names=["x", "y", "z"])
    describe(heis, "Heisenberg algebra [x,y]=z")

    # Killing-dual Casimir: on a simple algebra the sum of the composed
    # adjoint maps collapses to the identity, with exact rational arithmetic.
    cas = casimir_adjoint(sl2)
    print("Casimir of sl(2) in the adjoint representation:")
    print(" ", cas)
    assert cas == Matrix.identity(3)
    print("  equals the identity matrix exactly (Fractions, no rounding).")


if __name__ == "__main__":
    main()
