#!/usr/bin/env python3
"""Decomposition into indecomposable ideals, and rational complex structures.

Run:  python3 demos/decompose_demo.py
"""

from fractions import Fraction as F

from liestruct import (
    Matrix,
    build,
    classical,
    complex_structure,
    current_algebra,
    direct_sum,
    example_algebra,
    indecompose,
    quadratic_extension,
)


def oscillator6():
    """sl2 acting on a Heisenberg algebra: perfect, with 1-dim center."""
    return build(
        6,
        {
            (0, 1): {2: F(1)},
            (0, 2): {0: F(-2)},
            (1, 2): {1: F(2)},
            (0, 4): {3: F(1)},
            (1, 3): {4: F(1)},
            (2, 3): {3: F(1)},
            (2, 4): {4: F(-1)},
            (3, 4): {5: F(1)},
        },
        names=["e", "f", "h", "p", "q", "z"],
    )


def main():
    sl2 = classical("sl", 2)
    g = direct_sum([sl2, sl2, oscillator6()])
    print(f"g = sl(2) + sl(2) + osc6   (dim {g.dim})")

    report = indecompose(g)
    dims = sorted(s.dim for s in report.ideals)
    print(f"indecomposable ideals: {len(report.ideals)} of dims {dims}")
    print(f"status: {report.status}; decomposition unique: {report.is_unique()}")

    total = Matrix.zero(g.dim, g.dim)
    for p in report.idempotents:
        assert p @ p == p
        total = total + p
    assert total == Matrix.identity(g.dim)
    print("projections are exact idempotents summing to the identity")

    # The answer does not depend on how the basis is written down.
    perm = (7, 2, 10, 0, 5, 9, 1, 11, 4, 8, 3, 6)
    other = indecompose(g.permuted(perm))
    print(f"after a basis permutation: {sorted(s.dim for s in other.ideals)}")

    # A center that meets the complement of the commutator leaves room for
    # several decompositions; the report's off-diagonal blocks say so.
    heis = build(3, {(0, 1): {2: F(1)}}, names=["x", "y", "z"])
    h = direct_sum([example_algebra("two_dim"), heis])
    rep = indecompose(h)
    print(f"\nh = two_dim + heisenberg3: ideals of dims "
          f"{sorted(s.dim for s in rep.ideals)}, unique: {rep.is_unique()}")

    # Rational complex structure: a centroid element J with J^2 = -1.
    model = current_algebra(sl2, quadratic_extension(F(-1)))
    found = complex_structure(model)
    print(f"\n6-dim complex model of sl(2): J@J == -1: "
          f"{found.J @ found.J == Matrix.identity(6).scale(-1)}")
    print(f"sl(2) over the rationals alone: {complex_structure(sl2)}")


if __name__ == "__main__":
    main()
