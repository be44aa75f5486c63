#!/usr/bin/env python3
"""Section algebras: currents over finite coefficient algebras.

k (x) A models sections of a trivial Lie-algebra bundle with fiber k over a
finite base (A = Q^n, functions on n points) or an infinitesimal one
(A = truncated polynomials, jets at a point). The structural checks compare
each invariant of the big algebra against the prediction computed from the
fiber and the coefficients alone — exactly, over the rationals.

Run:  python3 demos/sections_demo.py
"""

import json

from liestruct import (
    centroid_of_sections_check,
    classical,
    current_algebra,
    current_der_decomposition,
    derivations,
    indecomposability_of_sections_check,
    jet_algebra,
    jet_reparametrization_automorphism,
    point_functions,
    s_part_of_sections_check,
    section_center_check,
    section_commutator_check,
    truncated_poly,
    x_derivations,
)
from liestruct.linalg import unit_vector


def main():
    sl2 = classical("sl", 2)

    print("== checks over a 3-point base and second-order jets ==")
    for a, label in ((point_functions(3), "Q^3"), (truncated_poly(1, 3), "Q[t]/(t^3)")):
        print(f"  A = {label}:")
        for check in (
            section_center_check,
            section_commutator_check,
            centroid_of_sections_check,
            indecomposability_of_sections_check,
            s_part_of_sections_check,
        ):
            rep = check(sl2, a)
            body = {k: v for k, v in rep.items() if k not in ("check", "ok")}
            print(f"    {rep['check']:<12} ok={rep['ok']}  {json.dumps(body)}")

    print("\n== derivations of jet currents: tensor part + connection part ==")
    for order in (1, 2, 3):
        a = truncated_poly(1, order)
        g = current_algebra(sl2, a)
        rep = current_der_decomposition(sl2, a)
        print(f"  sl2 (x) Q[t]/(t^{order}): dim Der = {derivations(g).dim}"
              f" = {rep['tensor_part_dim']} (tensor) +"
              f" {rep['connection_part_dim']} (connection)")

    print("\n== derivations at a point: dim = dim Der(k) + m * dim Cent(k) ==")
    for m in range(4):
        _, dim = x_derivations(sl2, m)
        print(f"  m = {m}: dim = {dim}")

    print("\n== reparametrizing the jet variable: t -> t + t^2 ==")
    jet = jet_algebra(1, 3)
    t2 = unit_vector(jet.A.dim, 2)
    mu, rep = jet_reparametrization_automorphism(sl2, jet, t2)
    print(f"  automorphism: {rep['automorphism']},"
          f" mu - 1 nilpotent: {rep['mu_minus_identity_nilpotent']}")


if __name__ == "__main__":
    main()
