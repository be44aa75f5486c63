"""Finite models of section algebras and their structure theorems.

The algebra of sections of a Lie-algebra bundle is modeled at desk scale by
current algebras k (x) A: functions on finitely many points (A = Q^s) for
disconnected bases, truncated polynomial rings for infinitesimal
neighborhoods of a point. Every check in this module computes both sides of
a structural identity (center, commutator, derivations, centroid,
indecomposability, semisimple part) independently and compares them as
canonical subspaces — exact equality, no tolerances.

The jet machinery at the bottom (partial-derivative operators, generalized
Leibniz expansion, reparametrization automorphisms) verifies the
differential-operator identities that the infinite-dimensional theory rests
on, inside honest finite quotients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from .construct import (
    CommutativeAlgebra,
    commutative_derivations,
    current_algebra,
    point_functions,
    tensor_vector,
    truncated_poly,
)
from .decompose import primitive_idempotents
from .endo import EndoSpace, centroid, derivations, j_space, split_centroid
from .errors import LiestructError, PreconditionError, TruncationError
from .lie import LieAlgebra
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    kernel_of_rows,
    kron,
    unit_vector,
    vector,
    zero_vector,
)
from .poly import jordan_chevalley

__all__ = [
    "JetAlgebra",
    "XDerivation",
    "jet_algebra",
    "section_center_check",
    "section_commutator_check",
    "x_derivations",
    "symbol_check",
    "current_der_decomposition",
    "centroid_of_sections_check",
    "indecomposability_of_sections_check",
    "s_part_of_sections_check",
    "multinomial_sum",
    "leibniz_expand",
    "jet_reparametrization_automorphism",
]


# ---------------------------------------------------------------------------
# Jet algebras: truncated polynomials with partial-derivative operators
# ---------------------------------------------------------------------------

class JetAlgebra:
    """A truncated polynomial algebra with its partial derivatives.

    ``eval_vector`` is the "value at the marked point" functional (the
    coefficient of the constant monomial). The partials satisfy the Leibniz
    rule on basis pairs whose degrees sum below the truncation order; at the
    boundary the rule genuinely fails in the quotient (the product truncates
    to zero while the derivative of the would-be product does not), so only
    the sub-boundary instances are asserted.
    """

    __slots__ = ("A", "m_vars", "order", "eval_vector", "partials")

    def __init__(self, a: CommutativeAlgebra, m_vars: int, order: int,
                 eval_vector: Vector, partials: tuple):
        self.A = a
        self.m_vars = m_vars
        self.order = order
        self.eval_vector = eval_vector
        self.partials = partials
        self._validate()

    def _validate(self):
        a = self.A
        monos = a.monomials
        if monos is None:
            raise ValueError("jet algebra needs a monomial basis")
        if _pair(self.eval_vector, a.unit) != 1:
            raise ValueError("evaluation functional must send the unit to 1")
        for i, d in enumerate(self.partials):
            for p in range(a.dim):
                for q in range(a.dim):
                    if sum(monos[p]) + sum(monos[q]) >= self.order:
                        continue
                    lhs = d.apply(a.table[p][q])
                    rhs = tuple(
                        x + y
                        for x, y in zip(
                            a.product(d.apply(unit_vector(a.dim, p)),
                                      unit_vector(a.dim, q)),
                            a.product(unit_vector(a.dim, p),
                                      d.apply(unit_vector(a.dim, q))),
                        )
                    )
                    if lhs != rhs:
                        raise ValueError(
                            "partial %d fails the Leibniz rule below the "
                            "truncation boundary on basis pair (%d, %d)" % (i, p, q)
                        )
            for p, mono in enumerate(monos):
                if sum(mono) >= 2:
                    if _pair(self.eval_vector, d.apply(unit_vector(a.dim, p))) != 0:
                        raise ValueError(
                            "evaluation of a partial of a degree->=2 monomial "
                            "must vanish"
                        )

    def eval(self, coeff: Sequence[Fraction]) -> Fraction:
        return _pair(self.eval_vector, coeff)

    def monomial_degree(self, index: int) -> int:
        return sum(self.A.monomials[index])

    def degree(self, coeff: Sequence[Fraction]) -> int:
        """Max total degree of a coefficient vector; -1 for zero."""
        deg = -1
        for p, c in enumerate(coeff):
            if c:
                deg = max(deg, self.monomial_degree(p))
        return deg


def _pair(functional: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(functional, v)), Fraction(0))


def jet_algebra(m: int, order: int) -> JetAlgebra:
    """Jets of order < ``order`` in m variables, with partials and eval."""
    a = truncated_poly(m, order)
    monos = a.monomials
    index = {alpha: i for i, alpha in enumerate(monos)}
    n = a.dim
    partials = []
    for i in range(m):
        cols = []
        for alpha in monos:
            col = [Fraction(0)] * n
            if alpha[i] > 0:
                lowered = tuple(
                    x - 1 if t == i else x for t, x in enumerate(alpha)
                )
                col[index[lowered]] = Fraction(alpha[i])
            cols.append(col)
        partials.append(Matrix.from_columns(cols))
    eval_vector = unit_vector(n, 0)  # coefficient of the constant monomial
    return JetAlgebra(a, m, order, eval_vector, tuple(partials))


# ---------------------------------------------------------------------------
# Section-algebra structure checks
# ---------------------------------------------------------------------------

def _tensor_subspace(k: LieAlgebra, a: CommutativeAlgebra, sub: Subspace) -> Subspace:
    """sub (x) A inside the tensor coordinate space of k (x) A."""
    n = k.dim * a.dim
    vecs = [
        tensor_vector(k, a, row, unit_vector(a.dim, p))
        for row in sub.rows
        for p in range(a.dim)
    ]
    return Subspace.span(vecs, n)


def section_center_check(k: LieAlgebra, a: CommutativeAlgebra) -> dict:
    """z(k (x) A) versus z(k) (x) A, computed independently."""
    g = current_algebra(k, a)
    lhs = g.center()
    rhs = _tensor_subspace(k, a, k.center())
    return {
        "check": "center",
        "lhs_dim": lhs.dim,
        "rhs_dim": rhs.dim,
        "ok": lhs == rhs,
    }


def section_commutator_check(k: LieAlgebra, a: CommutativeAlgebra) -> dict:
    """[k (x) A, k (x) A] versus [k, k] (x) A."""
    g = current_algebra(k, a)
    lhs = g.commutator_algebra()
    rhs = _tensor_subspace(k, a, k.commutator_algebra())
    return {
        "check": "commutator",
        "lhs_dim": lhs.dim,
        "rhs_dim": rhs.dim,
        "ok": lhs == rhs,
    }


def _require_perfect_or_centerfree(k: LieAlgebra):
    flags = k.flags()
    if not (flags["perfect"] or flags["centerfree"]):
        raise PreconditionError(
            "algebra is neither perfect nor centerfree "
            "(perfect=%s, centerfree=%s); the section theorems assume one of "
            "the two" % (flags["perfect"], flags["centerfree"])
        )


@dataclass(frozen=True)
class XDerivation:
    """A derivation-at-a-point: constant part D and first-order parts S^u."""

    D: Matrix
    S: tuple


def _point_derivation_blocks(k: LieAlgebra) -> tuple[Subspace, Subspace]:
    """Solve the point-derivation system on the first-jet current algebra.

    Unknown: a linear map delta from k (x) A to k, A the order-2 truncation
    in m variables; constraint delta[X, Y] = [delta X, ev Y] + [ev X, delta Y]
    on all basis pairs. The system splits into one block per coefficient
    monomial: the constant block is the Leibniz system on D, each degree-one
    block is the one-sided centroid system on S^u, and pairs with two
    degree-one legs produce identically zero rows (their bracket and both
    evaluations vanish). The blocks are assembled from the pair constraints
    here and solved separately; callers cross-check them against the
    independently assembled Der(k) and Cent(k) kernels.
    """
    n = k.dim
    c = k.table

    def d_rows():
        # pairs (x_i (x) 1, x_j (x) 1), i < j: D[x_i,x_j] = [Dx_i,x_j] + [x_i,Dx_j]
        for i in range(n):
            for j in range(i + 1, n):
                cij = c[i][j]
                for out in range(n):
                    row = [Fraction(0)] * (n * n)
                    for l in range(n):
                        if cij[l]:
                            row[out * n + l] += cij[l]
                    for t in range(n):
                        if c[t][j][out]:
                            row[t * n + i] -= c[t][j][out]
                        if c[i][t][out]:
                            row[t * n + j] -= c[i][t][out]
                    if any(row):
                        yield row

    def s_rows():
        # pairs (x_i (x) 1, x_j (x) x_u), all i, j: S[x_i,x_j] = [x_i, S x_j]
        # (the same system for every u, so it is solved once)
        for i in range(n):
            for j in range(n):
                cij = c[i][j]
                for out in range(n):
                    row = [Fraction(0)] * (n * n)
                    for l in range(n):
                        if cij[l]:
                            row[out * n + l] += cij[l]
                    for t in range(n):
                        if c[i][t][out]:
                            row[t * n + j] -= c[i][t][out]
                    if any(row):
                        yield row

    d_space = kernel_of_rows(d_rows(), n * n)
    s_space = kernel_of_rows(s_rows(), n * n)
    return d_space, s_space


def x_derivations(k: LieAlgebra, m: int) -> tuple[list[XDerivation], int]:
    """Derivations of the section algebra into the fiber at a marked point.

    Models the section algebra by k (x) Q[x_1..x_m]/(deg >= 2) and solves
    delta[X,Y] = [delta X, ev Y] + [ev X, delta Y]. Returns a basis of
    (D, S^1..S^m) blocks and the solution dimension, which always equals
    dim Der(k) + m * dim Cent(k).
    """
    _require_perfect_or_centerfree(k)
    if m < 0:
        raise ValueError("number of jet directions must be >= 0")
    n = k.dim
    d_space, s_space = _point_derivation_blocks(k)
    # cross-checks against the independently assembled kernels
    if d_space != derivations(k).space:
        raise LiestructError(
            "point-derivation constant block differs from Der(k)"
        )
    if s_space != centroid(k).space:
        raise LiestructError(
            "point-derivation first-order block differs from Cent(k)"
        )
    # verify, honestly, that mixed first-order pairs impose nothing: both
    # evaluation legs vanish and the bracket lands in degree 2 = 0
    if m >= 1:
        a = truncated_poly(m, 2)
        for p in range(1, a.dim):
            for q in range(1, a.dim):
                if any(a.table[p][q]):
                    raise LiestructError(
                        "degree-one coefficients multiply to a nonzero value"
                    )
    zero = Matrix.zero(n, n)
    basis = []
    for row in d_space.rows:
        basis.append(
            XDerivation(D=Matrix.unflatten(row, n, n), S=(zero,) * m)
        )
    for u in range(m):
        for row in s_space.rows:
            s_list = [zero] * m
            s_list[u] = Matrix.unflatten(row, n, n)
            basis.append(XDerivation(D=zero, S=tuple(s_list)))
    dim = d_space.dim + m * s_space.dim
    return basis, dim


def symbol_check(k: LieAlgebra, m: int) -> dict:
    """Exactness of 0 -> Der(k) -> point-derivations -> Cent(k)^m -> 0.

    The symbol map sends (D, S^1..S^m) to (S^1..S^m); its kernel must be the
    naturally embedded Der(k) (maps of the form D after evaluation), and its
    image must be all of Cent(k)^m.
    """
    basis, total = x_derivations(k, m)
    n = k.dim
    der_space = derivations(k).space
    cent_space = centroid(k).space
    kernel = [xd for xd in basis if all(s.is_zero() for s in xd.S)]
    kernel_ok = all(der_space.contains(xd.D.flatten()) for xd in kernel) and len(
        kernel
    ) == der_space.dim
    image = Subspace.span(
        [
            tuple(x for s in xd.S for x in s.flatten())
            for xd in basis
        ],
        m * n * n,
    )
    image_dim = image.dim
    surjective = image_dim == m * cent_space.dim
    return {
        "check": "symbol",
        "total_dim": total,
        "kernel_dim": len(kernel),
        "image_dim": image_dim,
        "kernel_is_embedded_der": kernel_ok,
        "surjective": surjective,
        "ok": kernel_ok and surjective and total == len(kernel) + image_dim,
    }


def current_der_decomposition(k: LieAlgebra, a: CommutativeAlgebra) -> dict:
    """Der(k (x) A) = Der(k) (x) A + Cent(k) (x) Der(A), exactly.

    The full derivation algebra is computed from its own Leibniz system on
    k (x) A; the two candidate pieces are spanned by Kronecker products
    (D (x) L_a with L_a multiplication on coefficients, and S (x) d with d a
    derivation of A). The check asserts the sum is direct and exhausts the
    full space.
    """
    _require_perfect_or_centerfree(k)
    g = current_algebra(k, a)
    full = derivations(g)
    n = g.dim
    der_k = derivations(k).basis_matrices()
    cent_k = centroid(k).basis_matrices()
    der_a = commutative_derivations(a).basis_matrices()
    tensor_part = Subspace.span(
        [
            kron(d, a.mult_matrix(unit_vector(a.dim, p))).flatten()
            for d in der_k
            for p in range(a.dim)
        ],
        n * n,
    )
    connection_part = Subspace.span(
        [kron(s, d).flatten() for s in cent_k for d in der_a],
        n * n,
    )
    together = tensor_part.sum(connection_part)
    direct = together.dim == tensor_part.dim + connection_part.dim
    spans = together == full.space
    return {
        "check": "derdecomp",
        "full_dim": full.dim,
        "tensor_part_dim": tensor_part.dim,
        "connection_part_dim": connection_part.dim,
        "direct": direct,
        "ok": direct and spans,
    }


def centroid_of_sections_check(k: LieAlgebra, a: CommutativeAlgebra) -> dict:
    """Cent(k (x) A) versus Cent(k) (x) {multiplications by A}."""
    _require_perfect_or_centerfree(k)
    g = current_algebra(k, a)
    full = centroid(g)
    n = g.dim
    expected = Subspace.span(
        [
            kron(cmat, a.mult_matrix(unit_vector(a.dim, p))).flatten()
            for cmat in centroid(k).basis_matrices()
            for p in range(a.dim)
        ],
        n * n,
    )
    return {
        "check": "centroid",
        "full_dim": full.dim,
        "expected_dim": centroid(k).dim * a.dim,
        "ok": full.dim == centroid(k).dim * a.dim and expected == full.space,
    }


def _multiplication_endospace(a: CommutativeAlgebra) -> EndoSpace:
    """The regular representation of A as a commutative matrix algebra."""
    span = Subspace.span(
        [a.mult_matrix(unit_vector(a.dim, p)).flatten() for p in range(a.dim)],
        a.dim * a.dim,
    )
    return EndoSpace("centroid", a.dim, span)


def indecomposability_of_sections_check(k: LieAlgebra, a: CommutativeAlgebra) -> dict:
    """Ideal count of k (x) A against the idempotent count of A.

    For an indecomposable k with Hom(k/[k,k], z(k)) = 0, the current algebra
    decomposes exactly along the primitive idempotents of A: one ideal for a
    local A (connected base), s ideals for A = Q^s (s points).
    """
    from .decompose import indecompose

    if j_space(k).dim != 0:
        raise PreconditionError(
            "Hom(k/[k,k], z(k)) is nonzero (dim %d); the indecomposability "
            "theorem does not apply" % j_space(k).dim
        )
    if len(indecompose(k).ideals) != 1:
        raise PreconditionError("k is decomposable; the check needs an "
                                "indecomposable fiber")
    expected_idems, _ = primitive_idempotents(_multiplication_endospace(a))
    g = current_algebra(k, a)
    report = indecompose(g)
    return {
        "check": "indecomposability",
        "ideals": len(report.ideals),
        "expected": len(expected_idems),
        "status": report.status,
        "ok": len(report.ideals) == len(expected_idems),
    }


def s_part_of_sections_check(k: LieAlgebra, a: CommutativeAlgebra) -> dict:
    """S(k (x) A) versus multiplications by the semisimple part of A.

    Needs S(k) spanned by the identity and Hom(k/[k,k], z(k)) = 0; then the
    semisimple part of the centroid of the current algebra is exactly
    {1 (x) L_s : s in S(A)} — "functions times the identity".
    """
    _require_perfect_or_centerfree(k)
    if j_space(k).dim != 0:
        raise PreconditionError(
            "Hom(k/[k,k], z(k)) must vanish for the S-part description"
        )
    _, s_of_k = split_centroid(k)
    if s_of_k.dim != 1 or not s_of_k.contains(Matrix.identity(k.dim)):
        raise PreconditionError(
            "S(k) must be spanned by the identity (split-central fiber)"
        )
    g = current_algebra(k, a)
    n_g, s_g = split_centroid(g)
    # semisimple part of A through its regular representation
    s_parts = []
    for p in range(a.dim):
        s, _ = jordan_chevalley(a.mult_matrix(unit_vector(a.dim, p)))
        s_parts.append(kron(Matrix.identity(k.dim), s).flatten())
    expected = Subspace.span(s_parts, g.dim * g.dim)
    return {
        "check": "spart",
        "s_dim": s_g.dim,
        "n_dim": n_g.dim,
        "expected_s_dim": expected.dim,
        "ok": s_g.space == expected,
    }


# ---------------------------------------------------------------------------
# Multi-index combinatorics and the generalized Leibniz rule
# ---------------------------------------------------------------------------

def multi_factorial(alpha: Sequence[int]) -> int:
    out = 1
    for x in alpha:
        out *= factorial(x)
    return out


def multi_binomial(alpha: Sequence[int], gamma: Sequence[int]) -> int:
    out = 1
    for x, y in zip(alpha, gamma):
        out *= comb(x, y)
    return out


def sub_indices(alpha: Sequence[int]):
    """All multi-indices gamma <= alpha componentwise."""
    return itertools.product(*(range(x + 1) for x in alpha))


def multinomial_sum(alpha: Sequence[int]) -> Fraction:
    """The alternating multi-index sum; 1 at alpha = 0 and 0 elsewhere.

    Computes sum over gamma <= alpha of (-1)^|alpha - gamma| / (gamma! *
    (alpha - gamma)!) term by term; the binomial theorem collapses it to
    the Kronecker delta at zero.
    """
    alpha = tuple(int(x) for x in alpha)
    if any(x < 0 for x in alpha):
        raise ValueError("multi-index components must be non-negative")
    total = Fraction(0)
    for gamma in sub_indices(alpha):
        rest = tuple(x - y for x, y in zip(alpha, gamma))
        sign = -1 if sum(rest) % 2 else 1
        total += Fraction(sign, multi_factorial(gamma) * multi_factorial(rest))
    return total


def _apply_partial_power(jet: JetAlgebra, gamma: Sequence[int], coeff: Vector) -> Vector:
    out = vector(coeff)
    for i, times in enumerate(gamma):
        for _ in range(times):
            out = jet.partials[i].apply(out)
    return out


def leibniz_expand(alpha: Sequence[int], t_mat, f_vec, jet: JetAlgebra):
    """Generalized Leibniz rule for partial derivatives of T . f.

    ``t_mat`` is a matrix with entries in the jet coefficient algebra (a
    grid of coordinate vectors), ``f_vec`` a vector with such entries.
    Returns sum over gamma <= alpha of C(alpha, gamma) (d^gamma T)(d^(alpha -
    gamma) f) and asserts it equals the direct derivative d^alpha (T . f).
    Raises TruncationError when the product degree reaches the truncation
    order, where the identity genuinely breaks.
    """
    alpha = tuple(int(x) for x in alpha)
    if len(alpha) != jet.m_vars:
        raise ValueError("multi-index length does not match the jet variables")
    a = jet.A
    t_mat = [[vector(entry) for entry in row] for row in t_mat]
    f_vec = [vector(entry) for entry in f_vec]
    r = len(f_vec)
    if len(t_mat) != r or any(len(row) != r for row in t_mat):
        raise ValueError("matrix and vector sizes do not match")
    deg_t = max((jet.degree(e) for row in t_mat for e in row), default=-1)
    deg_f = max((jet.degree(e) for e in f_vec), default=-1)
    if deg_t >= 0 and deg_f >= 0 and deg_t + deg_f >= jet.order:
        raise TruncationError(
            "product of degrees %d and %d is not representable below "
            "truncation order %d" % (deg_t, deg_f, jet.order)
        )

    def mat_vec(tm, fv):
        return [
            _sum_vectors([a.product(tm[i][j], fv[j]) for j in range(r)], a.dim)
            for i in range(r)
        ]

    direct = [
        _apply_partial_power(jet, alpha, entry) for entry in mat_vec(t_mat, f_vec)
    ]
    expanded = [zero_vector(a.dim)] * r
    for gamma in sub_indices(alpha):
        rest = tuple(x - y for x, y in zip(alpha, gamma))
        coeff = multi_binomial(alpha, gamma)
        dt = [[_apply_partial_power(jet, gamma, e) for e in row] for row in t_mat]
        df = [_apply_partial_power(jet, rest, e) for e in f_vec]
        term = mat_vec(dt, df)
        expanded = [
            tuple(x + coeff * y for x, y in zip(acc, entry))
            for acc, entry in zip(expanded, term)
        ]
    if expanded != direct:
        raise LiestructError(
            "Leibniz expansion disagrees with the direct derivative "
            "(below the truncation boundary; internal error)"
        )
    return expanded


def _sum_vectors(vecs, n):
    out = [Fraction(0)] * n
    for v in vecs:
        for i, x in enumerate(v):
            if x:
                out[i] += x
    return tuple(out)


# ---------------------------------------------------------------------------
# Jet reparametrization automorphisms
# ---------------------------------------------------------------------------

def jet_reparametrization_automorphism(
    k: LieAlgebra, jet: JetAlgebra, n_elem
) -> tuple[Matrix, dict]:
    """The automorphism of k (x) A induced by t -> t + n(t).

    ``n_elem`` must lie in the maximal ideal (vanish at the marked point).
    The coefficient map mu = sum over j < order of (1/j!) N^j d^j (N =
    multiplication by n_elem, d = d/dt) is the exact Taylor substitution
    a(t) -> a(t + n(t)): a nilpotent differential operator of order at most
    order - 1 that is verified to be an algebra automorphism, then tensored
    with the identity of k and verified to preserve brackets.
    """
    if jet.m_vars != 1:
        raise PreconditionError("reparametrization model is single-variable")
    n_elem = vector(n_elem)
    a = jet.A
    if jet.eval(n_elem) != 0:
        raise PreconditionError(
            "reparametrization direction must lie in the maximal ideal "
            "(its value at the marked point is %s)" % jet.eval(n_elem)
        )
    nmat = a.mult_matrix(n_elem)
    d = jet.partials[0]
    mu = Matrix.zero(a.dim, a.dim)
    npow = Matrix.identity(a.dim)
    dpow = Matrix.identity(a.dim)
    for j in range(jet.order):
        mu = mu + (npow @ dpow).scale(Fraction(1, factorial(j)))
        npow = npow @ nmat
        dpow = dpow @ d
    # multiplicativity of mu on A
    for p in range(a.dim):
        for q in range(p, a.dim):
            lhs = mu.apply(a.table[p][q])
            rhs = a.product(
                mu.apply(unit_vector(a.dim, p)), mu.apply(unit_vector(a.dim, q))
            )
            if lhs != rhs:
                raise LiestructError(
                    "coefficient substitution is not multiplicative on basis "
                    "pair (%d, %d)" % (p, q)
                )
    if mu.apply(a.unit) != a.unit:
        raise LiestructError("coefficient substitution moves the unit")
    full = kron(Matrix.identity(k.dim), mu)
    g = current_algebra(k, a)
    auto_ok = True
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = full.apply(g.table[i][j])
            rhs = g.bracket(full.column(i), full.column(j))
            if lhs != rhs:
                auto_ok = False
                break
        if not auto_ok:
            break
    try:
        full.inverse()
        invertible = True
    except ValueError:
        invertible = False
    diff = full - Matrix.identity(g.dim)
    nilpotent = diff.power(g.dim).is_zero()
    report = {
        "check": "jetauto",
        "automorphism": auto_ok and invertible,
        "bracket_preserving": auto_ok,
        "invertible": invertible,
        "mu_minus_identity_nilpotent": nilpotent,
        "ok": auto_ok and invertible,
    }
    return full, report
