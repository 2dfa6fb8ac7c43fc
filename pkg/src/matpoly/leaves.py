"""Classification of symplectic leaves of monic matrix polynomials.

A leaf is determined by the invariant polynomials d_1, ..., d_m of any point
on it (decreasing divisibility: d_{i+1} | d_i).  From these the module
computes the leaf type alpha_i = deg(d_i) - n, the dimension
sum_i (m+1-2i) deg(d_i), the closure partial order, the SL reduction
q_i = d_i / d_m, and the minor-ratio coordinate charts e_i = b_i / a_i with
their pole/residue data on the open chart domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrices import DimensionError, MatPoly
from .poly import COMPLEX, RATIONAL, Poly, gcd, series_inverse, series_root


@dataclass(frozen=True)
class LeafDescriptor:
    """Complete leaf invariant: matrices lie on the same leaf iff these match."""

    m: int
    n: int
    invariants: tuple[Poly, ...]
    type_alpha: tuple[int, ...]
    dimension: int
    determinant: Poly


@dataclass(frozen=True)
class SLLeafDescriptor:
    """Leaf data after reduction to determinant-one loops: q_i = d_i / d_m."""

    q: tuple[Poly, ...]


@dataclass(frozen=True)
class ChartRow:
    """Minor-ratio data for one index i: e_i = b_i / a_i.

    `a` is the trailing principal minor (monic, degree n(m-i)), `b` the
    neighbouring minor with column i swapped in; `e_num`/`e_den` hold the
    gcd-reduced ratio on the exact path (and copies of b, a on the numeric
    path).  `poles`/`residues` list the simple poles found numerically, and
    `expected_poles` is the count the leaf invariants predict on the open
    chart domain.
    """

    i: int
    a: Poly
    b: Poly
    e_num: Poly
    e_den: Poly
    expected_poles: int | None
    poles: tuple[complex, ...]
    residues: tuple[complex, ...]
    simple: bool
    well_separated: bool


@dataclass(frozen=True)
class MonopoleChart:
    rows: tuple[ChartRow, ...]
    in_chart_domain: bool


def zinv_to_z(P: MatPoly, n: int) -> MatPoly:
    """Convert a monic-in-z^{-1} matrix (constant term I, degree <= n) to the
    monic degree-n matrix polynomial z^n P(z); exact coefficient reversal."""
    if P.max_degree > n:
        raise ValueError(f"degree {P.max_degree} exceeds truncation order {n}")
    return MatPoly(
        [[e.reversed(n) for e in row] for row in P.entries], P.field
    )


def z_to_zinv(P: MatPoly, n: int) -> MatPoly:
    """Inverse of `zinv_to_z`; round-trips exactly."""
    return zinv_to_z(P, n)


def classify(P: MatPoly, n: int | None = None) -> LeafDescriptor:
    """Leaf descriptor of a monic degree-n matrix polynomial in z."""
    if P.field != RATIONAL:
        raise ValueError("classification requires exact rational coefficients")
    if n is None:
        d = P.max_degree
        n = 0 if d == float("-inf") else int(d)
    if not P.is_monic_of_degree(n):
        raise ValueError(f"input is not monic of degree {n}")
    from .smith import smith_normal_form

    invariants = smith_normal_form(P).invariants
    return descriptor_from_invariants(P.m, n, invariants, determinant=P.det())


def descriptor_from_invariants(
    m: int, n: int, invariants: tuple[Poly, ...], determinant: Poly | None = None
) -> LeafDescriptor:
    degrees = [int(d.degree) for d in invariants]
    if sum(degrees) != m * n:
        raise ValueError(
            f"invariant degrees {degrees} do not sum to m*n = {m * n}"
        )
    alpha = tuple(r - n for r in degrees)
    dim = leaf_dimension(alpha, n)
    if determinant is None:
        determinant = Poly.one()
        for d in invariants:
            determinant = determinant * d
    return LeafDescriptor(
        m=m,
        n=n,
        invariants=tuple(invariants),
        type_alpha=alpha,
        dimension=dim,
        determinant=determinant,
    )


def leaf_dimension(alpha: tuple[int, ...], n: int) -> int:
    """Leaf dimension 2<alpha, rho> = sum_i (m+1-2i)(alpha_i + n).

    Requires a dominant (non-increasing) type vector summing to zero.
    """
    m = len(alpha)
    if sum(alpha) != 0:
        raise ValueError(f"type vector {alpha} does not sum to zero")
    if any(alpha[i] < alpha[i + 1] for i in range(m - 1)):
        raise ValueError(f"type vector {alpha} is not dominant")
    return sum((m + 1 - 2 * (i + 1)) * (alpha[i] + n) for i in range(m))


def closure_contains(S: LeafDescriptor, T: LeafDescriptor) -> bool:
    """True iff the closure of leaf S contains leaf T.

    Criterion: equal determinants and d_1...d_k divisible by d'_1...d'_k for
    every k.
    """
    if S.m != T.m or S.n != T.n:
        raise DimensionError("closure comparison needs matching m and n")
    if S.determinant != T.determinant:
        return False
    prod_s = Poly.one()
    prod_t = Poly.one()
    for ds, dt in zip(S.invariants, T.invariants):
        prod_s = prod_s * ds
        prod_t = prod_t * dt
        if not prod_t.divides(prod_s):
            return False
    return True


def sl_reduce(S: LeafDescriptor) -> SLLeafDescriptor:
    """Quotient invariants q_i = d_i / d_m, i = 1..m-1 (exact division)."""
    d_last = S.invariants[-1]
    qs = []
    for d in S.invariants[:-1]:
        q, r = divmod(d, d_last)
        if not r.is_zero:
            raise ValueError("invariant chain violates divisibility; descriptor corrupted")
        qs.append(q)
    return SLLeafDescriptor(q=tuple(qs))


def sl_normalize(P: MatPoly, order: int | None = None) -> MatPoly:
    """Divide a monic-in-z^{-1} matrix by the monic m-th root of its
    determinant, as power series truncated at `order` (default 2n).

    The result has determinant 1 + O(z^{-(order+1)}).
    """
    n = 0 if P.max_degree == float("-inf") else int(P.max_degree)
    if order is None:
        order = 2 * n
    if order < n:
        raise ValueError(f"truncation order {order} below the polynomial degree {n}")
    det = P.det()
    if det.coeff(0) != 1:
        raise ValueError("input must be monic in z^{-1} (constant term I)")
    root = series_root(det, P.m, order)
    inv = series_inverse(root, order)
    return MatPoly(
        [[(e * inv).truncated(order) for e in row] for row in P.entries], P.field
    )


def drinfeld_coordinates(
    P: MatPoly,
    n: int | None = None,
    pole_separation: float = 1e-6,
    cancel_tol: float = 1e-8,
) -> MonopoleChart:
    """Minor-ratio coordinates e_i = b_i / a_i of a monic matrix polynomial.

    a_i is the minor over rows and columns i+1..m, b_i the minor over rows
    i+1..m and columns (i, i+2..m).  On the exact path the ratio is reduced
    by the polynomial gcd and the expected pole count comes from the leaf
    invariants; poles and residues are then extracted numerically from the
    reduced pair.  Numeric inputs go straight to root finding, and poles
    closer than `pole_separation` are flagged as ill-separated.
    """
    m = P.m
    if n is None:
        d = P.max_degree
        n = 0 if d == float("-inf") else int(d)
    exact = P.field == RATIONAL

    expected = [None] * (m - 1)
    if exact:
        desc = classify(P, n)
        degrees = [int(d.degree) for d in desc.invariants]
        for i in range(1, m):
            expected[i - 1] = n * (m - i) - sum(degrees[m - i : m])

    rows = []
    domain_ok = True
    for i in range(1, m):
        rows_idx = list(range(i, m))  # 0-based rows i+1..m
        a = P.submatrix(rows_idx, rows_idx).det()
        cols_idx = [i - 1] + list(range(i + 1, m))  # columns i, i+2..m
        b = P.submatrix(rows_idx, cols_idx).det()

        if exact:
            if b.is_zero:
                e_num, e_den = Poly.zero(), Poly.one()
            else:
                g = gcd(a, b)
                e_num = b // g
                e_den = a // g  # monic: a and g are both monic
            poles, residues, simple, separated = _poles_and_residues(
                e_den.to_complex(), e_num.to_complex(), pole_separation, cancel_tol,
                already_reduced=True,
            )
        else:
            e_num, e_den = b, a
            poles, residues, simple, separated = _poles_and_residues(
                a.to_complex(), b.to_complex(), pole_separation, cancel_tol,
                already_reduced=False,
            )
        k_i = expected[i - 1]
        row = ChartRow(
            i=i,
            a=a,
            b=b,
            e_num=e_num,
            e_den=e_den,
            expected_poles=k_i,
            poles=tuple(poles),
            residues=tuple(residues),
            simple=simple,
            well_separated=separated,
        )
        if not (simple and separated):
            domain_ok = False
        if k_i is not None and len(poles) != k_i:
            domain_ok = False
        rows.append(row)
    return MonopoleChart(rows=tuple(rows), in_chart_domain=domain_ok)


def _poles_and_residues(den: Poly, num: Poly, separation: float, cancel_tol: float,
                        already_reduced: bool):
    """Roots of `den` that are genuine poles of num/den, with residues.

    Returns (poles, residues, all_simple, well_separated).
    """
    if den.degree <= 0:
        return [], [], True, True
    coeffs = np.array([complex(c) for c in den.coeffs])
    roots = np.roots(coeffs[::-1])
    roots = _polish_roots(coeffs, roots)
    scale = max(1.0, float(np.max(np.abs(coeffs))))

    # Cluster roots closer than the separation threshold.
    used = [False] * len(roots)
    clusters = []
    order = sorted(range(len(roots)), key=lambda t: (roots[t].real, roots[t].imag))
    for idx in order:
        if used[idx]:
            continue
        cluster = [roots[idx]]
        used[idx] = True
        for jdx in order:
            if not used[jdx] and abs(roots[jdx] - roots[idx]) < separation:
                cluster.append(roots[jdx])
                used[jdx] = True
        clusters.append(cluster)

    dden = den.derivative()
    poles, residues = [], []
    simple = True
    separated = True
    for cluster in clusters:
        x = complex(np.mean(cluster))
        if len(cluster) > 1:
            simple = False
            separated = False
        if not already_reduced and abs(num(x)) <= cancel_tol * scale:
            continue  # common factor of numerator and denominator, not a pole
        if num.is_zero:
            continue
        dval = dden(x)
        if abs(dval) == 0.0:
            simple = False
            poles.append(x)
            residues.append(complex("nan"))
            continue
        poles.append(x)
        residues.append(num(x) / dval)
    return poles, residues, simple, separated


def _polish_roots(coeffs_ascending: np.ndarray, roots: np.ndarray, iters: int = 8) -> np.ndarray:
    deriv = np.polynomial.polynomial.polyder(coeffs_ascending)
    out = np.array(roots, dtype=complex)
    for t in range(len(out)):
        x = out[t]
        for _ in range(iters):
            fx = np.polynomial.polynomial.polyval(x, coeffs_ascending)
            dfx = np.polynomial.polynomial.polyval(x, deriv)
            if dfx == 0:
                break
            step = fx / dfx
            x -= step
            if abs(step) < 1e-15 * max(1.0, abs(x)):
                break
        out[t] = x
    return out
