"""Smith Normal Form over Q[z] with unimodular transforms.

`smith_normal_form` factors an exact matrix polynomial as M = U @ D @ V where
U, V are unimodular (determinant a nonzero constant) and D is diagonal with
monic invariant polynomials ordered so that d_{i+1} divides d_i.  Zero
invariants, when present (rank-deficient input), come first: everything
divides zero.

The elimination is the Euclidean algorithm on entry degrees: pick the entry
of smallest degree (degree is the Euclidean norm of Q[z]; ties break
row-major), move it to the pivot corner, reduce its row and column by
division with remainder, and once the pivot is alone enforce that it divides
the whole trailing block before recursing.  Pivoting runs top-left to
bottom-right, which produces an ascending divisibility chain; a final
reversal permutation (absorbed into U and V) restores the decreasing
convention.  Monic normalization of the pivots is absorbed into U.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import MatPoly
from .poly import RATIONAL, FieldError, Poly


@dataclass(frozen=True)
class SmithForm:
    """Factorization M = U @ D @ V with invariants d_1, ..., d_m (d_{i+1} | d_i)."""

    u: MatPoly
    d: MatPoly
    v: MatPoly
    invariants: tuple[Poly, ...]

    def reconstruct(self) -> MatPoly:
        return self.u @ self.d @ self.v


def smith_normal_form(M: MatPoly) -> SmithForm:
    """Compute the Smith Normal Form of an exact matrix polynomial."""
    if M.field != RATIONAL:
        raise FieldError("smith_normal_form requires exact rational coefficients")
    m = M.m
    one = Poly.one(RATIONAL)
    zero = Poly.zero(RATIONAL)

    S = [[M.entry(i, j) for j in range(m)] for i in range(m)]
    U = [[one if i == j else zero for j in range(m)] for i in range(m)]
    V = [[one if i == j else zero for j in range(m)] for i in range(m)]

    # Invariant maintained by every step: M == U @ S @ V.
    def swap_rows(i: int, j: int) -> None:
        S[i], S[j] = S[j], S[i]
        for r in range(m):
            U[r][i], U[r][j] = U[r][j], U[r][i]

    def swap_cols(i: int, j: int) -> None:
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        V[i], V[j] = V[j], V[i]

    def row_addmul(i: int, j: int, q: Poly) -> None:
        # S_row_i += q * S_row_j; U absorbs the inverse on the right.
        for c in range(m):
            if not S[j][c].is_zero:
                S[i][c] = S[i][c] + q * S[j][c]
        for r in range(m):
            if not U[r][i].is_zero:
                U[r][j] = U[r][j] - q * U[r][i]

    def col_addmul(i: int, j: int, q: Poly) -> None:
        # S_col_i += q * S_col_j; V absorbs the inverse on the left.
        for r in range(m):
            if not S[r][j].is_zero:
                S[r][i] = S[r][i] + q * S[r][j]
        for c in range(m):
            if not V[i][c].is_zero:
                V[j][c] = V[j][c] - q * V[i][c]

    def scale_row(i: int, a: Fraction) -> None:
        for c in range(m):
            S[i][c] = S[i][c] * a
        inv = 1 / a
        for r in range(m):
            U[r][i] = U[r][i] * inv

    def min_entry(k: int):
        best = None
        for i in range(k, m):
            for j in range(k, m):
                if S[i][j].is_zero:
                    continue
                if best is None or S[i][j].degree < S[best[0]][best[1]].degree:
                    best = (i, j)
        return best

    k = 0
    while k < m:
        while True:
            pos = min_entry(k)
            if pos is None:
                k = m  # trailing block is zero; remaining diagonal entries stay 0
                break
            if pos != (k, k):
                if pos[0] != k:
                    swap_rows(k, pos[0])
                if pos[1] != k:
                    swap_cols(k, pos[1])
            pivot = S[k][k]
            # Reduce the pivot column, then the pivot row, by Euclidean division.
            reduced = True
            for i in range(k + 1, m):
                if S[i][k].is_zero:
                    continue
                q, _ = divmod(S[i][k], pivot)
                if not q.is_zero:
                    row_addmul(i, k, -q)
                if not S[i][k].is_zero:
                    reduced = False  # remainder of smaller degree appeared
            if not reduced:
                continue
            for j in range(k + 1, m):
                if S[k][j].is_zero:
                    continue
                q, _ = divmod(S[k][j], pivot)
                if not q.is_zero:
                    col_addmul(j, k, -q)
                if not S[k][j].is_zero:
                    reduced = False
            if not reduced:
                continue
            # Pivot is alone in its row and column; enforce divisibility of the
            # trailing block: fold an offending row into the pivot row and redo.
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, m):
                    if not (S[i][j] % pivot).is_zero:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                row_addmul(k, offender, Poly.one(RATIONAL))
                continue
            if not pivot.is_monic:
                scale_row(k, 1 / pivot.leading)
            k += 1
            break

    # Reverse to the decreasing-divisibility convention: M = (U J)(J S J)(J V).
    rev = list(reversed(range(m)))
    D = MatPoly([[S[rev[i]][rev[j]] for j in range(m)] for i in range(m)], RATIONAL)
    Ur = MatPoly([[U[i][rev[j]] for j in range(m)] for i in range(m)], RATIONAL)
    Vr = MatPoly([[V[rev[i]][j] for j in range(m)] for i in range(m)], RATIONAL)
    invariants = tuple(D.entry(i, i) for i in range(m))
    return SmithForm(u=Ur, d=D, v=Vr, invariants=invariants)


def invariant_polynomials(M: MatPoly) -> tuple[Poly, ...]:
    """The monic invariant polynomials d_1, ..., d_m of M (d_{i+1} | d_i)."""
    return smith_normal_form(M).invariants


def minor_gcd_oracle(M: MatPoly, r: int) -> Poly:
    """Monic gcd of all r x r minors of M; zero if every minor vanishes.

    Independent verification route: the product d_{m-r+1} ... d_m of the last
    r invariant polynomials must equal this gcd whenever it is nonzero.
    """
    from itertools import combinations

    if M.field != RATIONAL:
        raise FieldError("minor_gcd_oracle requires exact rational coefficients")
    if not 1 <= r <= M.m:
        raise ValueError(f"minor size {r} out of range 1..{M.m}")
    acc: Poly | None = None
    idx = range(M.m)
    for rows in combinations(idx, r):
        for cols in combinations(idx, r):
            minor = M.submatrix(rows, cols).det()
            if minor.is_zero:
                continue
            acc = minor.monic() if acc is None else _gcd_monic(acc, minor)
            if acc.degree == 0:
                return Poly.one(RATIONAL)
    return acc if acc is not None else Poly.zero(RATIONAL)


def _gcd_monic(a: Poly, b: Poly) -> Poly:
    from .poly import gcd

    return gcd(a, b)


def divisibility_chain_ok(invariants: tuple[Poly, ...]) -> bool:
    """Check d_{i+1} | d_i for all i, treating zero as divisible by everything."""
    for a, b in zip(invariants, invariants[1:]):
        if not b.divides(a):
            return False
    return True
