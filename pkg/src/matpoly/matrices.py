"""Square matrices with polynomial entries, stored entry-wise.

A MatPoly is an m x m grid of Poly entries over a common field.  Like Poly,
the variable is anonymous: the same object serves as a polynomial in z (the
monic-in-z reading, degree-n elements with leading coefficient I) and as a
polynomial in z^{-1} (monic constant term I).  Conversion between the two
readings is coefficient reversal, see `leaves.zinv_to_z`.

Determinants over the exact field use cofactor expansion for m <= 4 and
fraction-free Bareiss elimination above; the numeric field uses cofactor
expansion for m <= 4 and evaluation/interpolation at scaled roots of unity
above (Bareiss needs exact division).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .poly import COMPLEX, RATIONAL, FieldError, Poly, coerce_scalar


class DimensionError(ValueError):
    """Matrix shapes do not match the requested operation."""


def _as_poly(entry, field: str) -> Poly:
    if isinstance(entry, Poly):
        if entry.field != field:
            raise FieldError(f"entry field {entry.field!r} does not match matrix field {field!r}")
        return entry
    return Poly.constant(entry, field)


class MatPoly:
    """Immutable square matrix of polynomials."""

    __slots__ = ("m", "entries", "field")

    def __init__(self, rows: Sequence[Sequence], field: str = RATIONAL):
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise DimensionError("MatPoly requires a nonempty square grid of entries")
        ents = tuple(tuple(_as_poly(e, field) for e in row) for row in rows)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("MatPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, m: int, field: str = RATIONAL) -> "MatPoly":
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)], field)

    @classmethod
    def zero(cls, m: int, field: str = RATIONAL) -> "MatPoly":
        return cls([[0] * m for _ in range(m)], field)

    @classmethod
    def diagonal(cls, polys: Sequence[Poly], field: str = RATIONAL) -> "MatPoly":
        m = len(polys)
        return cls(
            [[polys[i] if i == j else 0 for j in range(m)] for i in range(m)], field
        )

    @classmethod
    def from_coeff_matrices(cls, coeff_mats: Sequence, field: str = RATIONAL) -> "MatPoly":
        """Build from coefficient matrices: coeff_mats[k] multiplies the k-th power."""
        mats = [np.asarray(c, dtype=object) for c in coeff_mats]
        m = mats[0].shape[0]
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                row.append(Poly([mat[i, j] for mat in mats], field))
            rows.append(row)
        return cls(rows, field)

    # -- queries -----------------------------------------------------------

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i][j]

    @property
    def max_degree(self):
        return max(e.degree for row in self.entries for e in row)

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    def leading_coefficient_matrix(self, n: int) -> np.ndarray:
        """Coefficient matrix of the n-th power of the variable."""
        return self.coeff_matrix(n)

    def coeff_matrix(self, k: int) -> np.ndarray:
        out = np.empty((self.m, self.m), dtype=object)
        for i in range(self.m):
            for j in range(self.m):
                out[i, j] = self.entries[i][j].coeff(k)
        return out

    def to_coeff_matrices(self, order: int | None = None) -> list[np.ndarray]:
        """[C_0, ..., C_order] with C_k the coefficient matrix of the k-th power.

        The exact field yields object arrays of Fractions, the numeric field
        complex128 arrays.
        """
        if order is None:
            d = self.max_degree
            order = 0 if d == float("-inf") else int(d)
        mats = [self.coeff_matrix(k) for k in range(order + 1)]
        if self.field == COMPLEX:
            mats = [m.astype(complex) for m in mats]
        return mats

    def is_monic_of_degree(self, n: int) -> bool:
        """Leading (n-th) coefficient matrix equals the identity, all degrees <= n."""
        if self.max_degree > n:
            return False
        lead = self.coeff_matrix(n)
        for i in range(self.m):
            for j in range(self.m):
                if lead[i, j] != (1 if i == j else 0):
                    return False
        return True

    # -- arithmetic ---------------------------------------------------------

    def _check_compat(self, other: "MatPoly") -> None:
        if self.m != other.m:
            raise DimensionError(f"size mismatch: {self.m} vs {other.m}")
        if self.field != other.field:
            raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")

    def __add__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        self._check_compat(other)
        return MatPoly(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.m)]
                for i in range(self.m)
            ],
            self.field,
        )

    def __sub__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        self._check_compat(other)
        return MatPoly(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.m)]
                for i in range(self.m)
            ],
            self.field,
        )

    def __neg__(self):
        return MatPoly([[-e for e in row] for row in self.entries], self.field)

    def __matmul__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        self._check_compat(other)
        z = Poly.zero(self.field)
        rows = []
        for i in range(self.m):
            row = []
            for j in range(self.m):
                acc = z
                for k in range(self.m):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return MatPoly(rows, self.field)

    def scale(self, factor) -> "MatPoly":
        """Multiply every entry by a scalar or a Poly."""
        f = factor if isinstance(factor, Poly) else Poly.constant(factor, self.field)
        return MatPoly([[e * f for e in row] for row in self.entries], self.field)

    def transpose(self) -> "MatPoly":
        return MatPoly(
            [[self.entries[j][i] for j in range(self.m)] for i in range(self.m)], self.field
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatPoly":
        """Submatrix with the given row/column indices, order preserved."""
        if len(rows) != len(cols) or not rows:
            raise DimensionError("submatrix index lists must be nonempty and equal length")
        return MatPoly(
            [[self.entries[i][j] for j in cols] for i in rows], self.field
        )

    def eval(self, z0) -> np.ndarray:
        """Evaluate entry-wise; exact arguments give object arrays of Fractions."""
        out = np.empty((self.m, self.m), dtype=object)
        for i in range(self.m):
            for j in range(self.m):
                out[i, j] = self.entries[i][j](z0)
        if self.field == COMPLEX or isinstance(z0, (float, complex)):
            return out.astype(complex)
        return out

    def to_complex(self) -> "MatPoly":
        if self.field == COMPLEX:
            return self
        return MatPoly([[e.to_complex() for e in row] for row in self.entries], COMPLEX)

    # -- determinants --------------------------------------------------------

    def det(self) -> Poly:
        """Determinant polynomial.

        Exact field: cofactor expansion for m <= 4, Bareiss above.  Numeric
        field: cofactor for m <= 4, interpolation above.
        """
        if self.m <= 4:
            return self.det_cofactor()
        if self.field == RATIONAL:
            return self.det_bareiss()
        return self._det_interpolate()

    def det_cofactor(self) -> Poly:
        """Determinant by recursive cofactor expansion along the first row."""
        return _det_cofactor_grid([list(r) for r in self.entries], self.field)

    def det_bareiss(self) -> Poly:
        """Determinant by fraction-free Bareiss elimination (exact field only).

        Every division performed is exact in Q[z]; a nonzero remainder would
        indicate a programming error and raises.
        """
        if self.field != RATIONAL:
            raise FieldError("Bareiss elimination requires the exact rational field")
        m = self.m
        a = [[self.entries[i][j] for j in range(m)] for i in range(m)]
        sign = 1
        prev = Poly.one(self.field)
        for k in range(m - 1):
            if a[k][k].is_zero:
                pivot_row = next((r for r in range(k + 1, m) if not a[r][k].is_zero), None)
                if pivot_row is None:
                    return Poly.zero(self.field)
                a[k], a[pivot_row] = a[pivot_row], a[k]
                sign = -sign
            for i in range(k + 1, m):
                for j in range(k + 1, m):
                    num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                    q, r = divmod(num, prev)
                    if not r.is_zero:
                        raise ArithmeticError("inexact division in Bareiss elimination")
                    a[i][j] = q
            for i in range(k + 1, m):
                a[i][k] = Poly.zero(self.field)
            prev = a[k][k]
        d = a[m - 1][m - 1]
        return -d if sign < 0 else d

    def _det_interpolate(self) -> Poly:
        """Numeric determinant by evaluation at scaled roots of unity."""
        bound = sum(
            max((int(e.degree) for e in row if not e.is_zero), default=0)
            for row in self.entries
        )
        npts = bound + 1
        radius = 1.0
        omega = np.exp(2j * np.pi / npts)
        pts = radius * omega ** np.arange(npts)
        vals = np.array([np.linalg.det(self.eval(z)) for z in pts])
        # c_k = (1/N) sum_j vals_j w^{-jk} / R^k, which is fft(vals)/N in
        # numpy's sign convention.
        coeffs = np.fft.fft(vals) / npts / radius ** np.arange(npts)
        return Poly(coeffs, COMPLEX)

    def adjugate(self) -> "MatPoly":
        """Adjugate (transposed cofactor matrix): M @ adj(M) = det(M) * I."""
        m = self.m
        if m == 1:
            return MatPoly([[Poly.one(self.field)]], self.field)
        rows = []
        idx = list(range(m))
        for i in range(m):
            row = []
            for j in range(m):
                minor = self.submatrix(
                    [r for r in idx if r != j], [c for c in idx if c != i]
                ).det_cofactor()
                row.append(minor if (i + j) % 2 == 0 else -minor)
            rows.append(row)
        return MatPoly(rows, self.field)

    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return (
            self.m == other.m and self.field == other.field and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.m, self.field, self.entries))

    def __repr__(self):
        rows = ",\n  ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"MatPoly(\n  {rows}\n)"


def _det_cofactor_grid(grid: list[list[Poly]], field: str) -> Poly:
    m = len(grid)
    if m == 1:
        return grid[0][0]
    if m == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    acc = Poly.zero(field)
    for j, pivot in enumerate(grid[0]):
        if pivot.is_zero:
            continue
        minor = [[row[c] for c in range(m) if c != j] for row in grid[1:]]
        term = pivot * _det_cofactor_grid(minor, field)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc
