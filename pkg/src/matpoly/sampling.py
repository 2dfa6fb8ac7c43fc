"""Seeded random generators for exact and numeric test data.

Everything takes an explicit ``random.Random`` instance so that the CLI
verification suites and the test suite are reproducible from a single seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .matrices import MatPoly
from .poly import COMPLEX, RATIONAL, Poly


def rand_fraction(rng: random.Random, num: int = 3, den: int = 2) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_poly(rng: random.Random, max_deg: int = 3, num: int = 3, den: int = 2) -> Poly:
    deg = rng.randint(0, max_deg)
    return Poly([rand_fraction(rng, num, den) for _ in range(deg + 1)], RATIONAL)


def rand_matpoly(
    rng: random.Random,
    m: int,
    max_deg: int = 3,
    rank_deficient_rate: float = 0.15,
) -> MatPoly:
    """Random exact matrix polynomial; occasionally rank-deficient on purpose."""
    rows = [[rand_poly(rng, max_deg) for _ in range(m)] for _ in range(m)]
    if m > 1 and rng.random() < rank_deficient_rate:
        src = rng.randrange(m)
        dst = (src + 1 + rng.randrange(m - 1)) % m
        mode = rng.random()
        if mode < 0.4:
            rows[dst] = list(rows[src])  # duplicated row
        elif mode < 0.7:
            rows[dst] = [Poly.zero() for _ in range(m)]  # zero row
        else:
            q = rand_poly(rng, 1)
            rows[dst] = [q * e for e in rows[src]]  # polynomial multiple of a row
    return MatPoly(rows)


def rand_unimodular(rng: random.Random, m: int, factors: int = 4) -> MatPoly:
    """Random element of GL_m(Q[z]) as a product of elementary matrices."""
    acc = MatPoly.identity(m)
    for _ in range(factors):
        kind = rng.random()
        if kind < 0.5 and m > 1:
            i, j = rng.sample(range(m), 2)
            rows = [
                [
                    (rand_poly(rng, 2) if (r, c) == (i, j) else (Poly.one() if r == c else Poly.zero()))
                    for c in range(m)
                ]
                for r in range(m)
            ]
            acc = acc @ MatPoly(rows)
        elif kind < 0.75 and m > 1:
            perm = list(range(m))
            rng.shuffle(perm)
            rows = [[Poly.one() if c == perm[r] else Poly.zero() for c in range(m)] for r in range(m)]
            acc = acc @ MatPoly(rows)
        else:
            diag = []
            for _ in range(m):
                c = Fraction(0)
                while c == 0:
                    c = rand_fraction(rng)
                diag.append(Poly.constant(c))
            acc = acc @ MatPoly.diagonal(diag)
    return acc


def rand_monic_z(rng: random.Random, m: int, n: int, num: int = 3, den: int = 2) -> MatPoly:
    """Random monic degree-n matrix polynomial in z, exact coefficients."""
    coeffs = []
    for _ in range(n):
        coeffs.append(
            np.array(
                [[rand_fraction(rng, num, den) for _ in range(m)] for _ in range(m)],
                dtype=object,
            )
        )
    ident = np.array(
        [[Fraction(1) if i == j else Fraction(0) for j in range(m)] for i in range(m)],
        dtype=object,
    )
    # P(z) = z^n I + sum_k P_k z^{n-k}: ascending coefficient list.
    mats = list(reversed(coeffs)) + [ident]
    return MatPoly.from_coeff_matrices(mats)


def rand_monic_zinv(rng: random.Random, m: int, n: int, num: int = 3, den: int = 2) -> MatPoly:
    """Random element of M_n: identity constant term, degree <= n in z^{-1}."""
    ident = np.array(
        [[Fraction(1) if i == j else Fraction(0) for j in range(m)] for i in range(m)],
        dtype=object,
    )
    mats = [ident] + [
        np.array(
            [[rand_fraction(rng, num, den) for _ in range(m)] for _ in range(m)],
            dtype=object,
        )
        for _ in range(n)
    ]
    return MatPoly.from_coeff_matrices(mats)


def rand_complex(rng: random.Random, scale: float = 1.0) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def rand_matrix_complex(rng: random.Random, m: int, scale: float = 1.0) -> np.ndarray:
    return np.array([[rand_complex(rng, scale) for _ in range(m)] for _ in range(m)])


def rand_monic_z_numeric(rng: random.Random, m: int, n: int, scale: float = 1.0) -> MatPoly:
    """Random monic degree-n matrix polynomial in z with complex entries."""
    mats = [rand_matrix_complex(rng, m, scale) for _ in range(n)] + [np.eye(m, dtype=complex)]
    return MatPoly.from_coeff_matrices(mats, field=COMPLEX)


def rand_plus_matrices(rng: random.Random, m: int, degree: int, num: int = 2, den: int = 2):
    """Coefficients [A_0, ..., A_{-degree}] of a polynomial in z of that degree."""
    return [
        np.array(
            [[rand_fraction(rng, num, den) for _ in range(m)] for _ in range(m)],
            dtype=object,
        )
        for _ in range(degree + 1)
    ]
