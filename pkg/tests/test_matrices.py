import random
from fractions import Fraction

import numpy as np
import pytest

from matpoly.matrices import DimensionError, MatPoly
from matpoly.poly import COMPLEX, RATIONAL, Poly

from conftest import rand_poly

z = Poly.x(RATIONAL)


def rand_matpoly(rng, m, max_deg=2):
    return MatPoly([[rand_poly(rng, max_deg) for _ in range(m)] for _ in range(m)])


def test_identity_and_diagonal_det():
    n = 3
    M = MatPoly.diagonal([z ** n, z ** n])
    assert M.det() == z ** (2 * n)
    D = MatPoly.diagonal([z ** 2, z ** 2 - z])
    assert D.det() == z ** 4 - z ** 3


def test_det_matches_cofactor_oracle_random():
    rng = random.Random(7)
    for _ in range(25):
        M = rand_matpoly(rng, 3, 2)
        # Independent cofactor expansion along the last column.
        acc = Poly.zero()
        for i in range(3):
            rows = [r for r in range(3) if r != i]
            minor = M.submatrix(rows, [0, 1]).det_cofactor()
            term = M.entry(i, 2) * minor
            acc = acc + term if (i + 2) % 2 == 0 else acc - term
        assert M.det() == acc


def test_det_multiplicative():
    rng = random.Random(11)
    for m in (2, 3, 4):
        for _ in range(8):
            A = rand_matpoly(rng, m, 2)
            B = rand_matpoly(rng, m, 2)
            assert (A @ B).det() == A.det() * B.det()


def test_bareiss_agrees_with_cofactor():
    rng = random.Random(13)
    for m in (2, 3, 4):
        for _ in range(10):
            M = rand_matpoly(rng, m, 2)
            assert M.det_bareiss() == M.det_cofactor()


def test_bareiss_rank_deficient():
    rng = random.Random(17)
    M = rand_matpoly(rng, 3, 2)
    rows = [list(r) for r in M.entries]
    rows[2] = rows[0]  # duplicate row forces det 0
    M2 = MatPoly(rows)
    assert M2.det_bareiss().is_zero
    assert M2.det_cofactor().is_zero


def test_eval_is_ring_homomorphism():
    rng = random.Random(19)
    for _ in range(10):
        A = rand_matpoly(rng, 2, 2)
        B = rand_matpoly(rng, 2, 2)
        z0 = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        lhs = (A @ B).eval(z0)
        rhs = A.eval(z0) @ B.eval(z0)
        assert np.array_equal(lhs, rhs)
        assert np.array_equal((A + B).eval(z0), A.eval(z0) + B.eval(z0))


def test_eval_diagonal():
    M = MatPoly.diagonal([z, z])
    out = M.eval(Fraction(2))
    assert out[0, 0] == 2 and out[1, 1] == 2 and out[0, 1] == 0


def test_dimension_mismatch():
    A = MatPoly.identity(2)
    B = MatPoly.identity(3)
    with pytest.raises(DimensionError):
        A @ B
    with pytest.raises(DimensionError):
        A + B


def test_adjugate_identity():
    rng = random.Random(23)
    for m in (2, 3):
        M = rand_matpoly(rng, m, 2)
        adj = M.adjugate()
        prod = M @ adj
        d = M.det()
        expected = MatPoly.diagonal([d] * m)
        assert prod == expected


def test_coeff_matrices_round_trip():
    rng = random.Random(29)
    M = rand_matpoly(rng, 3, 3)
    mats = M.to_coeff_matrices()
    back = MatPoly.from_coeff_matrices(mats)
    assert back == M


def test_monic_detection():
    P = MatPoly([[z ** 2 + z, Poly.one()], [Poly.zero(), z ** 2 - Poly.one()]])
    assert P.is_monic_of_degree(2)
    assert not P.is_monic_of_degree(1)
    Q = MatPoly([[2 * z, Poly.zero()], [Poly.zero(), z]])
    assert not Q.is_monic_of_degree(1)


def test_numeric_interpolated_det():
    rng = random.Random(31)
    m = 5
    rows = [
        [Poly([complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)], COMPLEX) for _ in range(m)]
        for _ in range(m)
    ]
    M = MatPoly(rows, COMPLEX)
    det_interp = M._det_interpolate()
    det_cof = M.det_cofactor()
    bound = max(det_interp.degree, det_cof.degree)
    for k in range(int(bound) + 1):
        assert abs(det_interp.coeff(k) - det_cof.coeff(k)) < 1e-8
