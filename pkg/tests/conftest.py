import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from matpoly.poly import COMPLEX, RATIONAL, Poly

# Small rationals keep Euclidean elimination fast while still exercising
# non-integer arithmetic.
fractions_small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def rational_polys(draw, max_degree=3, allow_zero=True):
    coeffs = draw(st.lists(fractions_small, min_size=0, max_size=max_degree + 1))
    p = Poly(coeffs, RATIONAL)
    if not allow_zero and p.is_zero:
        shift = draw(st.integers(min_value=0, max_value=max_degree))
        p = Poly([0] * shift + [1], RATIONAL)
    return p


@pytest.fixture
def rng():
    return random.Random(20240)


def rand_fraction(rng, num=3, den=2):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_poly(rng, max_deg=3, num=3, den=2):
    deg = rng.randint(0, max_deg)
    return Poly([rand_fraction(rng, num, den) for _ in range(deg + 1)], RATIONAL)
