"""Dense univariate polynomial arithmetic over exact rationals or complex doubles.

A polynomial is stored as a tuple of coefficients in ascending degree order
with no trailing zeros; the zero polynomial is the empty tuple.  Its degree is
the sentinel ``-inf`` (never -1), so degree comparisons are total.

Two coefficient fields are supported and tagged explicitly:

* ``RATIONAL`` -- exact ``fractions.Fraction`` coefficients.  Division with
  remainder and gcds are only defined here; gcds over floating point are
  ill-conditioned and deliberately unsupported.
* ``COMPLEX``  -- double-precision ``complex`` coefficients, used by the
  numeric spectral pipeline.

The variable is anonymous: the same object can represent a polynomial in z or
in z^{-1}; the reading is contextual and conversions live with the callers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

RATIONAL = "rational"
COMPLEX = "complex"

# Arbitrary-precision rationals.  fractions.Fraction already maintains the
# canonical-form invariant: gcd(numerator, denominator) == 1, denominator > 0.
Rational = Fraction

NEG_INF = float("-inf")


class FieldError(TypeError):
    """An operation was asked for over a coefficient field it does not support."""


def coerce_scalar(value, field: str):
    """Coerce a number into the given coefficient field."""
    if field == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise FieldError(f"cannot coerce {value!r} into the rational field")
    if field == COMPLEX:
        if isinstance(value, (int, float, complex, Fraction)):
            return complex(value)
        raise FieldError(f"cannot coerce {value!r} into the complex field")
    raise ValueError(f"unknown coefficient field {field!r}")


class Poly:
    """Immutable dense univariate polynomial over a tagged coefficient field."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable, field: str = RATIONAL):
        cs = [coerce_scalar(c, field) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: str = RATIONAL) -> "Poly":
        return cls((), field)

    @classmethod
    def one(cls, field: str = RATIONAL) -> "Poly":
        return cls((1,), field)

    @classmethod
    def x(cls, field: str = RATIONAL) -> "Poly":
        """The monomial z."""
        return cls((0, 1), field)

    @classmethod
    def constant(cls, value, field: str = RATIONAL) -> "Poly":
        return cls((value,), field)

    @classmethod
    def monomial(cls, k: int, field: str = RATIONAL) -> "Poly":
        """The monomial z^k."""
        return cls((0,) * k + (1,), field)

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        """Leading coefficient (raises on the zero polynomial)."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int):
        """Coefficient of z^k (zero beyond the stored degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return coerce_scalar(0, self.field)

    # -- ring operations ---------------------------------------------------

    def _check_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldError(f"mixed coefficient fields {self.field!r} and {other.field!r}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out, self.field)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_field(other)
            if self.is_zero or other.is_zero:
                return Poly.zero(self.field)
            out = [coerce_scalar(0, self.field)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out, self.field)
        scalar = coerce_scalar(other, self.field)
        return Poly([scalar * c for c in self.coeffs], self.field)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        """Division with remainder: self = q*other + r, deg r < deg other.

        Exact rational field only.
        """
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_field(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.field != RATIONAL:
            raise FieldError("polynomial divmod requires the exact rational field")
        if self.degree < other.degree:
            return Poly.zero(self.field), self
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - db] = q
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] -= q * b
        return Poly(quot, self.field), Poly(rem, self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True if self divides other exactly (zero divides only zero)."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    # -- misc --------------------------------------------------------------

    def monic(self) -> "Poly":
        """Scale so the leading coefficient is 1 (zero stays zero)."""
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return Poly([inv * c for c in self.coeffs], self.field)

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.field)

    def __call__(self, z0):
        """Evaluate by Horner's rule; the result lives in the argument's arithmetic."""
        acc = coerce_scalar(0, self.field)
        for c in reversed(self.coeffs):
            acc = acc * z0 + c
        return acc

    def reversed(self, n: int) -> "Poly":
        """Coefficient reversal z^n * p(1/z); requires deg p <= n."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds reversal order {n}")
        out = [coerce_scalar(0, self.field)] * (n + 1)
        for k, c in enumerate(self.coeffs):
            out[n - k] = c
        return Poly(out, self.field)

    def truncated(self, order: int) -> "Poly":
        """Drop all terms of degree > order."""
        return Poly(self.coeffs[: order + 1], self.field)

    def to_complex(self) -> "Poly":
        return self if self.field == COMPLEX else Poly([complex(c) for c in self.coeffs], COMPLEX)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, {self.field!r})"

    def __str__(self):
        return poly_str(self)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over the rationals.

    Raises if both inputs are zero; gcd(p, 0) is the monic normalization of p.
    """
    if a.field != RATIONAL or b.field != RATIONAL:
        raise FieldError("polynomial gcd requires the exact rational field")
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    # Monic normalization at each step keeps coefficient growth in check and
    # does not change the ideal generated.
    a, b = a.monic() if not a.is_zero else a, b.monic() if not b.is_zero else b
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def series_inverse(p: Poly, order: int) -> Poly:
    """Multiplicative inverse of p as a power series, truncated at `order`."""
    if p.is_zero or p.coeff(0) == 0:
        raise ZeroDivisionError("series inverse needs a nonzero constant term")
    c0 = p.coeff(0)
    inv0 = 1 / c0 if p.field == RATIONAL else 1.0 / c0
    out = [coerce_scalar(inv0, p.field)]
    for k in range(1, order + 1):
        acc = coerce_scalar(0, p.field)
        for i in range(1, k + 1):
            acc = acc + p.coeff(i) * out[k - i]
        out.append(-acc * inv0)
    return Poly(out, p.field)


def series_root(p: Poly, k: int, order: int) -> Poly:
    """The k-th root of a power series with constant term 1, by Newton iteration.

    Returns the unique root g with g(0) = 1 satisfying g^k = p + O(z^{order+1}).
    """
    if k <= 0:
        raise ValueError("root index must be positive")
    if p.coeff(0) != 1:
        raise ValueError("series root requires constant term 1")
    g = Poly.one(p.field)
    prec = 1
    while prec <= order:
        prec = min(2 * prec, order + 1)
        # g <- g - (g^k - p) / (k g^{k-1}), all mod z^prec
        gk1 = (g ** (k - 1)).truncated(prec - 1)
        gk = (gk1 * g).truncated(prec - 1)
        num = (gk - p.truncated(prec - 1)).truncated(prec - 1)
        den_inv = series_inverse((gk1 * k).truncated(prec - 1), prec - 1)
        g = (g - (num * den_inv).truncated(prec - 1)).truncated(prec - 1)
    return g.truncated(order)


def poly_str(p: Poly, var: str = "z", inverse: bool = False) -> str:
    """Human-readable rendering; `inverse=True` prints powers of var^-1."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            mono = ""
        else:
            e = -k if inverse else k
            mono = var if e == 1 else f"{var}^{e}"
        if p.field == COMPLEX:
            cs = _complex_str(c)
            term = cs if not mono else (mono if c == 1 else f"{cs}*{mono}")
            parts.append(("+ " if parts else "") + term)
            continue
        neg = c < 0
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}" if mag.denominator != 1 else f"{mag}{mono}"
        else:
            body = f"{mag}"
        sign = ("- " if neg else "+ ") if parts else ("-" if neg else "")
        parts.append(sign + body)
    return " ".join(parts)


def _complex_str(c: complex) -> str:
    if c.imag == 0:
        return repr(c.real)
    return f"({c.real}{c.imag:+}j)"


def parse_rational(text) -> Fraction:
    """Parse "p/q" or integer strings (also accepts ints) into a Fraction."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise ValueError(f"expected a rational string, got {text!r}")
