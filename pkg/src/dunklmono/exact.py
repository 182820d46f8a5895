"""Exact arithmetic over Q(i) and 2x2 matrix algebra with the Pauli constants.

Every quantity in this package is a Gaussian rational: a complex number
whose real and imaginary parts are arbitrary-precision rationals.  The
square root of -1 is fixed once and for all to be +i, so that every
half-integer power of -1 has an unambiguous exact value.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


class GaussRational:
    """An element a + b*i of Q(i) with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def coerce(value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        return GaussRational(_as_fraction(value))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_rational(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = GaussRational.coerce(other)
        # Fast paths: most values in practice are purely real.
        if not self.im:
            if not self.re:
                return ZERO
            return GaussRational(self.re * other.re, self.re * other.im)
        if not other.im:
            return GaussRational(self.re * other.re, self.im * other.re)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        return self * GaussRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussRational.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = GaussRational(1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = GaussRational.coerce(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- formatting ------------------------------------------------------

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def half_power_of_minus_one(h: int) -> GaussRational:
    """(-1) raised to h/2, under the fixed branch (-1)^(1/2) = +i.

    Equals i**h, so h=1 -> i, h=2 -> -1, h=3 -> -i, h=-1 -> -i.
    """
    return (ONE, I, -ONE, -I)[h % 4]


def minus_one_power(exponent: Fraction) -> GaussRational:
    """(-1)**exponent for an integer or half-integer exponent."""
    doubled = 2 * _as_fraction(exponent)
    if doubled.denominator != 1:
        raise ValueError(f"exponent {exponent} is not a half-integer")
    return half_power_of_minus_one(doubled.numerator)


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def parse_gauss(text: str) -> GaussRational:
    """Parse 'a/b', 'a/b+c/d*i' or 'a/b-c/d*i' into an element of Q(i)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational literal")
    if not s.endswith("*i"):
        return GaussRational(parse_rational(s))
    body = s[:-2]
    # Split off the imaginary coefficient at the last top-level +/- that
    # is not a leading sign or an exponent of the real part.
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "+-/":
            re_text, im_text = body[:pos], body[pos:]
            if im_text in ("+", "-"):
                im_text += "1"
            return GaussRational(parse_rational(re_text), parse_rational(im_text))
    # No real part: the whole body is the imaginary coefficient.
    if body in ("", "+", "-"):
        body += "1"
    return GaussRational(0, parse_rational(body))


class Mat2:
    """A 2x2 matrix over Q(i), stored row-major as (a, b, c, d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", GaussRational.coerce(a))
        object.__setattr__(self, "b", GaussRational.coerce(b))
        object.__setattr__(self, "c", GaussRational.coerce(c))
        object.__setattr__(self, "d", GaussRational.coerce(d))

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def __add__(self, other):
        return Mat2(self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Mat2(self.a - other.a, self.b - other.b,
                    self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        s = GaussRational.coerce(other)
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)

    def __rmul__(self, other):
        s = GaussRational.coerce(other)
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise TypeError("Mat2 exponent must be a non-negative integer")
        result = I2
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def trace(self) -> GaussRational:
        return self.a + self.d

    def __eq__(self, other):
        if isinstance(other, Mat2):
            return self.entries() == other.entries()
        return NotImplemented

    def __hash__(self):
        return hash(self.entries())

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    __repr__ = __str__


I2 = Mat2(1, 0, 0, 1)
ZERO2 = Mat2(0, 0, 0, 0)
SIGMA1 = Mat2(0, 1, 1, 0)
SIGMA2 = Mat2(0, half_power_of_minus_one(3), half_power_of_minus_one(1), 0)
SIGMA3 = Mat2(1, 0, 0, -1)
SIGMA = {1: SIGMA1, 2: SIGMA2, 3: SIGMA3}


def anticommutator(A: Mat2, B: Mat2) -> Mat2:
    """{A, B} = AB + BA."""
    return A * B + B * A
