"""Scalar tower shared by every module.

Exact values are ``int`` / ``fractions.Fraction``; floating values are
``float`` / ``complex``.  Mixed arithmetic follows Python's numeric tower
(a Fraction silently promotes when combined with a float or complex), so
routines that must stay exact guard their inputs with :func:`require_exact`.

:class:`QuadExt` adjoins ``sqrt(d)`` to the rationals so that algebraic
quantities such as ``(s + sqrt(s^2+3))/3`` remain exact for rational ``s``
even when ``s^2+3`` is not a perfect square.
"""

from __future__ import annotations

import math
from fractions import Fraction


def is_exact(value) -> bool:
    """True for values carrying exact arithmetic (rationals and QuadExt)."""
    return isinstance(value, (int, Fraction, QuadExt))


def is_rational(value) -> bool:
    return isinstance(value, (int, Fraction))


def require_exact(value, what: str = "value"):
    if not is_exact(value):
        raise TypeError(
            f"{what} must be exact (int/Fraction/QuadExt), got {type(value).__name__}"
        )
    return value


def to_number(value):
    """Collapse any scalar to a float or complex for numeric work."""
    if isinstance(value, QuadExt):
        return value.to_number()
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, int):
        return float(value)
    return value


def exact_sqrt(r: Fraction):
    """sqrt(r) as a Fraction when r is a perfect rational square, else None."""
    r = Fraction(r)
    if r < 0:
        return None
    a = math.isqrt(r.numerator)
    b = math.isqrt(r.denominator)
    if a * a == r.numerator and b * b == r.denominator:
        return Fraction(a, b)
    return None


def _square_core(n: int, bound: int = 1_000_000) -> tuple[int, int]:
    """Split n = m*m*k with k as squarefree as trial division can make it.

    The sign of n is carried by k.  Factors above `bound` are not probed;
    callers never rely on k being fully squarefree (see QuadExt.__eq__).
    """
    if n == 0:
        return 1, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    m, k, f = 1, 1, 2
    while f * f <= n and f <= bound:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e:
            m *= f ** (e // 2)
            k *= f ** (e % 2)
        f += 1 if f == 2 else 2
    r = math.isqrt(n)
    if r * r == n:
        m *= r
    else:
        k *= n
    return m, sign * k


def sqrt_scalar(r):
    """Square root of a scalar: exact (Fraction or QuadExt) for rational
    input, principal float/complex root otherwise."""
    if isinstance(r, (int, Fraction)):
        r = Fraction(r)
        s = exact_sqrt(r) if r >= 0 else None
        if s is not None:
            return s
        # sqrt(p/q) = sqrt(p*q)/q
        m, k = _square_core(r.numerator * r.denominator)
        coeff = Fraction(m, r.denominator)
        if k == 1:
            return coeff
        return QuadExt(0, coeff, k)
    if isinstance(r, complex) or (isinstance(r, float) and r < 0):
        return complex(r) ** 0.5
    return math.sqrt(r)


class QuadExt:
    """u + v*sqrt(d) with rational u, v and a non-square integer radicand d.

    Instances are immutable.  Arithmetic collapses to a plain Fraction
    whenever the radical part cancels, so v is never zero and a QuadExt is
    never equal to a rational.  Mixing two different radicands in one
    operation is an error (the tower never needs composite fields).
    """

    __slots__ = ("u", "v", "d")

    def __init__(self, u, v, d):
        u, v, d = Fraction(u), Fraction(v), Fraction(d)
        if v == 0:
            raise ValueError("QuadExt requires a nonzero radical part; use a Fraction")
        if d == 0:
            raise ValueError("radicand must be nonzero")
        # normalize the radicand to an integer core: sqrt(p/q) = sqrt(p*q)/q
        if d.denominator != 1:
            v = v / d.denominator
            d = Fraction(d.numerator * d.denominator)
        m, k = _square_core(d.numerator)
        v = v * m
        if k == 1 or abs(k) == 1 and k > 0:
            raise ValueError("radicand is a perfect square; use a Fraction")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "d", k)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("QuadExt is immutable")

    # -- helpers -----------------------------------------------------------
    @staticmethod
    def _make(u: Fraction, v: Fraction, d: int):
        if v == 0:
            return u
        out = object.__new__(QuadExt)
        object.__setattr__(out, "u", u)
        object.__setattr__(out, "v", v)
        object.__setattr__(out, "d", d)
        return out

    def _coerce(self, other):
        """Return (u, v) of other inside this field, or None."""
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return None
            return other.u, other.v
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def conj(self):
        return QuadExt._make(self.u, -self.v, self.d)

    def norm(self) -> Fraction:
        return self.u * self.u - self.v * self.v * self.d

    def to_number(self):
        if self.d > 0:
            return float(self.u) + float(self.v) * math.sqrt(self.d)
        return complex(float(self.u), float(self.v) * math.sqrt(-self.d))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        uv = self._coerce(other)
        if uv is None:
            return NotImplemented
        return QuadExt._make(self.u + uv[0], self.v + uv[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        uv = self._coerce(other)
        if uv is None:
            return NotImplemented
        return QuadExt._make(self.u - uv[0], self.v - uv[1], self.d)

    def __rsub__(self, other):
        uv = self._coerce(other)
        if uv is None:
            return NotImplemented
        return QuadExt._make(uv[0] - self.u, uv[1] - self.v, self.d)

    def __mul__(self, other):
        uv = self._coerce(other)
        if uv is None:
            return NotImplemented
        u2, v2 = uv
        return QuadExt._make(
            self.u * u2 + self.v * v2 * self.d, self.u * v2 + self.v * u2, self.d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt._make(self.u / other, self.v / other, self.d)
        uv = self._coerce(other)
        if uv is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero QuadExt")
        return (self * other.conj()) / n

    def __rtruediv__(self, other):
        n = self.norm()
        inv = self.conj() / n
        return inv * other if isinstance(other, (int, Fraction)) else NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (1 / self) ** (-exponent)
        result, base, e = Fraction(1), self, exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __neg__(self):
        return QuadExt._make(-self.u, -self.v, self.d)

    def __pos__(self):
        return self

    def __bool__(self):
        return True  # v != 0 and d non-square => never zero

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            # robust across partially reduced radicands
            if self.u != other.u:
                return False
            if (self.v > 0) != (other.v > 0) or (self.d > 0) != (other.d > 0):
                return False
            return self.v * self.v * self.d == other.v * other.v * other.d
        if isinstance(other, (int, Fraction)):
            return False
        if isinstance(other, (float, complex)):
            return complex(self.to_number()) == complex(other)
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __float__(self):
        if self.d < 0:
            raise TypeError("complex QuadExt has no float value")
        return self.to_number()

    def __complex__(self):
        return complex(self.to_number())

    def __str__(self):
        v = self.v
        rad = f"sqrt({self.d})"
        vs = rad if v == 1 else (f"-{rad}" if v == -1 else f"{v}*{rad}")
        if self.u == 0:
            return vs
        sign = "+" if v > 0 else "-"
        mag = rad if abs(v) == 1 else f"{abs(v)}*{rad}"
        return f"{self.u}{sign}{mag}"

    def __repr__(self):
        return f"QuadExt({self.u!r}, {self.v!r}, {self.d})"


def format_scalar(value) -> str:
    """Stable string form used in JSON reports: exact values print exactly."""
    if isinstance(value, (int, Fraction, QuadExt)):
        return str(value)
    if isinstance(value, complex):
        return f"{value.real!r}{value.imag:+}j".replace("+-", "-")
    return repr(float(value))
