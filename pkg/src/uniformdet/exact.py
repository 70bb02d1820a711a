"""Exact scalars: integers, rationals and Gaussian rationals.

Real values are plain :class:`fractions.Fraction` instances.  Values with a
nonzero imaginary part are :class:`GaussianRational`.  Every arithmetic result
is canonicalised by :func:`as_scalar`, so a Gaussian rational whose imaginary
part cancels comes back as a ``Fraction``.  That keeps equality structural:
two scalars are equal iff they have the same canonical form.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial: n must be non-negative, got {n}")
    return math.factorial(n)


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Instances are immutable.  Use :func:`as_scalar` or arithmetic rather than
    the constructor when the result might be real; the constructor always
    builds a ``GaussianRational``, even for ``im == 0``.

    >>> i = GaussianRational(0, 1)
    >>> i * i
    Fraction(-1, 1)
    >>> GaussianRational(1, 2) / GaussianRational(1, 2)
    Fraction(1, 1)
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Rational | int = 0, im: Rational | int = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> Scalar:
        return _make(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        re2, im2 = _parts(other)
        return _make(self.re + re2, self.im + im2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        re2, im2 = _parts(other)
        return _make(self.re - re2, self.im - im2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        re2, im2 = _parts(other)
        return _make(re2 - self.re, im2 - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c, d = _parts(other)
        a, b = self.re, self.im
        return _make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c, d = _parts(other)
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return _make((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(*_parts(other)) / self

    def __neg__(self):
        return _make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer exponents are supported")
        result: Scalar = Fraction(1)
        base: Scalar = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self.re, self.im) == _parts(other)

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational]


def _parts(value: Scalar) -> tuple[Fraction, Fraction]:
    if isinstance(value, GaussianRational):
        return value.re, value.im
    return value, Fraction(0)


def _coerce(value):
    if isinstance(value, (GaussianRational, Fraction)):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    return NotImplemented


def _make(re: Fraction, im: Fraction) -> Scalar:
    if im == 0:
        return re
    return GaussianRational(re, im)


def as_scalar(value) -> Scalar:
    """Canonicalise ``value`` (int, Fraction, GaussianRational or complex-free
    rational) into the scalar field.  Floats are rejected: they are not exact.
    """
    if isinstance(value, GaussianRational):
        return _make(value.re, value.im)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def is_real(value: Scalar) -> bool:
    return not isinstance(value, GaussianRational) or value.im == 0


# ---------------------------------------------------------------------------
# text / JSON forms

_RAT = r"-?\d+(?:/[1-9]\d*)?"
_RAT_RE = re.compile(rf"^{_RAT}$")
_COMPLEX_RE = re.compile(rf"^({_RAT})([+-]\d+(?:/[1-9]\d*)?)i$")


def _parse_rational(text: str) -> Fraction:
    if not _RAT_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    return Fraction(text)


def parse_scalar(text: str) -> Scalar:
    """Parse ``INT``, ``INT/INT`` or the complex form ``RAT(+|-)RATi``.

    >>> parse_scalar("-4/6")
    Fraction(-2, 3)
    >>> parse_scalar("1/2-3i")
    GaussianRational(1/2, -3)
    """
    text = text.strip()
    if _RAT_RE.match(text):
        return Fraction(text)
    m = _COMPLEX_RE.match(text)
    if m:
        return _make(Fraction(m.group(1)), Fraction(m.group(2)))
    raise ValueError(f"malformed scalar {text!r}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value: Scalar) -> str:
    """Single-token text form; inverse of :func:`parse_scalar`."""
    value = as_scalar(value)
    if isinstance(value, GaussianRational):
        sign = "-" if value.im < 0 else "+"
        return f"{format_rational(value.re)}{sign}{format_rational(abs(value.im))}i"
    return format_rational(value)


def scalar_to_json(value: Scalar):
    value = as_scalar(value)
    if isinstance(value, GaussianRational):
        return {"re": format_rational(value.re), "im": format_rational(value.im)}
    return format_rational(value)


def scalar_from_json(obj) -> Scalar:
    """Read a scalar from its JSON form.

    Strings follow the scalar grammar, objects carry ``re``/``im`` strings.
    JSON integers are exact and accepted; JSON floats are not.
    """
    if isinstance(obj, dict):
        if set(obj) != {"re", "im"}:
            raise ValueError(f"complex scalar needs exactly 're' and 'im', got {sorted(obj)}")
        return _make(_json_rational(obj["re"]), _json_rational(obj["im"]))
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return parse_scalar(obj)
    raise ValueError(f"cannot read scalar from {obj!r}")


def _json_rational(obj) -> Fraction:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if isinstance(obj, str):
        return _parse_rational(obj.strip())
    raise ValueError(f"cannot read rational from {obj!r}")


def parse_scalar_list(text: str) -> list[Scalar]:
    """Comma separated scalars, as used by inline CLI flags."""
    if not text.strip():
        raise ValueError("empty scalar list")
    return [parse_scalar(part) for part in text.split(",")]
