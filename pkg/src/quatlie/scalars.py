"""Exact scalars: rationals, Gaussian rationals and rational quaternions.

Rationals are plain :class:`fractions.Fraction`. Quaternion components are
ordered ``(re, i, j, k)`` everywhere, including flattening and serialization.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: every quantity in this package is exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


class Quaternion:
    """Quaternion ``re + im_i*i + im_j*j + im_k*k`` with rational components."""

    __slots__ = ("re", "im_i", "im_j", "im_k")

    def __init__(self, re=0, im_i=0, im_j=0, im_k=0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im_i", as_rational(im_i))
        object.__setattr__(self, "im_j", as_rational(im_j))
        object.__setattr__(self, "im_k", as_rational(im_k))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def _raw(cls, a, b, c, d):
        # trusted constructor, components already Fractions
        q = object.__new__(cls)
        object.__setattr__(q, "re", a)
        object.__setattr__(q, "im_i", b)
        object.__setattr__(q, "im_j", c)
        object.__setattr__(q, "im_k", d)
        return q

    def components(self) -> tuple:
        return (self.re, self.im_i, self.im_j, self.im_k)

    def __iter__(self):
        return iter(self.components())

    def __repr__(self):
        return "Quaternion(%s, %s, %s, %s)" % tuple(str(c) for c in self.components())

    def __str__(self):
        terms = []
        for c, unit in zip(self.components(), ("", "i", "j", "k")):
            if not c:
                continue
            if unit and abs(c) == 1:
                terms.append(unit if c > 0 else "-" + unit)
            else:
                terms.append(f"{c}{unit}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.components() == other.components()
        if isinstance(other, GaussianRational):
            return self == other.to_quaternion()
        if isinstance(other, (int, Fraction)):
            return self.re == other and not (self.im_i or self.im_j or self.im_k)
        return NotImplemented

    def __hash__(self):
        return hash(self.components())

    def __bool__(self):
        return bool(self.re or self.im_i or self.im_j or self.im_k)

    def is_zero(self) -> bool:
        return not self

    def is_real(self) -> bool:
        return not (self.im_i or self.im_j or self.im_k)

    def is_imaginary(self) -> bool:
        return not self.re

    def __neg__(self):
        return Quaternion._raw(-self.re, -self.im_i, -self.im_j, -self.im_k)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion._raw(self.re + other.re, self.im_i + other.im_i,
                               self.im_j + other.im_j, self.im_k + other.im_k)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion._raw(self.re - other.re, self.im_i - other.im_i,
                               self.im_j - other.im_j, self.im_k - other.im_k)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return quat_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return quat_mul(other, self)

    def scale(self, t) -> "Quaternion":
        t = as_rational(t)
        return Quaternion._raw(t * self.re, t * self.im_i, t * self.im_j, t * self.im_k)

    def conj(self) -> "Quaternion":
        return quat_conj(self)

    def norm2(self) -> Fraction:
        return self.re ** 2 + self.im_i ** 2 + self.im_j ** 2 + self.im_k ** 2

    def inverse(self) -> "Quaternion":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("quaternion inverse of zero")
        return self.conj().scale(1 / n)

    def complex_parts(self):
        """Split ``q = z + j*w`` into Gaussian rationals ``(z, w)``.

        With ``q = a + b i + c j + d k`` this gives ``z = a + b i`` and
        ``w = c - d i`` because ``j*(c - d i) = c j + d k``.
        """
        return (GaussianRational(self.re, self.im_i), GaussianRational(self.im_j, -self.im_k))

    @classmethod
    def from_complex_parts(cls, z: "GaussianRational", w: "GaussianRational") -> "Quaternion":
        return cls._raw(z.re, z.im, w.re, -w.im)

    def to_json(self) -> list:
        return [format_rational(c) for c in self.components()]

    @classmethod
    def from_json(cls, data) -> "Quaternion":
        if len(data) != 4:
            raise ValueError("quaternion JSON must have 4 components [re, i, j, k]")
        return cls(*(parse_rational(str(c)) for c in data))


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p*q`` (``ij = k``, ``ji = -k``)."""
    a1, b1, c1, d1 = p.re, p.im_i, p.im_j, p.im_k
    a2, b2, c2, d2 = q.re, q.im_i, q.im_j, q.im_k
    return Quaternion._raw(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_conj(q: Quaternion) -> Quaternion:
    return Quaternion._raw(q.re, -q.im_i, -q.im_j, -q.im_k)


ZERO = Quaternion._raw(_ZERO, _ZERO, _ZERO, _ZERO)
ONE = Quaternion._raw(_ONE, _ZERO, _ZERO, _ZERO)
I = Quaternion._raw(_ZERO, _ONE, _ZERO, _ZERO)
J = Quaternion._raw(_ZERO, _ZERO, _ONE, _ZERO)
K = Quaternion._raw(_ZERO, _ZERO, _ZERO, _ONE)
UNITS = (ONE, I, J, K)
IMAGINARY_UNITS = (I, J, K)


class GaussianRational:
    """Complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Quaternion):
            return self.to_quaternion() == other
        if isinstance(other, (int, Fraction)):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im, _ZERO, _ZERO))

    def __bool__(self):
        return bool(self.re or self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        other = _coerce_gauss(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_gauss(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_gauss(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_gauss(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def to_quaternion(self) -> Quaternion:
        return Quaternion._raw(self.re, self.im, _ZERO, _ZERO)


def _coerce(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, GaussianRational):
        return x.to_quaternion()
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Quaternion._raw(Fraction(x), _ZERO, _ZERO, _ZERO)
    return None


def _coerce_gauss(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GaussianRational(x, 0)
    return None


def q(x) -> Quaternion:
    """Lift a scalar (int, Fraction, GaussianRational, Quaternion) to a Quaternion."""
    out = _coerce(x)
    if out is None:
        raise TypeError(f"cannot interpret {x!r} as a quaternion")
    return out
