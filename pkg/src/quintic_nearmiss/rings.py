"""Exact arithmetic in Z[i], Q(i), Q(sqrt 3) and Q(i, sqrt 3).

Rationals are :class:`fractions.Fraction`, which is already kept in lowest
terms with a positive denominator after every operation.  Every element type
here is an immutable frozen dataclass whose fields are canonical, so
structural equality is mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import TypeVar

Rational = Fraction

__all__ = [
    "Rational",
    "NotIntegral",
    "GaussianInt",
    "GaussianRational",
    "QuadElem",
    "BiquadElem",
    "ring_pow",
    "quad_conjugate",
    "as_integer",
    "SQRT3",
    "I",
]


class NotIntegral(ArithmeticError):
    """An element expected to be an (Gaussian) integer is not one."""


R = TypeVar("R")

def ring_pow(x: R, k: int) -> R:
    """Return ``x**k`` for ``k >= 0`` by binary exponentiation.

    Works for any type with a ``one()`` constructor (all ring types in this
    package) and for plain ``int`` or ``Fraction``; ``x**0`` is the
    multiplicative identity of ``x``'s ring.
    """
    if k < 0:
        raise ValueError(f"negative exponent {k} not supported")
    result = _one_like(x)
    base = x
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def _one_like(x):
    if hasattr(type(x), "one"):
        return x.one()
    if isinstance(x, Fraction):
        return Fraction(1)
    if isinstance(x, int):
        return 1
    raise TypeError(f"no ring identity for {type(x).__name__}")


def _is_scalar(x: object) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _int_or_raise(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise NotIntegral(f"{what} = {q} is not an integer")
    return q.numerator


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    def __post_init__(self) -> None:
        if not (isinstance(self.re, int) and isinstance(self.im, int)):
            raise TypeError("GaussianInt components must be int")

    @classmethod
    def one(cls) -> GaussianInt:
        return cls(1, 0)

    @classmethod
    def zero(cls) -> GaussianInt:
        return cls(0, 0)

    @classmethod
    def _coerce(cls, other: object) -> GaussianInt | None:
        if isinstance(other, GaussianInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return cls(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GaussianInt:
        return ring_pow(self, k)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((GaussianInt, self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def to_rational(self) -> GaussianRational:
        return GaussianRational(Fraction(self.re), Fraction(self.im))

    def __str__(self) -> str:
        return _format_complex(self.re, self.im)


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def one(cls) -> GaussianRational:
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def zero(cls) -> GaussianRational:
        return cls(Fraction(0), Fraction(0))

    @classmethod
    def _coerce(cls, other: object) -> GaussianRational | None:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, GaussianInt):
            return other.to_rational()
        if _is_scalar(other):
            return cls(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> GaussianRational:
        return ring_pow(self, k)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.is_gaussian_integer():
            return hash(self.to_gaussian_int())
        return hash((GaussianRational, self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def to_gaussian_int(self) -> GaussianInt:
        return GaussianInt(
            _int_or_raise(self.re, "real part"),
            _int_or_raise(self.im, "imaginary part"),
        )

    def __str__(self) -> str:
        return _format_complex(self.re, self.im)


@dataclass(frozen=True)
class QuadElem:
    """``u + v*sqrt(3)`` with rational ``u`` and ``v``."""

    u: Fraction
    v: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    @classmethod
    def one(cls) -> QuadElem:
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def zero(cls) -> QuadElem:
        return cls(Fraction(0), Fraction(0))

    @classmethod
    def _coerce(cls, other: object) -> QuadElem | None:
        if isinstance(other, QuadElem):
            return other
        if _is_scalar(other):
            return cls(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.u, -self.v)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(
            self.u * o.u + 3 * self.v * o.v,
            self.u * o.v + self.v * o.u,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadElem:
        return ring_pow(self, k)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __hash__(self) -> int:
        if self.v == 0:
            return hash(self.u)
        return hash((QuadElem, self.u, self.v))

    def __bool__(self) -> bool:
        return bool(self.u or self.v)

    def conjugate(self) -> QuadElem:
        return QuadElem(self.u, -self.v)

    def norm(self) -> Fraction:
        n = self * self.conjugate()
        assert n.v == 0
        return n.u

    def __str__(self) -> str:
        return f"{self.u}{'+' if self.v >= 0 else '-'}{abs(self.v)}*sqrt(3)"


@dataclass(frozen=True)
class BiquadElem:
    """``c00 + c01*sqrt(3) + c10*i + c11*i*sqrt(3)`` over Q."""

    c00: Fraction
    c01: Fraction = Fraction(0)
    c10: Fraction = Fraction(0)
    c11: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("c00", "c01", "c10", "c11"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def one(cls) -> BiquadElem:
        return cls(Fraction(1))

    @classmethod
    def zero(cls) -> BiquadElem:
        return cls(Fraction(0))

    @classmethod
    def from_parts(cls, real: QuadElem, imag: QuadElem) -> BiquadElem:
        """Build ``real + i*imag`` from two elements of Q(sqrt 3)."""
        return cls(real.u, real.v, imag.u, imag.v)

    @property
    def real(self) -> QuadElem:
        return QuadElem(self.c00, self.c01)

    @property
    def imag(self) -> QuadElem:
        return QuadElem(self.c10, self.c11)

    @classmethod
    def _coerce(cls, other: object) -> BiquadElem | None:
        if isinstance(other, BiquadElem):
            return other
        if isinstance(other, QuadElem):
            return cls(other.u, other.v)
        if isinstance(other, GaussianInt):
            return cls(Fraction(other.re), Fraction(0), Fraction(other.im))
        if _is_scalar(other):
            return cls(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BiquadElem(
            self.c00 + o.c00, self.c01 + o.c01, self.c10 + o.c10, self.c11 + o.c11
        )

    __radd__ = __add__

    def __neg__(self) -> BiquadElem:
        return BiquadElem(-self.c00, -self.c01, -self.c10, -self.c11)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (p + q i)(p' + q' i) with p, q in Q(sqrt 3)
        p, q = self.real, self.imag
        p2, q2 = o.real, o.imag
        return BiquadElem.from_parts(p * p2 - q * q2, p * q2 + q * p2)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiquadElem:
        return ring_pow(self, k)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.c00, self.c01, self.c10, self.c11) == (o.c00, o.c01, o.c10, o.c11)

    def __hash__(self) -> int:
        if self.c10 == 0 and self.c11 == 0:
            return hash(self.real)
        return hash((BiquadElem, self.c00, self.c01, self.c10, self.c11))

    def __bool__(self) -> bool:
        return bool(self.c00 or self.c01 or self.c10 or self.c11)


SQRT3 = QuadElem(0, 1)
I = GaussianInt(0, 1)


def quad_conjugate(x: QuadElem) -> QuadElem:
    """Galois conjugate ``u - v*sqrt(3)``."""
    return x.conjugate()


def as_integer(x):
    """Collapse an element known to be integral to a plain integer.

    ``Fraction`` and ``QuadElem`` give an ``int``; ``BiquadElem`` and
    ``GaussianRational`` give a :class:`GaussianInt`.  Raises
    :class:`NotIntegral` when the element has a surviving sqrt(3) part or a
    non-unit denominator.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a ring element")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _int_or_raise(x, "value")
    if isinstance(x, QuadElem):
        if x.v != 0:
            raise NotIntegral(f"{x} has nonzero sqrt(3) part")
        return _int_or_raise(x.u, "rational part")
    if isinstance(x, BiquadElem):
        if x.c01 != 0 or x.c11 != 0:
            raise NotIntegral(f"{x} has nonzero sqrt(3) part")
        return GaussianInt(
            _int_or_raise(x.c00, "real part"), _int_or_raise(x.c10, "imaginary part")
        )
    if isinstance(x, GaussianRational):
        return x.to_gaussian_int()
    if isinstance(x, _RationalABC):
        return as_integer(Fraction(x))
    raise TypeError(f"cannot take integer value of {type(x).__name__}")


def _format_complex(re, im) -> str:
    if im == 0:
        return str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}i"
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    return f"{re}{sign}{'' if mag == 1 else mag}i"
