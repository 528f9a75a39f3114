"""Rational generating functions over Q(i), expanded as formal power series.

The real and imaginary halves of the b- and c-series have different
denominators; here each is stored as one Gaussian-coefficient fraction over
the common denominator ``(1 + x)(1 - 4x + x^2) = 1 - 3x - 3x^2 + x^3``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .rings import GaussianInt, GaussianRational
from .solutions import raw_triples, solutions

__all__ = [
    "ZeroConstantTerm",
    "UniPoly",
    "RationalGF",
    "Which",
    "gf_normalize",
    "gf_coefficients",
    "builtin_gf",
    "sequence_values",
    "crosscheck",
    "satisfies_recurrence",
]


class ZeroConstantTerm(ZeroDivisionError):
    """The denominator vanishes at 0, so there is no power series."""


def _gr(c) -> GaussianRational:
    if isinstance(c, GaussianRational):
        return c
    if isinstance(c, GaussianInt):
        return c.to_rational()
    return GaussianRational(c)


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, coefficients in ascending degree, no trailing zeros."""

    coeffs: tuple[GaussianRational, ...] = ()

    def __post_init__(self) -> None:
        cs = [_gr(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs) -> UniPoly:
        return cls(tuple(coeffs))

    @classmethod
    def x(cls) -> UniPoly:
        return cls.of(0, 1)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GaussianRational.zero()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, GaussianInt, GaussianRational)) and not isinstance(
            other, bool
        ):
            return UniPoly.of(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self), len(o))
        return UniPoly(tuple(self[k] + o[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

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
        if not self or not o:
            return UniPoly()
        out = [GaussianRational.zero()] * (len(self) + len(o) - 1)
        for i, p in enumerate(self.coeffs):
            if not p:
                continue
            for j, q in enumerate(o.coeffs):
                out[i + j] = out[i + j] + p * q
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        # Horner
        acc = GaussianRational.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_var(self, factor) -> UniPoly:
        """``p(factor * x)``."""
        f = _gr(factor)
        out, power = [], GaussianRational.one()
        for c in self.coeffs:
            out.append(c * power)
            power = power * f
        return UniPoly(tuple(out))


@dataclass(frozen=True)
class RationalGF:
    num: UniPoly
    den: UniPoly

    def __add__(self, other: RationalGF) -> RationalGF:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return RationalGF(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def scale_var(self, factor) -> RationalGF:
        return RationalGF(self.num.scale_var(factor), self.den.scale_var(factor))


def gf_normalize(gf: RationalGF) -> RationalGF:
    """Rescale so the denominator's constant term is 1."""
    d0 = gf.den[0]
    if not d0:
        raise ZeroConstantTerm("denominator has zero constant term")
    if d0 == 1:
        return gf
    inv = d0.inverse()
    return RationalGF(gf.num * inv, gf.den * inv)


def gf_coefficients(gf: RationalGF, count: int) -> list[GaussianRational]:
    """First ``count`` power-series coefficients.

    With ``den = 1 + q1 x + q2 x^2 + ...`` the coefficients satisfy
    ``t[n] = p[n] - sum(q[k] t[n-k] for k >= 1)``.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    gf = gf_normalize(gf)
    q = gf.den.coeffs
    out: list[GaussianRational] = []
    for n in range(count):
        t = gf.num[n]
        for k in range(1, min(n, len(q) - 1) + 1):
            if q[k]:
                t = t - q[k] * out[n - k]
        out.append(t)
    return out


class Which(enum.Enum):
    A_SCALED = "a"
    B_SCALED = "b"
    C_SCALED = "c"
    A_RAW = "a_raw"
    B_RAW = "b_raw"
    C_RAW = "c_raw"

    @property
    def raw(self) -> bool:
        return self.value.endswith("_raw")

    @property
    def component(self) -> int:
        return "abc".index(self.value[0])


def _poly(*coeffs) -> UniPoly:
    return UniPoly.of(*coeffs)


I = GaussianInt(0, 1)

# denominators written as the factored products, expanded by UniPoly arithmetic
_X_LIN = _poly(1, 1)  # 1 + x
_X_QUAD = _poly(1, -4, 1)  # 1 - 4x + x^2
_Z_LIN = _poly(1, 2)  # 1 + 2z
_Z_QUAD = _poly(1, -8, 4)  # 1 - 8z + 4z^2


def builtin_gf(which: Which) -> RationalGF:
    """One of the six generating functions, as a single fraction.

    Scaled (variable x):
        a: (1 + x^2) / ((1+x)(1-4x+x^2))
        b: -2x / ((1+x)(1-4x+x^2)) + i (1-x) / (1-4x+x^2)
        c:  2x / ((1+x)(1-4x+x^2)) + i (1-x) / (1-4x+x^2)
    Raw (variable z, with x = 2z):
        A: (1 + 4z^2) / ((1+2z)(1-8z+4z^2))
        B: -4z / ((1+2z)(1-8z+4z^2)) + i (1-2z) / (1-8z+4z^2)
        C:  4z / ((1+2z)(1-8z+4z^2)) + i (1-2z) / (1-8z+4z^2)
    """
    if which.raw:
        lin, quad = _Z_LIN, _Z_QUAD
        a_num, bc_lin, im_num = _poly(1, 0, 4), 4, _poly(1, -2)
    else:
        lin, quad = _X_LIN, _X_QUAD
        a_num, bc_lin, im_num = _poly(1, 0, 1), 2, _poly(1, -1)
    den = lin * quad
    comp = which.component
    if comp == 0:
        return RationalGF(a_num, den)
    real_num = _poly(0, -bc_lin if comp == 1 else bc_lin)
    # i-part has denominator quad only: lift it to the common denominator
    return RationalGF(real_num + I * im_num * lin, den)


def sequence_values(which: Which, count: int) -> list[GaussianInt]:
    """The matching terms computed by the solutions module, not by the GF."""
    comp = which.component
    if which.raw:
        return [t[comp] for t in raw_triples(count)]
    return [(r.a, r.b, r.c)[comp] for r in solutions(count)]


def crosscheck(which: Which, count: int) -> bool:
    """GF coefficients are Gaussian integers equal to the sequence terms."""
    if count < 1:
        raise ValueError("count must be >= 1")
    coeffs = gf_coefficients(builtin_gf(which), count)
    if not all(c.is_gaussian_integer() for c in coeffs):
        return False
    return [c.to_gaussian_int() for c in coeffs] == sequence_values(which, count)


def satisfies_recurrence(
    terms: Sequence, weights: Sequence[int], start: int
) -> bool:
    """``terms[n] == sum(w[k] * terms[n-1-k])`` for every ``n >= start``."""
    zero = 0 * terms[0]
    return all(
        terms[n] == sum((w * terms[n - 1 - k] for k, w in enumerate(weights)), zero)
        for n in range(start, len(terms))
    )

