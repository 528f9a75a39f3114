"""Sparse polynomials in ``x`` and ``a`` with Gaussian-integer coefficients.

Used to expand

    g = (x^2 + 2ax - 2a^2)^5 + (i x^2 - 2ax + 2i a^2)^5

completely and show that no monomial with odd ``x``-degree survives, i.e.
``g(x) == g(-x)`` identically.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterator, Mapping

from .rings import GaussianInt, ring_pow

__all__ = [
    "QUINTIC_EXPONENT",
    "BiPoly",
    "quintic_bases",
    "build_g",
    "odd_part_in_x",
    "negate_x",
    "verify_param_identity",
]

QUINTIC_EXPONENT = 5

Monomial = tuple[int, int]  # (deg_x, deg_a)


def _as_coeff(c) -> GaussianInt:
    if isinstance(c, GaussianInt):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return GaussianInt(c, 0)
    raise TypeError(f"coefficient must be int or GaussianInt, got {type(c).__name__}")


class BiPoly:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, GaussianInt | int] | None = None):
        clean: dict[Monomial, GaussianInt] = {}
        for (dx, da), c in (terms or {}).items():
            if dx < 0 or da < 0:
                raise ValueError(f"negative degree in monomial {(dx, da)}")
            c = _as_coeff(c)
            if c:
                clean[(dx, da)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[Monomial, GaussianInt]) -> BiPoly:
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> BiPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> BiPoly:
        return cls.const(1)

    @classmethod
    def const(cls, c: GaussianInt | int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def a(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @property
    def terms(self) -> Mapping[Monomial, GaussianInt]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, deg_x: int, deg_a: int) -> GaussianInt:
        return self._terms.get((deg_x, deg_a), GaussianInt.zero())

    def degree_x(self) -> int:
        return max((dx for dx, _ in self._terms), default=-1)

    def degree_a(self) -> int:
        return max((da for _, da in self._terms), default=-1)

    @staticmethod
    def _coerce(other) -> BiPoly | None:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, GaussianInt)) and not isinstance(other, bool):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            s = out.get(m, GaussianInt.zero()) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({m: -c for m, c in self._terms.items()})

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
        out: dict[Monomial, GaussianInt] = {}
        zero = GaussianInt.zero()
        for (dx1, da1), c1 in self._terms.items():
            for (dx2, da2), c2 in o._terms.items():
                m = (dx1 + dx2, da1 + da2)
                out[m] = out.get(m, zero) + c1 * c2
        return BiPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiPoly:
        return ring_pow(self, k)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __call__(self, x: GaussianInt | int, a: GaussianInt | int) -> GaussianInt:
        """Evaluate at the point ``(x, a)``."""
        x, a = _as_coeff(x), _as_coeff(a)
        total = GaussianInt.zero()
        for (dx, da), c in self._terms.items():
            total = total + c * ring_pow(x, dx) * ring_pow(a, da)
        return total

    evaluate = __call__

    def __repr__(self) -> str:
        if not self._terms:
            return "BiPoly(0)"
        parts = []
        for dx, da in sorted(self._terms, reverse=True):
            c = self._terms[(dx, da)]
            mono = "*".join(
                s for s in (_power("x", dx), _power("a", da)) if s
            )
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return "BiPoly(" + " + ".join(parts) + ")"


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def odd_part_in_x(p: BiPoly) -> BiPoly:
    """Terms of ``p`` whose ``x``-degree is odd."""
    return BiPoly._raw({m: c for m, c in p.terms.items() if m[0] % 2 == 1})


def negate_x(p: BiPoly) -> BiPoly:
    """``p(-x, a)``, done by flipping signs of odd-degree terms (no re-expansion)."""
    return BiPoly._raw(
        {m: (-c if m[0] % 2 else c) for m, c in p.terms.items()}
    )


def quintic_bases() -> tuple[BiPoly, BiPoly]:
    """The two quadratic forms ``x^2 + 2ax - 2a^2`` and ``i x^2 - 2ax + 2i a^2``."""
    x, a = BiPoly.x(), BiPoly.a()
    i = GaussianInt(0, 1)
    first = x * x + 2 * a * x - 2 * a * a
    second = i * x * x - 2 * a * x + GaussianInt(0, 2) * a * a
    return first, second


def build_g(
    bases: tuple[BiPoly, BiPoly] | None = None,
    exponent: int = QUINTIC_EXPONENT,
) -> BiPoly:
    """Fully expanded ``first**exponent + second**exponent``.

    ``bases`` defaults to :func:`quintic_bases`; overriding it is how the
    tests inject a corrupted form and confirm the evenness check notices.
    """
    first, second = bases if bases is not None else quintic_bases()
    return first**exponent + second**exponent


def verify_param_identity(a: int, x: int, exponent: int = QUINTIC_EXPONENT) -> bool:
    """Check the evenness identity numerically at one integer point.

    Evaluates both sides directly in Gaussian integers, without going
    through :class:`BiPoly`.
    """
    i = GaussianInt(0, 1)
    x2, a2, ax = x * x, a * a, a * x

    def side(s: int) -> GaussianInt:
        p = GaussianInt(x2 + 2 * s * ax - 2 * a2)
        q = i * x2 - 2 * s * ax + i * (2 * a2)
        return ring_pow(p, exponent) + ring_pow(q, exponent)

    return side(+1) == side(-1)
