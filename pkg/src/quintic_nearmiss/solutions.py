"""The Gaussian-integer family a^5 + b^5 = c^5 + (-1)^n.

Substituting ``x = F(n+1)`` and ``a = F(n)`` into the evenness identity gives
``A^5 + B^5 = C^5 + d^5`` with ``d = (-2)^n``.  Every component of ``A, B, C``
is divisible by ``2^n``; dividing out yields the unit-offset family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .recurrence import TWO_MINUS, TWO_PLUS, f_pair
from .rings import BiquadElem, GaussianInt, QuadElem, as_integer, ring_pow
from .sympoly import QUINTIC_EXPONENT

__all__ = [
    "NotDivisible",
    "SolutionRecord",
    "abcd_from_f",
    "raw_triples",
    "abc_closed",
    "check_d_collapse",
    "scale",
    "solution",
    "solutions",
    "verify_quintic",
    "verify_unscaled",
]


class NotDivisible(ArithmeticError):
    """A component that must be divisible by 2^n is not."""

    def __init__(self, n: int, component: str, value: int):
        self.n = n
        self.component = component
        self.value = value
        self.residue = value % (1 << n)
        super().__init__(
            f"n={n}: {component}={value} is not divisible by 2^{n} "
            f"(residue {self.residue})"
        )


@dataclass(frozen=True)
class SolutionRecord:
    n: int
    a: GaussianInt
    b: GaussianInt
    c: GaussianInt
    sign: int

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        return f"({self.a})^5 + ({self.b})^5 = ({self.c})^5 {op} 1"


def _abcd(x: int, a: int) -> tuple[GaussianInt, GaussianInt, GaussianInt, int]:
    xx, xa, aa = x * x, x * a, a * a
    big_a = GaussianInt(xx - 2 * xa - 2 * aa)
    big_b = GaussianInt(2 * xa, xx + 2 * aa)
    big_c = GaussianInt(-2 * xa, xx + 2 * aa)
    d = xx + 2 * xa - 2 * aa
    return big_a, big_b, big_c, d


def abcd_from_f(n: int) -> tuple[GaussianInt, GaussianInt, GaussianInt, int]:
    """``(A, B, C, d)`` from ``x = F(n+1)``, ``a = F(n)``."""
    s = f_pair(n)
    return _abcd(s.f_n1, s.f_n)


def raw_triples(
    count: int, start: int = 0
) -> Iterator[tuple[GaussianInt, GaussianInt, GaussianInt]]:
    """Unscaled ``(A, B, C)`` for ``n = start .. start+count-1``."""
    s = f_pair(start)
    for _ in range(count):
        yield _abcd(s.f_n1, s.f_n)[:3]
        s = s.advance()


def abc_closed(n: int) -> tuple[GaussianInt, GaussianInt, GaussianInt]:
    """``(A, B, C)`` from their closed forms in Q(i, sqrt 3).

    Raises :class:`~quintic_nearmiss.rings.NotIntegral` if any sqrt(3) part
    survives or a component is fractional.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    up, down = TWO_PLUS**n, TWO_MINUS**n  # (2+r)^n, (2-r)^n
    alt = -1 if n % 2 else 1
    pow2 = 2**n

    a_re = Fraction(pow2, 3) * (QuadElem(1, 1) * up + QuadElem(1, -1) * down + alt)
    im_part = Fraction(pow2, 6) * (QuadElem(3, -1) * down + QuadElem(3, 1) * up)
    b_re = Fraction(pow2, 6) * (
        QuadElem(-1, 1) * down - QuadElem(1, 1) * up + 2 * alt
    )
    c_re = Fraction(pow2, 6) * (
        QuadElem(1, 1) * up + QuadElem(1, -1) * down - 2 * alt
    )

    big_a = as_integer(BiquadElem.from_parts(a_re, QuadElem.zero()))
    big_b = as_integer(BiquadElem.from_parts(b_re, im_part))
    big_c = as_integer(BiquadElem.from_parts(c_re, im_part))
    return big_a, big_b, big_c


def check_d_collapse(n: int) -> bool:
    return abcd_from_f(n)[3] == (-2) ** n


def _div_exact(n: int, name: str, value: int) -> int:
    q, r = divmod(value, 1 << n)
    if r:
        raise NotDivisible(n, name, value)
    return q


def scale(
    n: int, big_a: GaussianInt, big_b: GaussianInt, big_c: GaussianInt
) -> SolutionRecord:
    """Divide every component by ``2^n`` (exactly) and attach ``sign = (-1)^n``."""
    parts = {}
    for name, z in (("A", big_a), ("B", big_b), ("C", big_c)):
        parts[name] = GaussianInt(
            _div_exact(n, f"Re({name})", z.re), _div_exact(n, f"Im({name})", z.im)
        )
    return SolutionRecord(n, parts["A"], parts["B"], parts["C"], -1 if n % 2 else 1)


def solution(n: int) -> SolutionRecord:
    big_a, big_b, big_c, _ = abcd_from_f(n)
    return scale(n, big_a, big_b, big_c)


def solutions(count: int, start: int = 0) -> Iterator[SolutionRecord]:
    """Records for ``n = start .. start+count-1``, advancing F incrementally."""
    for n, (big_a, big_b, big_c) in enumerate(raw_triples(count, start), start):
        yield scale(n, big_a, big_b, big_c)


def verify_unscaled(n: int) -> bool:
    """``A^5 + B^5 == C^5 + d^5`` for the unscaled quadruple."""
    big_a, big_b, big_c, d = abcd_from_f(n)
    e = QUINTIC_EXPONENT
    return ring_pow(big_a, e) + ring_pow(big_b, e) == ring_pow(big_c, e) + d**e


def verify_quintic(rec: SolutionRecord) -> bool:
    e = QUINTIC_EXPONENT
    lhs = ring_pow(rec.a, e) + ring_pow(rec.b, e)
    return not (lhs - ring_pow(rec.c, e) - rec.sign)
