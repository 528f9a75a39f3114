"""The sequence F(n+2) = -2 F(n+1) + 2 F(n), F(0) = 0, F(1) = 1.

Two routes are provided for each quantity: direct iteration of the
recurrence (the ground truth) and evaluation of a closed form in exact
Q(sqrt 3) arithmetic.  The characteristic roots are -1 +/- sqrt(3); their
squares are 2 * (2 -/+ sqrt(3)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .rings import SQRT3, QuadElem, as_integer

__all__ = [
    "FState",
    "Product",
    "f_rec",
    "f_pair",
    "f_closed",
    "product_brute",
    "product_closed",
    "check_eq4",
]

ROOT_PLUS = QuadElem(-1, 1)  # -1 + sqrt(3)
ROOT_MINUS = QuadElem(-1, -1)  # -1 - sqrt(3)
TWO_PLUS = QuadElem(2, 1)  # 2 + sqrt(3)
TWO_MINUS = QuadElem(2, -1)  # 2 - sqrt(3)


@dataclass(frozen=True)
class FState:
    """The pair ``(F(n), F(n+1))``."""

    n: int = 0
    f_n: int = 0
    f_n1: int = 1

    def advance(self) -> FState:
        return FState(self.n + 1, self.f_n1, -2 * self.f_n1 + 2 * self.f_n)


def f_pair(n: int) -> FState:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    state = FState()
    for _ in range(n):
        state = state.advance()
    return state


def f_rec(n: int) -> int:
    """F(n) by iterating the recurrence from the seed."""
    return f_pair(n).f_n


def f_closed(n: int) -> int:
    """F(n) = (sqrt(3)/6) * ((-1+sqrt(3))^n - (-1-sqrt(3))^n)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    value = SQRT3 * Fraction(1, 6) * (ROOT_PLUS**n - ROOT_MINUS**n)
    return as_integer(value)


class Product(enum.Enum):
    SQ_NEXT = "sq_next"  # F(n+1)^2
    CROSS = "cross"  # F(n+1) F(n)
    SKIP = "skip"  # F(n+2) F(n)


def product_brute(n: int, which: Product) -> int:
    s = f_pair(n)
    f_n, f_n1 = s.f_n, s.f_n1
    if which is Product.SQ_NEXT:
        return f_n1 * f_n1
    if which is Product.CROSS:
        return f_n1 * f_n
    if which is Product.SKIP:
        return (-2 * f_n1 + 2 * f_n) * f_n
    raise ValueError(which)


def product_closed(n: int, which: Product) -> int:
    """Closed-form value of one of the quadratic products of F.

    SQ_NEXT: (2^n/6)  ((2+r)^(n+1) + (2-r)^(n+1) + 2(-1)^n)
    CROSS:   (1/12)   ((-1+r)^(2n+1) + (-1-r)^(2n+1) - (-2)^(n+1))
    SKIP:    (2^n/6)  ((2+r)^(n+1) + (2-r)^(n+1) + 4(-1)^(n+1))

    with r = sqrt(3).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    sign = -1 if n % 2 else 1
    if which is Product.CROSS:
        value = Fraction(1, 12) * (
            ROOT_PLUS ** (2 * n + 1) + ROOT_MINUS ** (2 * n + 1) - (-2) ** (n + 1)
        )
        return as_integer(value)
    pair_sum = TWO_PLUS ** (n + 1) + TWO_MINUS ** (n + 1)
    if which is Product.SQ_NEXT:
        tail = 2 * sign
    elif which is Product.SKIP:
        tail = -4 * sign
    else:
        raise ValueError(which)
    return as_integer(Fraction(2**n, 6) * (pair_sum + tail))


def check_eq4(n: int) -> bool:
    """F(n+1)^2 - F(n) F(n+2) == (-2)^n, all terms from iteration."""
    s = f_pair(n)
    f_n2 = -2 * s.f_n1 + 2 * s.f_n
    return s.f_n1 * s.f_n1 - s.f_n * f_n2 == 2**n * (-1) ** n
