import dataclasses

import pytest

from quintic_nearmiss.recurrence import f_rec
from quintic_nearmiss.rings import GaussianInt, ring_pow
from quintic_nearmiss.solutions import (
    NotDivisible,
    SolutionRecord,
    abc_closed,
    abcd_from_f,
    check_d_collapse,
    raw_triples,
    scale,
    solution,
    solutions,
    verify_quintic,
    verify_unscaled,
)
from quintic_nearmiss.sympoly import build_g

G = GaussianInt
I = G(0, 1)


@pytest.mark.parametrize(
    "n,expected",
    [
        (0, (G(1), I, I, 1)),
        (1, (G(6), G(-4, 6), G(4, 6), -2)),
        (2, (G(52), G(-24, 44), G(24, 44), 4)),
    ],
)
def test_abcd_small(n, expected):
    assert abcd_from_f(n) == expected


def test_abc_closed_small():
    assert abc_closed(0)[0] == G(1)
    assert abc_closed(1)[0] == G(6)


def test_closed_forms_match_recurrence_path():
    for n in range(101):
        assert abc_closed(n) == abcd_from_f(n)[:3], n


def test_unscaled_identity_is_g_at_fibonacci_point():
    g = build_g()
    for n in range(8):
        x, a = f_rec(n + 1), f_rec(n)
        assert g(x, a) == g(-x, a)
        assert verify_unscaled(n)


@pytest.mark.parametrize("n,d", [(0, 1), (1, -2), (3, -8)])
def test_d_collapse_examples(n, d):
    assert abcd_from_f(n)[3] == d
    assert check_d_collapse(n)


@pytest.mark.parametrize(
    "n,a,b,c,sign",
    [
        (1, G(3), G(-2, 3), G(2, 3), -1),
        (2, G(13), G(-6, 11), G(6, 11), 1),
        (3, G(47), G(-24, 41), G(24, 41), -1),
    ],
)
def test_scaled_examples(n, a, b, c, sign):
    big_a, big_b, big_c, _ = abcd_from_f(n)
    rec = scale(n, big_a, big_b, big_c)
    assert rec == SolutionRecord(n, a, b, c, sign)
    assert verify_quintic(rec)
    # independent restatement of the identity
    assert ring_pow(a, 5) + ring_pow(b, 5) == ring_pow(c, 5) + sign


def test_scale_rejects_non_divisible():
    with pytest.raises(NotDivisible) as info:
        scale(2, G(52), G(-24, 44), G(25, 44))
    assert info.value.component == "Re(C)"
    assert info.value.residue == 1


def test_verify_quintic_small():
    assert verify_quintic(SolutionRecord(0, G(1), I, I, 1))
    assert verify_quintic(solution(1))
    assert not verify_quintic(dataclasses.replace(solution(1), a=G(4)))


def test_family_invariants():
    for rec in solutions(201):
        n = rec.n
        assert rec.sign == (-1) ** n
        assert rec.a.im == 0
        assert rec.c == -rec.b.conjugate()
        assert rec.b.re == -rec.c.re and rec.b.im == rec.c.im
        assert verify_quintic(rec), n
        assert check_d_collapse(n), n


def test_stream_matches_pointwise():
    assert list(solutions(5, start=7)) == [solution(n) for n in range(7, 12)]
    assert list(raw_triples(3, start=4)) == [abcd_from_f(n)[:3] for n in range(4, 7)]


def test_order_three_recurrence_on_scaled_terms():
    recs = list(solutions(40))
    for n in range(3, 40):
        for part in (
            lambda r: r.a.re,
            lambda r: r.b.re,
            lambda r: r.b.im,
            lambda r: r.c.re,
        ):
            t = [part(recs[n - k]) for k in range(4)]
            assert t[0] == 3 * t[1] + 3 * t[2] - t[3]
