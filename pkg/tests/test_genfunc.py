from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic_nearmiss.genfunc import (
    RationalGF,
    UniPoly,
    Which,
    ZeroConstantTerm,
    builtin_gf,
    crosscheck,
    gf_coefficients,
    gf_normalize,
    satisfies_recurrence,
)
from quintic_nearmiss.rings import GaussianInt, GaussianRational

G = GaussianInt
I = G(0, 1)
P = UniPoly.of


def ints(coeffs):
    assert all(c.is_gaussian_integer() for c in coeffs)
    return [c.to_gaussian_int() for c in coeffs]


def test_normalize_examples():
    den = P(1, 1) * P(1, -4, 1)
    assert den == P(1, -3, -3, 1)
    gf = RationalGF(P(1, 0, 1), den)
    assert gf_normalize(gf) == gf
    assert gf_normalize(RationalGF(P(1), P(2, 2))) == RationalGF(
        P(Fraction(1, 2)), P(1, 1)
    )
    with pytest.raises(ZeroConstantTerm):
        gf_normalize(RationalGF(P(1), P(0, 1)))


def test_normalize_keeps_series():
    gf = RationalGF(P(3, I), P(G(0, 2), 5, 1))
    assert gf_coefficients(gf, 12) == gf_coefficients(gf_normalize(gf), 12)


def test_geometric_series():
    assert ints(gf_coefficients(RationalGF(P(1), P(1, -1)), 4)) == [1, 1, 1, 1]


def test_scaled_gf_heads():
    assert ints(gf_coefficients(builtin_gf(Which.A_SCALED), 4)) == [1, 3, 13, 47]
    assert ints(gf_coefficients(builtin_gf(Which.B_SCALED), 3)) == [
        I,
        G(-2, 3),
        G(-6, 11),
    ]
    assert ints(gf_coefficients(builtin_gf(Which.A_RAW), 3)) == [1, 6, 52]


def test_builtin_shapes():
    a = builtin_gf(Which.A_SCALED)
    assert a.num == P(1, 0, 1)
    assert a.den == P(1, -3, -3, 1)
    assert builtin_gf(Which.B_SCALED).num[0] == I
    assert builtin_gf(Which.C_SCALED).num[0] == I


def test_b_decomposes_into_real_and_imaginary_series():
    common = P(1, 1) * P(1, -4, 1)
    real = gf_coefficients(RationalGF(P(0, -2), common), 30)
    imag = gf_coefficients(RationalGF(P(1, -1), P(1, -4, 1)), 30)
    b = gf_coefficients(builtin_gf(Which.B_SCALED), 30)
    assert [z.re for z in b] == [r.re for r in real]
    assert [z.im for z in b] == [r.re for r in imag]
    assert all(r.im == 0 for r in real + imag)


@pytest.mark.parametrize(
    "which,count", [(Which.A_SCALED, 4), (Which.C_SCALED, 3), (Which.B_RAW, 50)]
)
def test_crosscheck_examples(which, count):
    assert crosscheck(which, count)


def test_crosscheck_all_hundred():
    assert all(crosscheck(w, 100) for w in Which)


def test_raw_is_scaled_at_2z():
    for comp in "abc":
        raw = ints(gf_coefficients(builtin_gf(Which(comp + "_raw")), 60))
        scaled = ints(gf_coefficients(builtin_gf(Which(comp)), 60))
        assert raw == [2**n * s for n, s in enumerate(scaled)]
        # same statement at the level of rational functions
        sub = builtin_gf(Which(comp)).scale_var(2)
        assert gf_coefficients(sub, 60) == gf_coefficients(builtin_gf(Which(comp + "_raw")), 60)


def test_induced_recurrences():
    a = ints(gf_coefficients(builtin_gf(Which.A_SCALED), 100))
    b = ints(gf_coefficients(builtin_gf(Which.B_SCALED), 100))
    c = ints(gf_coefficients(builtin_gf(Which.C_SCALED), 100))
    for seq in (a, b, c):
        assert satisfies_recurrence(seq, (3, 3, -1), start=3)
    im = [z.im for z in b]
    assert im[:4] == [1, 3, 11, 41]
    assert satisfies_recurrence(im, (4, -1), start=2)
    assert [z.im for z in c] == im
    # the real part of b is not of order 2
    assert not satisfies_recurrence([z.re for z in b], (4, -1), start=2)


small_q = st.fractions(min_value=-20, max_value=20, max_denominator=6)
coeff = st.builds(GaussianRational, small_q, small_q)
nonzero = coeff.filter(bool)


@st.composite
def small_gfs(draw):
    num = draw(st.lists(coeff, max_size=3))
    den = [draw(nonzero)] + draw(st.lists(coeff, max_size=3))
    return RationalGF(UniPoly(tuple(num)), UniPoly(tuple(den)))


@settings(max_examples=100, deadline=None)
@given(small_gfs(), small_gfs())
def test_linearity(f, g):
    n = 10
    lhs = gf_coefficients(f + g, n)
    rhs = [x + y for x, y in zip(gf_coefficients(f, n), gf_coefficients(g, n))]
    assert lhs == rhs


@settings(max_examples=100, deadline=None)
@given(small_gfs())
def test_series_times_denominator_gives_numerator(f):
    n = 12
    series = UniPoly(tuple(gf_coefficients(f, n)))
    product = series * f.den
    for k in range(n):
        assert product[k] == f.num[k]
