"""Certified comparison kernel: signs, floors, square roots, rendering.

Numeric cross-checks use mpmath at 60 digits, far beyond anything the
kernel's dyadic refinement would conflate.
"""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from purecubic.errors import ZeroElement
from purecubic.exactreal import (
    Ordering,
    QAlpha,
    Real,
    certified_ceil,
    certified_floor,
    compare,
    decimal_str,
    floor_with_exactness,
    int_sign,
    largest_integer_below,
    pi_bounds,
    positive_lower_bound,
    scaled_int_coeffs,
    sqrt_lower,
    sqrt_upper,
)

from conftest import context_for

mpmath.mp.dps = 60

small_rats = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
)


def _mp_alpha(ctx):
    return mpmath.cbrt(ctx.m)


def _mp_eval(ctx, c0, c1, c2):
    a = _mp_alpha(ctx)
    return mpmath.mpf(c0.numerator) / c0.denominator \
        + a * c1.numerator / c1.denominator \
        + a * a * c2.numerator / c2.denominator


# -- integer sign kernel --------------------------------------------------

@given(
    st.sampled_from((2, 3, 5, 7, 10, 17, 28)),
    st.integers(-10**9, 10**9),
    st.integers(-10**9, 10**9),
    st.integers(-10**9, 10**9),
)
def test_int_sign_matches_mpmath(m, c0, c1, c2):
    ctx = context_for(m)
    got = int_sign(ctx, c0, c1, c2)
    a = _mp_alpha(ctx)
    approx = c0 + c1 * a + c2 * a * a
    if got == 0:
        assert (c0, c1, c2) == (0, 0, 0)
    else:
        assert abs(approx) > mpmath.mpf(10) ** -40
        assert got == (1 if approx > 0 else -1)


def test_int_sign_zero_only_at_origin(ctx2):
    assert int_sign(ctx2, 0, 0, 0) == 0
    # alpha is irrational, so no other integer combination vanishes
    assert int_sign(ctx2, -1, 0, 0) == -1
    assert int_sign(ctx2, -2, 0, 1) < 0   # alpha^2 = 1.5874... < 2
    assert int_sign(ctx2, -1, 0, 1) > 0


# -- QAlpha arithmetic ----------------------------------------------------

@given(small_rats, small_rats, small_rats, small_rats, small_rats, small_rats)
def test_qalpha_product_matches_mpmath(a0, a1, a2, b0, b1, b2):
    ctx = context_for(10)
    x = QAlpha(ctx, a0, a1, a2)
    y = QAlpha(ctx, b0, b1, b2)
    z = x * y
    lhs = _mp_eval(ctx, x.c0, x.c1, x.c2) * _mp_eval(ctx, y.c0, y.c1, y.c2)
    rhs = _mp_eval(ctx, z.c0, z.c1, z.c2)
    assert abs(lhs - rhs) < mpmath.mpf(10) ** -30


@given(small_rats, small_rats, small_rats)
def test_qalpha_inverse(a0, a1, a2):
    ctx = context_for(17)
    x = QAlpha(ctx, a0, a1, a2)
    if x.is_zero():
        with pytest.raises(ZeroElement):
            x.inverse()
        return
    assert x * x.inverse() == QAlpha(ctx, 1, 0, 0)


@given(small_rats, small_rats, small_rats, small_rats, small_rats, small_rats)
def test_qalpha_norm_multiplicative(a0, a1, a2, b0, b1, b2):
    ctx = context_for(5)
    x = QAlpha(ctx, a0, a1, a2)
    y = QAlpha(ctx, b0, b1, b2)
    assert (x * y).norm() == x.norm() * y.norm()


@given(small_rats, small_rats, small_rats)
def test_qalpha_sign_matches_mpmath(a0, a1, a2):
    ctx = context_for(7)
    x = QAlpha(ctx, a0, a1, a2)
    approx = _mp_eval(ctx, x.c0, x.c1, x.c2)
    if x.is_zero():
        assert x.sign() == 0
    else:
        assert x.sign() == (1 if approx > 0 else -1)


def test_qalpha_bounds_contain_value(ctx10):
    x = QAlpha(ctx10, Fraction(1, 3), Fraction(-2, 7), Fraction(5, 11))
    approx = _mp_eval(ctx10, x.c0, x.c1, x.c2)
    for prec in (32, 64, 128):
        lo, hi = x.bounds(prec)
        assert mpmath.mpf(lo.numerator) / lo.denominator <= approx
        assert approx <= mpmath.mpf(hi.numerator) / hi.denominator
    lo, hi = x.bounds(256)
    assert hi - lo < Fraction(1, 2**200)


def test_scaled_int_coeffs_roundtrip(ctx10):
    q = QAlpha(ctx10, Fraction(5, 6), Fraction(-7, 4), Fraction(1, 9))
    d, i0, i1, i2 = scaled_int_coeffs(q, 12)
    assert d > 0
    back = QAlpha(ctx10, Fraction(i0, d), Fraction(i1, d), Fraction(i2, d))
    assert back == q * 12


# -- certified comparison -------------------------------------------------

def test_compare_algebraic_identities(ctx2):
    a = ctx2.alpha
    ah = ctx2.alpha_hat
    hk = ctx2.h * ctx2.k
    assert compare(a * ah, Fraction(hk)) is Ordering.EXACT_EQUAL
    assert compare(a * a, ah * ctx2.k) is Ordering.EXACT_EQUAL
    assert compare(a, 1) is Ordering.GREATER
    assert compare(a, Fraction(13, 10)) is Ordering.LESS


def test_compare_rational_identity(ctx10):
    a = ctx10.alpha
    one = Real.from_fraction(1)
    lhs = (one + a) / a
    rhs = one + one / a
    assert compare(lhs, rhs) is Ordering.EXACT_EQUAL


def test_compare_across_scales(ctx17):
    a = ctx17.alpha
    tiny = a * Fraction(1, 10**30)
    assert compare(tiny, 0) is Ordering.GREATER
    assert compare(-tiny, 0) is Ordering.LESS


def test_sqrt_of_square_is_exact(ctx2):
    q = Real.from_fraction(Fraction(9, 4))
    assert compare(q.sqrt(), Fraction(3, 2)) is Ordering.EXACT_EQUAL
    a = ctx2.alpha
    assert compare((a * a).sqrt(), a) is Ordering.EXACT_EQUAL


def test_sqrt_bracketing():
    for x in (Fraction(2), Fraction(3, 7), Fraction(10**6, 17)):
        for prec in (16, 53, 128):
            lo = sqrt_lower(x, prec)
            hi = sqrt_upper(x, prec)
            assert 0 <= lo <= hi
            assert lo * lo <= x <= hi * hi
    assert sqrt_lower(Fraction(0), 16) == 0


def test_pi_bounds_contain_pi():
    # 40-digit window around pi, exact rationals
    win_lo = Fraction(31415926535897932384626433832795028841971, 10**40)
    win_hi = win_lo + Fraction(1, 10**40)
    for prec in (16, 64, 256):
        lo, hi = pi_bounds(prec)
        assert lo < win_hi and win_lo < hi  # both intervals hold pi
        assert hi - lo <= Fraction(1, 2 ** (prec - 4))
    lo, hi = pi_bounds(256)
    assert win_lo <= lo <= hi <= win_hi


# -- floors ---------------------------------------------------------------

def test_floor_of_exact_integer():
    assert floor_with_exactness(Real.from_fraction(-3)) == (-3, True)
    assert floor_with_exactness(Real.from_fraction(5)) == (5, True)
    assert floor_with_exactness(Real.from_fraction(Fraction(7, 2))) == (3, False)
    assert floor_with_exactness(Real.from_fraction(Fraction(-7, 2))) == (-4, False)


def test_floor_of_algebraic_values(ctx2):
    a = ctx2.alpha
    assert floor_with_exactness(a) == (1, False)
    assert floor_with_exactness(a * a) == (1, False)
    assert floor_with_exactness(a + a * a) == (2, False)
    # alpha * alpha_hat is exactly hk = 2
    assert floor_with_exactness(a * ctx2.alpha_hat) == (2, True)


def test_certified_floor_and_ceil(ctx10):
    a = ctx10.alpha  # 2.154...
    assert certified_floor(a) == 2
    assert certified_ceil(a) == 3
    assert certified_floor(-a) == -3
    assert certified_ceil(Real.from_fraction(4)) == 4


def test_largest_integer_below():
    assert largest_integer_below(Real.from_fraction(-3)) == -4
    assert largest_integer_below(Real.from_fraction(Fraction(5, 2))) == 2
    a = context_for(2).alpha
    assert largest_integer_below(a) == 1
    assert largest_integer_below(a * a * a) == 1  # exactly 2


def test_positive_lower_bound(ctx17):
    a = ctx17.alpha
    small = a * Fraction(1, 10**9)
    lb = positive_lower_bound(small)
    assert 0 < lb
    hi = small.bounds(128)[1]
    assert lb <= hi


# -- decimal rendering ----------------------------------------------------

def test_decimal_str_rational():
    assert decimal_str(Fraction(7, 2), 3) == "3.500"
    assert decimal_str(Fraction(-1, 3), 6) == "-0.333333"
    assert decimal_str(Fraction(2), 0) == "2"


def test_decimal_str_matches_mpmath(any_ctx):
    got = decimal_str(any_ctx.alpha, 12)
    want = mpmath.nstr(_mp_alpha(any_ctx), 14, strip_zeros=False)
    # allow one ulp in the final printed digit
    assert abs(mpmath.mpf(got) - mpmath.mpf(want)) <= mpmath.mpf(10) ** -12


def test_decimal_str_theta_value(ctx2):
    # 1 + alpha + alpha_hat for m = 2
    theta = Real.from_fraction(1) + ctx2.alpha + ctx2.alpha_hat
    assert decimal_str(theta, 6) == "3.847322"
