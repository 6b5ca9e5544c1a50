"""Reduced ideals: the certified test, an independent oracle, bounds.

A primitive ideal I with least rational integer L is reduced when the
only element beta in I with |value(beta)| < L and shadow(beta) < L^2 is
zero.  Geometrically: the open region between the planes value = +-L
and inside the elliptic cylinder shadow = L^2 contains no nonzero
lattice point of I.

is_reduced walks the finitely many lattice lines that can meet that
region.  For each line it computes the exact x-interval (P, Q) cut out
by the region, locates the last lattice point strictly left of Q, and
asks, with certified arithmetic, whether that point is strictly right
of P.  Boundary contacts are not violations: the region is open.

oracle_is_reduced answers the same question by brute force: a rational
over-cover of the region is scanned and every candidate point gets an
exact membership test.  The two routes share nothing but the integer
sign kernel, so they check each other.

Every ideal with L below min(alpha, alpha_hat/sigma) is reduced, and
none beyond 6*sqrt(3)*m/pi is, which makes the set of reduced ideals
finite and enumerable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .canonical import IdealForm, is_primitive, length
from .context import FieldContext
from .elements import FieldElement, as_qalpha, shadow_exact
from .errors import NotPrimitive
from .exactreal import (
    Ordering,
    QAlpha,
    Real,
    SqrtForm,
    compare,
    certified_ceil,
    certified_floor,
    floor_with_exactness,
    int_sign,
    scaled_int_coeffs,
    sqrt_upper,
)
from .ideals import enumerate_primitive_ideals

# rational over-estimates of 2/sqrt(3) and 4/sqrt(3) for box covers
_C_HALFWIDTH = Fraction(11548, 10000)
_C_ZSPREAD = Fraction(23095, 10000)
_BOX_PREC = 24


@dataclass(frozen=True)
class Region:
    """Open set |value| < val_bound, shadow < shadow_bound."""

    ctx: FieldContext
    val_bound: QAlpha
    shadow_bound: QAlpha


def region(ctx: FieldContext, val_bound, shadow_bound) -> Region:
    if not isinstance(val_bound, QAlpha):
        val_bound = QAlpha(ctx, val_bound, 0, 0)
    if not isinstance(shadow_bound, QAlpha):
        shadow_bound = QAlpha(ctx, shadow_bound, 0, 0)
    return Region(ctx, val_bound, shadow_bound)


def region_contains(reg: Region, el: FieldElement) -> bool:
    """Exact, strict membership."""
    if el.is_zero():
        return reg.val_bound.sign() > 0 and reg.shadow_bound.sign() > 0
    v = as_qalpha(el)
    if (reg.val_bound - v).sign() <= 0:
        return False
    if (reg.val_bound + v).sign() <= 0:
        return False
    return (reg.shadow_bound - shadow_exact(el)).sign() > 0


def _region_cover(reg: Region) -> tuple[Fraction, Fraction]:
    """Rational (A_hi, sqrtB_hi) upper bounds for the region's size."""
    a_hi = reg.val_bound.bounds(_BOX_PREC)[1]
    b_hi = reg.shadow_bound.bounds(_BOX_PREC)[1]
    return a_hi, sqrt_upper(max(b_hi, Fraction(0)), _BOX_PREC)


def _z_cover_max(ctx: FieldContext, a_hi: Fraction, sqb_hi: Fraction) -> int:
    # 3*alpha_hat*|ztilde| < A + (4/sqrt 3)*sqrt(B) inside the region
    ah_lo = ctx.alpha_hat_bounds(_BOX_PREC)[0]
    return floor(ctx.sigma * (a_hi + _C_ZSPREAD * sqb_hi) / (3 * ah_lo))


def _y_cover_range(ctx: FieldContext, z: int, sqb_hi: Fraction) -> tuple[int, int]:
    # alpha*ytilde lies within (2/sqrt 3)*sqrt(B) of alpha_hat*ztilde
    al_lo, al_hi = ctx.alpha_bounds(_BOX_PREC)
    ah_lo, ah_hi = ctx.alpha_hat_bounds(_BOX_PREC)
    zt = Fraction(z, ctx.sigma)
    r = _C_HALFWIDTH * sqb_hi
    n_lo = ah_lo * zt - r
    n_hi = ah_hi * zt + r
    yt_lo = n_lo / (al_hi if n_lo >= 0 else al_lo)
    yt_hi = n_hi / (al_lo if n_hi >= 0 else al_hi)
    shift = Fraction(ctx.sign * ctx.k * z, ctx.sigma)
    return ceil(yt_lo - shift), floor(yt_hi - shift)


def _x_cover_range(ctx: FieldContext, z: int, sqb_hi: Fraction) -> tuple[Fraction, Fraction]:
    # xtilde lies within (2/sqrt 3)*sqrt(B) of alpha_hat*ztilde
    ah_lo, ah_hi = ctx.alpha_hat_bounds(_BOX_PREC)
    zt = Fraction(z, ctx.sigma)
    r = _C_HALFWIDTH * sqb_hi
    shift = Fraction(ctx.k * z, ctx.sigma)
    return ah_lo * zt - r - shift, ah_hi * zt + r - shift


def module_points_in_region(form: IdealForm, reg: Region):
    """All nonzero module points in the region with z >= 0.

    The region is symmetric through the origin, so every member appears
    here up to sign.  Covering boxes are rational and generous; the
    membership test on each candidate is exact, done on denominator-free
    integer coefficients.  Yields elements with z ascending, then y,
    then x.
    """
    ctx = form.ctx
    sigma, k, m = ctx.sigma, ctx.k, ctx.m
    ks = k * sigma
    a_hi, sqb_hi = _region_cover(reg)
    zmax = _z_cover_max(ctx, a_hi, sqb_hi)
    da, ia0, ia1, ia2 = scaled_int_coeffs(reg.val_bound, ks)
    db, ib0, ib1, ib2 = scaled_int_coeffs(reg.shadow_bound, ks * ks)
    for z in range(0, zmax + 1, form.f):
        n3 = z // form.f
        y_lo, y_hi = _y_cover_range(ctx, z, sqb_hi)
        if y_lo > y_hi:
            continue
        x_lo, x_hi = _x_cover_range(ctx, z, sqb_hi)
        # module points on this z have y = e*n3 + c*n2
        e_shift = form.e * n3
        y = e_shift + form.c * ceil((y_lo - e_shift) / Fraction(form.c))
        while y <= y_hi:
            n2 = (y - e_shift) // form.c
            x_base = n2 * form.b + n3 * form.d
            x = x_base + form.a * ceil((x_lo - x_base) / Fraction(form.a))
            while x <= x_hi:
                if x or y or z:
                    u = k * (sigma * x + z * k)
                    v = k * (sigma * y + ctx.sign * z * k)
                    s0 = u * u - m * z * v
                    s1 = m * z * z - u * v
                    s2 = v * v - u * z
                    if (int_sign(ctx, ib0 - db * s0, ib1 - db * s1,
                                 ib2 - db * s2) > 0
                            and int_sign(ctx, ia0 - da * u, ia1 - da * v,
                                         ia2 - da * z) > 0
                            and int_sign(ctx, ia0 + da * u, ia1 + da * v,
                                         ia2 + da * z) > 0):
                        yield FieldElement(ctx, x, y, z)
                x += form.a
            y += form.c
    return


_MAXLEN_CACHE: dict[int, int] = {}


def max_reduced_length(ctx: FieldContext) -> int:
    """Largest length any reduced ideal can have: floor(6*sqrt(3)*m/pi)."""
    cached = _MAXLEN_CACHE.get(ctx.m)
    if cached is None:
        sqrt3 = Real.from_qalpha(QAlpha(ctx, 3, 0, 0)).sqrt()
        cached = certified_floor(6 * ctx.m * sqrt3 / Real.pi())
        _MAXLEN_CACHE[ctx.m] = cached
    return cached


def minkowski_prune(form: IdealForm) -> bool:
    """False when lattice point counting already rules out reduced.

    Survivors (True) still face the full test.  Two certified screens:
    the region's cross-section at z = 0 traps a point of the sublattice
    spanned by the first two generators unless c is large enough, and
    the full region traps an ideal point unless c*f is.
    """
    ctx = form.ctx
    L = length(form)
    alpha = ctx.alpha
    pi = Real.pi()
    sqrt3 = Real.from_qalpha(QAlpha(ctx, 3, 0, 0)).sqrt()
    # 2D: c*36*alpha vs L*(9 + 2*sqrt(3)*pi)
    if compare(36 * form.c * alpha, L * (9 + 2 * sqrt3 * pi)) is Ordering.LESS:
        return False
    # 3D: 6*sqrt(3)*m*c*f vs pi*L^2
    if compare(6 * ctx.m * form.c * form.f * sqrt3, pi * L * L) is Ordering.LESS:
        return False
    return True


def _largest_int_strictly_below(x: Real, cap_bits=None) -> int:
    n, exact = floor_with_exactness(x, cap_bits)
    return n - 1 if exact else n


def is_reduced(form: IdealForm, precision_cap: int | None = None) -> bool:
    """Certified reduction test on the canonical sextuple.

    Walks every lattice line (y, z) that can pierce the region; on each
    line the region cuts an open x-interval (P, Q) with P and Q exact
    u + v*sqrt(w) expressions.  The line's lattice points sit at
    x = S + n*L with S an integer determined by (y, z), so the ideal
    fails to be reduced exactly when the last lattice point strictly
    below Q is also strictly above P.
    """
    if not is_primitive(form):
        raise NotPrimitive(f"{form} has content > 1")
    ctx = form.ctx
    L, b, c, d, e, f = form.sextuple()
    m, k, sigma, pm = ctx.m, ctx.k, ctx.sigma, ctx.sign
    # below min(alpha, alpha_hat/sigma) every primitive ideal is reduced
    if L**3 < m and sigma**3 * L**3 < ctx.h * ctx.h * k:
        return True
    if L > max_reduced_length(ctx):
        return False

    z = 0
    # z*alpha^2 < k*sigma*L keeps the line inside the region's slab
    while int_sign(ctx, k * sigma * L, 0, -z) > 0:
        n3 = z // f
        # y-window endpoints, exact: the cylinder's reach on this z
        u_lo = QAlpha(ctx, Fraction(-pm * k * z, sigma), Fraction(z, k * sigma), 0)
        v_lo = QAlpha(ctx, 0, 0, Fraction(-2 * L, 3 * m))
        ylow = Real.from_sqrtform(SqrtForm(u_lo, v_lo, QAlpha(ctx, 3, 0, 0)))
        a_minus = QAlpha(ctx, sigma * L, 0, Fraction(-z, k))   # sigma L - alpha_hat z
        a_plus = QAlpha(ctx, sigma * L, 0, Fraction(3 * z, k))  # sigma L + 3 alpha_hat z
        scale = Fraction(1, 2 * sigma * m)
        u_hi = a_minus * QAlpha(ctx, 0, 0, scale) + QAlpha(
            ctx, Fraction(-pm * k * z, sigma), 0, 0)
        v_hi = QAlpha(ctx, 0, 0, scale)
        yhigh = Real.from_sqrtform(SqrtForm(u_hi, v_hi, a_minus * a_plus))
        y = certified_ceil(ylow, precision_cap)
        y_top = certified_floor(yhigh, precision_cap)
        # advance into the residue class e*n3 mod c
        y += (e * n3 - y) % c
        while y <= y_top:
            if y == 0 and z == 0:
                y += c
                continue
            n2 = (y - e * n3) // c
            s_int = n2 * b + n3 * d
            # D > 0 iff the line actually enters the cylinder
            a2 = QAlpha(ctx, 0, sigma * y + pm * k * z, Fraction(-z, k))
            dq = QAlpha(ctx, 4 * sigma * sigma * L * L, 0, 0) - 3 * (a2 * a2)
            if dq.sign() <= 0:
                y += c
                continue
            # plane pair: x between (-sigma L - ...) / sigma and (+)
            lin = QAlpha(ctx, Fraction(-k * z, sigma),
                         Fraction(-(sigma * y + pm * k * z), sigma),
                         Fraction(-z, k * sigma))
            p1 = QAlpha(ctx, -L, 0, 0) + lin
            q1 = QAlpha(ctx, L, 0, 0) + lin
            # cylinder pair: u2 +- sqrt(D)/(2 sigma)
            u2 = QAlpha(ctx, Fraction(-k * z, sigma),
                        Fraction(sigma * y + pm * k * z, 2 * sigma),
                        Fraction(z, 2 * sigma * k))
            vq = Fraction(1, 2 * sigma)
            q2 = SqrtForm(u2, QAlpha(ctx, vq, 0, 0), dq)
            p2 = SqrtForm(u2, QAlpha(ctx, -vq, 0, 0), dq)
            # last lattice point strictly below Q = min(q1, q2)
            n_1 = _largest_int_strictly_below(
                Real.from_qalpha((q1 - s_int) / L), precision_cap)
            n_2 = _largest_int_strictly_below(
                (Real.from_sqrtform(q2) - s_int) / L, precision_cap)
            x_cand = s_int + min(n_1, n_2) * L
            # violation iff that point clears both left edges strictly
            if (QAlpha(ctx, x_cand, 0, 0) - p1).sign() > 0:
                if SqrtForm(QAlpha(ctx, x_cand, 0, 0) - u2,
                            QAlpha(ctx, vq, 0, 0), dq).sign() > 0:
                    return False
            y += c
        z += f
    return True


def oracle_is_reduced(ctx: FieldContext, form: IdealForm) -> bool:
    """Reduction by exhaustive scan; shares no logic with is_reduced."""
    L = length(form)
    reg = region(ctx, L, L * L)
    for _ in module_points_in_region(form, reg):
        return False
    return True


def enumerate_reduced(ctx: FieldContext, prune: bool = True) -> list[IdealForm]:
    """Every reduced ideal of the field, shortest first."""
    out = []
    for L in range(1, max_reduced_length(ctx) + 1):
        for form in enumerate_primitive_ideals(ctx, L):
            if prune and not minkowski_prune(form):
                continue
            if is_reduced(form):
                out.append(form)
    return out
