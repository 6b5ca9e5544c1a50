"""Recognizing and enumerating ideals among canonical modules.

A full-rank module is an ideal exactly when multiplying its three basis
generators by alpha and by theta lands back inside it.  That closure
condition unwinds, through the canonical sextuple, into sixteen integer
divisibility tests; is_ideal runs those, and oracle_is_ideal checks the
closure property directly by membership, so the two routes confirm each
other from independent directions.

Here pm is the unit sign from the field context and g2 = b*e - c*d.
"""

from __future__ import annotations

from math import gcd

from .canonical import IdealForm, canonicalize, member
from .context import FieldContext
from .elements import FieldElement
from .errors import NotPrimitive, ZeroElement


def is_ideal(form: IdealForm) -> bool:
    """The sixteen divisibility tests, short-circuited in order."""
    ctx = form.ctx
    a, b, c, d, e, f = form.sextuple()
    k2 = ctx.k * ctx.k
    sk = ctx.sigma * ctx.k
    pm = ctx.sign
    p, q, r, s, t = ctx.p, ctx.q, ctx.r, ctx.s, ctx.t
    g2 = b * e - c * d
    cf = c * f
    acf = a * c * f
    return (
        a % c == 0
        and b % c == 0
        and a % f == 0
        and (sk * c) % f == 0
        and (sk * e) % f == 0
        and (b + pm * k2 * c) % f == 0
        and (d + pm * k2 * e) % f == 0
        and (a * e) % cf == 0
        and g2 % cf == 0
        and (b * e + pm * k2 * c * e) % cf == 0
        and (d * f + q * f * f - sk * e * e - pm * 2 * k2 * e * f) % cf == 0
        and (q * e * f + s * f * f - d * e - t * e * f - pm * k2 * e * e) % cf == 0
        and ((k2 * c * c + b * b) * f - pm * k2 * b * c * f - sk * c * g2) % acf == 0
        and ((p * c - q * b) * c * f + (b + pm * k2 * c) * g2) % acf == 0
        and ((p * c * f - k2 * c * e - b * d - q * b * f) * f
             + pm * k2 * f * (2 * b * e - c * d) + sk * e * g2) % acf == 0
        and ((p * c * e - r * k2 * c * f - q * b * e - s * b * f) * f
             + (d + t * f + pm * k2 * e) * g2) % acf == 0
    )


def oracle_is_ideal(ctx: FieldContext, form: IdealForm) -> bool:
    """Closure check: alpha*M and theta*M stay inside M.

    Independent of is_ideal's divisibility route; used to cross-examine
    it.
    """
    alpha = FieldElement(ctx, 0, 1, 0)
    theta = FieldElement(ctx, 0, 0, 1)
    for gen in form.generators():
        if not (member(form, alpha * gen) and member(form, theta * gen)):
            return False
    return True


def divisors(n: int) -> list[int]:
    """Positive divisors of n > 0, ascending."""
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def enumerate_primitive_ideals(ctx: FieldContext, a: int) -> list[IdealForm]:
    """All primitive ideals whose least rational integer is a.

    The loops only walk sextuples already passing the cheap membership
    of b, d, e in the right residue classes; is_ideal then decides.
    Sorted by (a, c, f, b, d, e).
    """
    if a < 1:
        raise ValueError(f"length must be positive, got {a}")
    sk = ctx.sigma * ctx.k
    k2 = ctx.k * ctx.k
    pm = ctx.sign
    out = []
    for c in divisors(a):
        # f | a and f | sigma*k for primitive ideals
        for f in divisors(gcd(a, sk)):
            for b in range(0, a, c):
                if (b + pm * k2 * c) % f:
                    continue
                for e in range(c):
                    if (sk * e) % f:
                        continue
                    d0 = (-pm * k2 * e) % f
                    for d in range(d0, a, f):
                        form = IdealForm(ctx, a, b, c, d, e, f)
                        if gcd(a, b, c, d, e, f) == 1 and is_ideal(form):
                            out.append(form)
    out.sort(key=lambda fm: (fm.a, fm.c, fm.f, fm.b, fm.d, fm.e))
    return out


def principal_ideal(ctx: FieldContext, gen: FieldElement) -> IdealForm:
    """Canonical form of the module gen * O; gen must be integral."""
    if gen.is_zero():
        raise ZeroElement("principal ideal of 0")
    if not gen.is_integral():
        raise ValueError(f"generator must be integral, got {gen}")
    alpha = FieldElement(ctx, 0, 1, 0)
    theta = FieldElement(ctx, 0, 0, 1)
    return canonicalize(ctx, [gen, gen * alpha, gen * theta])


def primitive_ideal_or_raise(form: IdealForm) -> IdealForm:
    from .canonical import is_primitive

    if not is_primitive(form):
        raise NotPrimitive(f"{form} has content > 1")
    return form
