"""Canonical triangular form for rank-3 submodules of the integers.

A full-rank module M inside the ring of integers has a unique basis

    {a, b + c*alpha, d + e*alpha + f*theta}

with a, c, f > 0, 0 <= b < a, 0 <= d < a, 0 <= e < c.  The sextuple
(a, b, c, d, e, f) is the canonical form; any two generating sets of
the same module reduce to the same sextuple, so module equality is
sextuple equality.  a is the least positive rational integer in M and
a*c*f is the index [O : M].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .context import FieldContext
from .elements import FieldElement
from .errors import GeneratorMismatch, RankDeficient


@dataclass(frozen=True)
class IdealForm:
    """Canonical sextuple (a, b, c, d, e, f) over {1, alpha, theta}."""

    ctx: FieldContext
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def sextuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def generators(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        ctx = self.ctx
        return (
            FieldElement(ctx, self.a, 0, 0),
            FieldElement(ctx, self.b, self.c, 0),
            FieldElement(ctx, self.d, self.e, self.f),
        )

    def __str__(self):
        return "( {} {} {} {} {} {} )".format(*self.sextuple())


def norm(form: IdealForm) -> int:
    """Module index a*c*f."""
    return form.a * form.c * form.f


def length(form: IdealForm) -> int:
    """Least positive rational integer in the module."""
    return form.a


def is_primitive(form: IdealForm) -> bool:
    """No rational integer > 1 divides the whole module."""
    return gcd(*form.sextuple()) == 1


def primitive_part(form: IdealForm) -> tuple[int, IdealForm]:
    """(content g, form/g): the module is g times a primitive one."""
    g = gcd(*form.sextuple())
    return g, IdealForm(form.ctx, form.a // g, form.b // g, form.c // g,
                        form.d // g, form.e // g, form.f // g)


def _extgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _fold_row(cols: list[list[int]], row: int) -> list[int]:
    """Column-reduce so one column carries the row's gcd, rest carry 0.

    Returns the pivot column (removed from cols); its `row` entry is
    positive.  Raises RankDeficient if the row is identically zero.
    """
    pivot = None
    rest = []
    for col in cols:
        if col[row] == 0:
            rest.append(col)
        elif pivot is None:
            pivot = col
        else:
            g, s, t = _extgcd(pivot[row], col[row])
            u, v = pivot[row] // g, col[row] // g
            merged = [s * pivot[i] + t * col[i] for i in range(3)]
            zeroed = [v * pivot[i] - u * col[i] for i in range(3)]
            pivot = merged
            rest.append(zeroed)
    if pivot is None:
        raise RankDeficient(f"generators span nothing in row {row}")
    if pivot[row] < 0:
        pivot = [-x for x in pivot]
    cols[:] = rest
    return pivot


def canonicalize(ctx: FieldContext, gens) -> IdealForm:
    """Canonical sextuple of the module the generators span.

    Accepts FieldElements or raw integer coordinate triples; all must
    be integral.  Raises RankDeficient unless the span has full rank.
    """
    cols = []
    for g in gens:
        if isinstance(g, FieldElement):
            if g.ctx.m != ctx.m:
                raise GeneratorMismatch(
                    f"generator from Q(cbrt({g.ctx.m})) in Q(cbrt({ctx.m}))")
            if not g.is_integral():
                raise ValueError(f"non-integral generator {g}")
            cols.append([int(g.x), int(g.y), int(g.z)])
        else:
            x, y, z = g
            cols.append([int(x), int(y), int(z)])
    col3 = _fold_row(cols, 2)
    col2 = _fold_row(cols, 1)
    col1 = _fold_row(cols, 0)
    a = col1[0]
    b, c = col2[0], col2[1]
    d, e, f = col3[0], col3[1], col3[2]
    # remainder-normalize above each pivot; e first since it moves d
    q = e // c
    d, e = d - q * b, e - q * c
    d %= a
    b %= a
    return IdealForm(ctx, a, b, c, d, e, f)


def canonicalize_fractional(ctx: FieldContext, triples) -> tuple[Fraction, IdealForm]:
    """(scale, primitive form) with module = scale * form's module.

    Generators may have rational coordinates.
    """
    triples = [tuple(Fraction(v) for v in t) for t in triples]
    den = lcm(*(v.denominator for t in triples for v in t)) if triples else 1
    scaled = [tuple(v * den for v in t) for t in triples]
    raw = canonicalize(ctx, scaled)
    g, prim = primitive_part(raw)
    return Fraction(g, den), prim


def member(form: IdealForm, el: FieldElement) -> bool:
    """Exact membership by back-substitution through the triangle."""
    if not el.is_integral():
        return False
    x, y, z = int(el.x), int(el.y), int(el.z)
    if z % form.f:
        return False
    t3 = z // form.f
    y -= t3 * form.e
    if y % form.c:
        return False
    t2 = y // form.c
    x -= t3 * form.d + t2 * form.b
    return x % form.a == 0
