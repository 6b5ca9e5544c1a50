"""The chain of minimal elements and the fundamental unit.

Start from 1.  At each step, shrink the shadow bound to the current
element's shadow and ask for the integral element of least positive
embedding value whose shadow beats that bound.  Values ratchet up,
shadows ratchet down, norms stay bounded, and after finitely many steps
the norm returns to 1: that element is the fundamental unit, and the
whole chain repeats from there, scaled by the unit.

Lattice-point counting bounds each step's search: a region with value
bound above 6*sqrt(3)*h*k / (pi * sigma * shadow_bound) always traps a
nonzero point, so the next element's value never exceeds that, and the
search box is finite.  The scan shrinks its own roof as better
candidates arrive, since a rival must beat the best value seen.

Minimal elements of the chain and reduced principal ideals are two
views of one finite set; ideal_from_minimal and minimal_from_ideal
convert between them and invert each other.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .canonical import IdealForm, canonicalize_fractional, is_primitive, length
from .context import FieldContext
from .elements import (
    FieldElement,
    as_qalpha,
    element,
    invert,
    norm_exact,
    one,
    shadow_exact,
    val,
)
from .errors import (
    GeneratorMismatch,
    IterationCapExceeded,
    NotMinimalElement,
    NotReduced,
    ZeroElement,
)
from .exactreal import QAlpha, Real, certified_floor, int_sign, scaled_int_coeffs, sqrt_upper
from .ideals import principal_ideal
from .reduced import _BOX_PREC, _C_ZSPREAD, _x_cover_range, _y_cover_range, is_reduced

DEFAULT_ITERATION_CAP = 10**6

# rational over-estimate of 6*sqrt(3)/pi, the value-bound constant
_C_VALUE_BOUND = Fraction(331, 100)


@dataclass(frozen=True)
class SequenceState:
    """One link of the chain: the element, its exact measures, its norm."""

    ctx: FieldContext
    index: int
    current: FieldElement
    value_q: QAlpha
    shadow_q: QAlpha
    norm: int

    def value(self) -> Real:
        return Real.from_qalpha(self.value_q)

    def shadow(self) -> Real:
        return Real.from_qalpha(self.shadow_q)


@dataclass(frozen=True)
class SequenceResult:
    """detect_period's findings.

    minimal_elements lists the chain members with value in [1, unit's
    value); norm_period their norms, starting with 1.  states keeps the
    full computed chain including the unit's own state.
    """

    ctx: FieldContext
    period: int
    fundamental_unit: FieldElement
    minimal_elements: list[FieldElement]
    norm_period: list[int]
    states: list[SequenceState]
    verified_shifts: int


def _state_from_coords(ctx: FieldContext, index: int, x: int, y: int, z: int) -> SequenceState:
    ks = ctx.k * ctx.sigma
    u = ctx.k * (ctx.sigma * x + z * ctx.k)
    v = ctx.k * (ctx.sigma * y + ctx.sign * z * ctx.k)
    vq = QAlpha(ctx, Fraction(u, ks), Fraction(v, ks), Fraction(z, ks))
    ks2 = ks * ks
    sq = QAlpha(ctx,
                Fraction(u * u - ctx.m * z * v, ks2),
                Fraction(ctx.m * z * z - u * v, ks2),
                Fraction(v * v - u * z, ks2))
    n = norm_exact(element(ctx, x, y, z))
    assert n.denominator == 1 and n > 0
    return SequenceState(ctx, index, element(ctx, x, y, z), vq, sq, int(n))


def initial_state(ctx: FieldContext) -> SequenceState:
    o = one(ctx)
    return SequenceState(ctx, 0, o, as_qalpha(o), shadow_exact(o), 1)


def _positive_value_form(ctx: FieldContext, el: FieldElement) -> FieldElement:
    s = as_qalpha(el).sign()
    if s == 0:
        raise ZeroElement("zero in minimal search")
    return el if s > 0 else -el


def next_minimal(state: SequenceState) -> SequenceState:
    """The element of least positive value with shadow below the
    current one.

    Scans a finite box guaranteed (by volume) to contain at least one
    candidate.  Candidate filtering and the argmin run on
    denominator-free integer coefficient triples, so each test is a few
    big-integer multiplies; the z roof drops as the best value falls.
    """
    ctx = state.ctx
    sigma, k, m = ctx.sigma, ctx.k, ctx.m
    ks = k * sigma
    bound = state.shadow_q

    prec = _BOX_PREC
    while True:
        b_lo = bound.bounds(prec)[0]
        if b_lo > 0:
            break
        prec *= 2
    # above this value a point of smaller shadow must exist
    vcap = _C_VALUE_BOUND * ctx.h * ctx.k / (ctx.sigma * b_lo)
    sqb_hi = sqrt_upper(bound.bounds(_BOX_PREC)[1], _BOX_PREC)
    db, ib0, ib1, ib2 = scaled_int_coeffs(bound, ks * ks)
    al_lo, al_hi = ctx.alpha_bounds(_BOX_PREC)
    ah_lo, ah_hi = ctx.alpha_hat_bounds(_BOX_PREC)

    best: tuple[int, int, int] | None = None
    best_coords: tuple[int, int, int] | None = None
    zspread = _C_ZSPREAD * sqb_hi
    # 3*alpha_hat*|ztilde| <= |value| + |U| + |V| inside the region
    zmax = floor(sigma * (vcap + zspread) / (3 * ah_lo))
    z = 0
    while z <= zmax:
        y_lo, y_hi = _y_cover_range(ctx, z, sqb_hi)
        if y_lo > y_hi:
            z += 1
            continue
        x_lo, x_hi = _x_cover_range(ctx, z, sqb_hi)
        for y in range(y_lo, y_hi + 1):
            for x in range(ceil(x_lo), floor(x_hi) + 1):
                if not (x or y or z):
                    continue
                u = k * (sigma * x + z * k)
                v = k * (sigma * y + ctx.sign * z * k)
                s0 = u * u - m * z * v
                s1 = m * z * z - u * v
                s2 = v * v - u * z
                if int_sign(ctx, ib0 - db * s0, ib1 - db * s1,
                            ib2 - db * s2) <= 0:
                    continue
                if int_sign(ctx, u, v, z) > 0:
                    cand, coords = (u, v, z), (x, y, z)
                else:
                    cand, coords = (-u, -v, -z), (-x, -y, -z)
                if best is not None:
                    d = int_sign(ctx, best[0] - cand[0], best[1] - cand[1],
                                 best[2] - cand[2])
                    if d < 0:
                        continue
                    if d == 0:
                        if coords == best_coords:
                            continue  # mirror met twice on the z = 0 plane
                        # distinct field elements cannot share a value;
                        # keep the scan deterministic and flag loudly
                        warnings.warn(
                            f"value tie between {best_coords} and {coords} "
                            f"at step {state.index + 1} (m={m})")
                        cz, cy, cx = coords[2], coords[1], coords[0]
                        bz, by, bx = (best_coords[2], best_coords[1],
                                      best_coords[0])
                        if (cz, cy, cx) >= (bz, by, bx):
                            continue
                best, best_coords = cand, coords
                # any rival now has value below this upper bound
                v_hi = Fraction(
                    best[0]
                    + best[1] * (al_hi if best[1] >= 0 else al_lo)
                    + best[2] * k * (ah_hi if best[2] >= 0 else ah_lo),
                ) / ks
                zmax = min(zmax, floor(sigma * (v_hi + zspread) / (3 * ah_lo)))
        z += 1
    if best is None:
        raise AssertionError(
            f"empty search region at step {state.index + 1} for m={m}")
    return _state_from_coords(ctx, state.index + 1, *best_coords)


def chain_states(ctx: FieldContext, steps: int) -> list[SequenceState]:
    """States 0..steps of the chain."""
    st = initial_state(ctx)
    out = [st]
    for _ in range(steps):
        st = next_minimal(st)
        out.append(st)
    return out


def norm_sequence(ctx: FieldContext, count: int) -> list[int]:
    """The first count norms of the chain, starting with norm 1."""
    return [st.norm for st in chain_states(ctx, count - 1)]


def detect_period(ctx: FieldContext, iteration_cap: int | None = None,
                  verify_shifts: bool = True) -> SequenceResult:
    """Iterate to the first return of norm 1; that element is the
    fundamental unit.

    With verify_shifts, continues one full extra period and checks
    element-by-element that the chain repeats scaled by the unit.
    """
    cap = DEFAULT_ITERATION_CAP if iteration_cap is None else iteration_cap
    st = initial_state(ctx)
    chain = [st]
    while True:
        if st.index >= cap:
            raise IterationCapExceeded(
                f"no unit within {cap} steps for m={ctx.m}")
        st = next_minimal(st)
        chain.append(st)
        if st.norm == 1:
            break
    period = st.index
    unit = st.current
    verified = 0
    if verify_shifts:
        for i in range(1, period + 1):
            st = next_minimal(st)
            expect = unit * chain[i].current
            if st.current != expect:
                raise NotMinimalElement(
                    f"chain does not repeat at step {period + i}: "
                    f"got {st.current}, expected {expect}")
            verified += 1
    return SequenceResult(ctx, period, unit,
                          [c.current for c in chain[:period]],
                          [c.norm for c in chain[:period]],
                          chain, verified)


def ideal_from_minimal(ctx: FieldContext, gamma: FieldElement,
                       chain: SequenceResult | None = None) -> IdealForm:
    """The primitive ideal whose every element is gamma times an
    integer row: L/gamma * O for the least workable integer L.

    For a minimal gamma the result is reduced, L is its length, and
    minimal_from_ideal inverts the map.  Pass a chain to insist gamma
    appear among its minimal elements.
    """
    if gamma.is_zero():
        raise ZeroElement("no ideal from 0")
    if chain is not None and gamma not in chain.minimal_elements:
        raise NotMinimalElement(f"{gamma} not among the chain's minimal elements")
    g_inv = invert(gamma)
    alpha = element(ctx, 0, 1, 0)
    theta = element(ctx, 0, 0, 1)
    triples = [e.coords() for e in (g_inv, g_inv * alpha, g_inv * theta)]
    scale, form = canonicalize_fractional(ctx, triples)
    ell = 1 / scale
    if ell.denominator != 1:
        # the scaled module keeps an integer content, so no integer
        # multiple of 1/gamma * O is primitive; gamma is not minimal
        raise NotMinimalElement(
            f"{gamma} cogenerates an imprimitive module (content {ell.denominator})")
    assert int(ell) == length(form), f"scale {ell} vs length {length(form)}"
    return form


_UNIT_CACHE: dict[int, FieldElement] = {}


def _fundamental_unit(ctx: FieldContext) -> FieldElement:
    unit = _UNIT_CACHE.get(ctx.m)
    if unit is None:
        unit = detect_period(ctx, verify_shifts=False).fundamental_unit
        _UNIT_CACHE[ctx.m] = unit
    return unit


def minimal_from_ideal(ctx: FieldContext, form: IdealForm,
                       generator: FieldElement,
                       unit: FieldElement | None = None) -> FieldElement:
    """The minimal element gamma with ideal_from_minimal(gamma) giving
    this ideal and value(gamma) in [1, unit's value).

    generator must generate the ideal exactly and the ideal must be
    reduced.  Changing the generator by a unit factor changes nothing.
    Without an explicit fundamental unit one is computed and cached.
    """
    if generator.is_zero():
        raise ZeroElement("zero generator")
    if principal_ideal(ctx, generator).sextuple() != form.sextuple():
        raise GeneratorMismatch(f"{generator} does not generate {form}")
    if not is_primitive(form) or not is_reduced(form):
        raise NotReduced(f"{form} is not reduced")
    if unit is None:
        unit = _fundamental_unit(ctx)
    ell = length(form)
    gamma = ell * invert(generator)
    if as_qalpha(gamma).sign() < 0:
        gamma = -gamma
    unit_inv = invert(unit)
    # bracket the value into [1, value(unit))
    while (as_qalpha(gamma) - QAlpha(ctx, 1, 0, 0)).sign() < 0:
        gamma = gamma * unit
    uq = as_qalpha(unit)
    while (as_qalpha(gamma) - uq).sign() >= 0:
        gamma = gamma * unit_inv
    assert gamma.is_integral(), f"bracketed element {gamma} not integral"
    back = ideal_from_minimal(ctx, gamma)
    assert back.sextuple() == form.sextuple(), f"round trip lost {form}"
    return gamma


def corner_candidates(ctx: FieldContext, z: int) -> list[FieldElement]:
    """The four lattice corners hugging the zero-shadow axis at height z.

    The axis pierces height z at x = (alpha_hat - k) z / sigma,
    y = (alpha_hat/alpha - pm k) z / sigma; elements of small shadow
    cluster there.
    """
    x_axis = QAlpha(ctx, Fraction(-ctx.k * z, ctx.sigma), 0,
                    Fraction(z, ctx.sigma * ctx.k))
    y_axis = QAlpha(ctx, Fraction(-ctx.sign * ctx.k * z, ctx.sigma),
                    Fraction(z, ctx.k * ctx.sigma), 0)
    x0 = certified_floor(Real.from_qalpha(x_axis))
    y0 = certified_floor(Real.from_qalpha(y_axis))
    return [element(ctx, x0 + i, y0 + j, z)
            for i in (0, 1) for j in (0, 1)]


def corner_search(ctx: FieldContext, z_max: int) -> list[SequenceState]:
    """Greedy shadow-descent over corner candidates for z = 1..z_max.

    A fast heuristic sweep: accepts any corner whose shadow beats the
    best so far.  Returns the accepted chain (which starts at 1); no
    minimality guarantee, but in practice it finds unit candidates far
    faster than the exhaustive chain.
    """
    st = initial_state(ctx)
    accepted = [st]
    best_shadow = st.shadow_q
    for z in range(1, z_max + 1):
        level = []
        for cand in corner_candidates(ctx, z):
            cand = _positive_value_form(ctx, cand)
            sh = shadow_exact(cand)
            if (best_shadow - sh).sign() > 0:
                level.append((cand, sh))
        # within a level, accept in order of increasing value
        level.sort(key=lambda cs: val(cs[0]).midpoint_float())
        for cand, sh in level:
            if (best_shadow - sh).sign() > 0:
                best_shadow = sh
                x, y, zc = (int(c) for c in cand.coords())
                accepted.append(
                    _state_from_coords(ctx, accepted[-1].index + 1, x, y, zc))
    return accepted
