"""Reduction test, its brute-force oracle, and the finite reduced lists."""

import pytest

from purecubic.canonical import IdealForm, is_primitive, length
from purecubic.elements import element, shadow_exact, as_qalpha
from purecubic.errors import NotPrimitive
from purecubic.exactreal import QAlpha
from purecubic.ideals import enumerate_primitive_ideals
from purecubic.reduced import (
    enumerate_reduced,
    is_reduced,
    max_reduced_length,
    minkowski_prune,
    module_points_in_region,
    oracle_is_reduced,
    region,
    region_contains,
)

from conftest import FIELD_MS, context_for

# floor(6*sqrt(3)*m/pi) per field, pinned once against certified evaluation
MAX_LENGTH = {2: 6, 3: 9, 5: 16, 6: 19, 7: 23, 10: 33, 17: 56, 19: 62, 28: 92}

# sizes of the full reduced lists
REDUCED_COUNT = {2: 1, 3: 3, 5: 5, 6: 5, 7: 8, 10: 3, 17: 9, 19: 11, 28: 6}


@pytest.mark.parametrize("m", sorted(MAX_LENGTH))
def test_max_reduced_length_frozen(m):
    assert max_reduced_length(context_for(m)) == MAX_LENGTH[m]


def test_whole_ring_always_reduced(any_ctx):
    assert is_reduced(IdealForm(any_ctx, 1, 0, 1, 0, 0, 1))
    assert oracle_is_reduced(any_ctx, IdealForm(any_ctx, 1, 0, 1, 0, 0, 1))


def test_imprimitive_input_rejected(ctx2):
    with pytest.raises(NotPrimitive):
        is_reduced(IdealForm(ctx2, 2, 0, 2, 0, 0, 2))


@pytest.mark.parametrize("m", (2, 10))
def test_reduction_test_agrees_with_oracle_everywhere(m):
    """The central correctness property, at every feasible length."""
    ctx = context_for(m)
    disagreements = []
    for a in range(1, MAX_LENGTH[m] + 1):
        for form in enumerate_primitive_ideals(ctx, a):
            if is_reduced(form) != oracle_is_reduced(ctx, form):
                disagreements.append(form.sextuple())
    assert not disagreements


def test_long_ideals_never_reduced(ctx2):
    # 6*sqrt(3)*2/pi = 6.61..., so length 7 and up is out
    for a in (7, 8, 11):
        for form in enumerate_primitive_ideals(ctx2, a):
            assert not is_reduced(form)
            assert not oracle_is_reduced(ctx2, form)


def test_short_ideals_always_reduced(ctx17):
    # min(alpha, alpha_hat/sigma) = min(2.571, 2.203) for m = 17
    found = 0
    for a in (1, 2):
        for form in enumerate_primitive_ideals(ctx17, a):
            assert is_reduced(form)
            found += 1
    assert found >= 2


@pytest.mark.parametrize("m", sorted(REDUCED_COUNT))
def test_reduced_list_frozen_counts(m):
    ctx = context_for(m)
    forms = enumerate_reduced(ctx)
    assert len(forms) == REDUCED_COUNT[m]
    sextuples = [fm.sextuple() for fm in forms]
    assert (1, 0, 1, 0, 0, 1) in sextuples
    assert len(set(sextuples)) == len(sextuples)
    # deterministic order: by length, then the enumeration key
    def key(s):
        a, b, c, d, e, f = s
        return (a, c, f, b, d, e)
    assert sextuples == sorted(sextuples, key=key)
    for fm in forms:
        assert is_primitive(fm)
        assert length(fm) <= MAX_LENGTH[m]


def test_reduced_list_m2_exactly_the_ring(ctx2):
    assert [fm.sextuple() for fm in enumerate_reduced(ctx2)] \
        == [(1, 0, 1, 0, 0, 1)]


def test_reduced_list_m10_frozen(ctx10):
    got = [fm.sextuple() for fm in enumerate_reduced(ctx10)]
    assert got == [
        (1, 0, 1, 0, 0, 1),
        (2, 0, 2, 1, 1, 1),
        (3, 0, 3, 2, 1, 1),
    ]


def test_prune_never_drops_a_reduced_ideal(any_ctx):
    assert enumerate_reduced(any_ctx, prune=False) \
        == enumerate_reduced(any_ctx, prune=True)


def test_prune_on_corpus(ctx17):
    assert minkowski_prune(IdealForm(ctx17, 1, 0, 1, 0, 0, 1))
    for form in enumerate_reduced(ctx17):
        assert minkowski_prune(form)
    # a thin long module is forced to hold a short vector
    L = MAX_LENGTH[17]
    assert not minkowski_prune(IdealForm(ctx17, L, 0, 1, 0, 0, 1))


def test_lower_bound_inclusion(any_ctx):
    """Primitive ideals below min(alpha, alpha_hat/sigma) are reduced."""
    ctx = any_ctx
    reduced = {fm.sextuple() for fm in enumerate_reduced(ctx)}
    hhk = ctx.h * ctx.h * ctx.k
    a = 1
    while a**3 < ctx.m and ctx.sigma**3 * a**3 < hhk:
        for form in enumerate_primitive_ideals(ctx, a):
            assert form.sextuple() in reduced
        a += 1


# -- regions ----------------------------------------------------------------

def test_region_membership_examples(ctx2):
    reg = region(ctx2, 2, 4)
    assert region_contains(reg, element(ctx2, 0, 0, 0))
    assert region_contains(reg, element(ctx2, 1, 0, 0))
    assert not region_contains(reg, element(ctx2, 2, 0, 0))  # on the wall
    assert not region_contains(reg, element(ctx2, 0, 0, 1))  # value 3.84
    assert region_contains(reg, element(ctx2, -1, 0, 0))


def test_region_scan_matches_direct_membership(ctx10):
    """The covering-box walk finds exactly the points the exact
    predicate accepts, up to the scan's z >= 0 convention."""
    form = IdealForm(ctx10, 3, 2, 1, 0, 0, 1)
    reg = region(ctx10, 4, 16)
    got = set()
    for el in module_points_in_region(form, reg):
        assert region_contains(reg, el)
        coords = (int(el.x), int(el.y), int(el.z))
        assert coords[2] >= 0
        got.add(coords)
    from purecubic.canonical import member
    want = set()
    for x in range(-30, 31):
        for y in range(-30, 31):
            for z in range(0, 31):
                el = element(ctx10, x, y, z)
                if el.is_zero() or not region_contains(reg, el):
                    continue
                if member(form, el):
                    want.add((x, y, z))
    assert got == want


def test_region_scan_excludes_boundary(ctx2):
    # the rationals +-L sit exactly on the value wall of R(L, L^2)
    form = IdealForm(ctx2, 1, 0, 1, 0, 0, 1)
    reg = region(ctx2, 1, 1)
    assert list(module_points_in_region(form, reg)) == []


def test_region_with_algebraic_bounds(ctx2):
    # bounds may themselves be field values: alpha^2 as a shadow cap
    reg = region(ctx2, QAlpha(ctx2, 2, 0, 0), QAlpha(ctx2, 0, 0, 1))
    alpha = element(ctx2, 0, 1, 0)
    assert shadow_exact(alpha) == QAlpha(ctx2, 0, 0, 1)
    assert not region_contains(reg, alpha)  # its own shadow, strictly
    assert region_contains(reg, element(ctx2, 1, 0, 0))
