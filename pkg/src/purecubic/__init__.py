"""Exact arithmetic for pure cubic fields Q(cbrt(m)).

Canonical module generators, the ideal membership test, the finite set
of reduced ideals, and the chain of minimal elements whose period gives
the fundamental unit.  All real comparisons are certified.
"""

from .errors import (
    Error,
    InvalidGenerator,
    PerfectCube,
    NotCubeFree,
    RedundantGenerator,
    RankDeficient,
    ZeroElement,
    NotAnIdeal,
    NotPrimitive,
    NotReduced,
    NotMinimalElement,
    GeneratorMismatch,
    IterationCapExceeded,
    PrecisionExhausted,
)
from .context import FieldContext, build_context, refine_alpha, validate_and_factor
from .exactreal import (
    Ordering,
    QAlpha,
    Real,
    SqrtForm,
    compare,
    certified_floor,
    certified_ceil,
    decimal_str,
)
from .elements import (
    FieldElement,
    RadicalCoords,
    element,
    element_sign,
    from_qalpha,
    from_radical_coords,
    invert,
    norm_exact,
    one,
    power,
    radical_coords,
    shadow_exact,
    shadow_real,
    val,
)
from .canonical import (
    IdealForm,
    canonicalize,
    canonicalize_fractional,
    is_primitive,
    length,
    member,
    norm,
    primitive_part,
)
from .ideals import (
    enumerate_primitive_ideals,
    is_ideal,
    oracle_is_ideal,
    principal_ideal,
    primitive_ideal_or_raise,
)
from .reduced import (
    Region,
    enumerate_reduced,
    is_reduced,
    max_reduced_length,
    minkowski_prune,
    module_points_in_region,
    oracle_is_reduced,
    region,
    region_contains,
)
from .sequences import (
    SequenceResult,
    SequenceState,
    chain_states,
    corner_search,
    detect_period,
    ideal_from_minimal,
    initial_state,
    minimal_from_ideal,
    next_minimal,
    norm_sequence,
)

__version__ = "0.1.0"
