"""Command line front end.

Text output deliberately mirrors the phrasing of the reference programs
this package was checked against, so results can be diffed; JSON mode
is the stable machine interface.  Output for a fixed configuration is
byte-identical across runs.

Exit codes: 0 success, 1 verification failure, 2 invalid generator m
(or bad usage), 3 precision or iteration cap exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canonical import IdealForm, length, norm as ideal_norm
from .context import FieldContext, build_context, validate_and_factor
from .elements import element, invert, norm_exact, val
from .errors import (
    InvalidGenerator,
    IterationCapExceeded,
    PrecisionExhausted,
)
from .exactreal import decimal_str
from .ideals import enumerate_primitive_ideals, is_ideal, oracle_is_ideal
from .reduced import (
    enumerate_reduced,
    is_reduced,
    max_reduced_length,
    oracle_is_reduced,
)
from .sequences import (
    corner_search,
    detect_period,
    ideal_from_minimal,
    initial_state,
    minimal_from_ideal,
    next_minimal,
)

_ENV_PRECISION = "PURECUBIC_PRECISION_CAP"
_ENV_ITERATION = "PURECUBIC_ITERATION_CAP"

# closure cross-check sweeps canonical sextuples with diagonals up to here
_VERIFY_DIAG_BOUND = 4


def _env_default(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        return fallback


def _header(ctx: FieldContext) -> str:
    return (f"m = {ctx.m} , sigma = {ctx.sigma} , pm = {ctx.sign} , "
            f"k = {ctx.k}")


def _sextuple_str(form: IdealForm) -> str:
    a, b, c, d, e, f = form.sextuple()
    return f"( {a} {b} {c} {d} {e} {f} )"


def _coords(el) -> list[int]:
    return [int(v) for v in el.coords()]


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def cmd_ideals(args) -> int:
    ctx = build_context(args.m)
    if args.length is not None:
        lengths = [args.length]
    else:
        bound = args.all_lengths_up_to
        if bound is None:
            bound = max_reduced_length(ctx)
        lengths = range(1, bound + 1)
    if not args.json:
        _emit(_header(ctx))
    for ln in lengths:
        for form in enumerate_primitive_ideals(ctx, ln):
            if args.json:
                _emit(json.dumps({"m": ctx.m,
                                  "sextuple": list(form.sextuple()),
                                  "norm": ideal_norm(form)}))
            else:
                _emit(f"Primitive Ideal {_sextuple_str(form)}, "
                      f"with N = {ideal_norm(form)}")
    return 0


def cmd_reduced(args) -> int:
    ctx = build_context(args.m)
    bound = max_reduced_length(ctx)
    if not args.json:
        _emit(_header(ctx))
        _emit(f"maxL= {bound}")
    status = 0
    for form in enumerate_reduced(ctx):
        if args.json:
            _emit(json.dumps({"m": ctx.m,
                              "sextuple": list(form.sextuple()),
                              "norm": ideal_norm(form)}))
        else:
            _emit(f"Reduced ideal: {_sextuple_str(form)} "
                  f"has norm N = {ideal_norm(form)}")
    if args.verify:
        mismatches = 0
        checked = 0
        for ln in range(1, bound + 1):
            for form in enumerate_primitive_ideals(ctx, ln):
                checked += 1
                if is_reduced(form, args.precision_cap) != \
                        oracle_is_reduced(ctx, form):
                    mismatches += 1
                    _emit(f"DISAGREEMENT at {_sextuple_str(form)}")
        verdict = "PASS" if mismatches == 0 else "FAIL"
        if args.json:
            _emit(json.dumps({"m": ctx.m, "check": "reduced-oracle",
                              "status": verdict, "checked": checked}))
        else:
            _emit(f"verify reduced-oracle {verdict} ({checked} ideals)")
        if mismatches:
            status = 1
    return status


def _state_line(st, digits: int) -> str:
    x, y, z = _coords(st.current)
    return (f"({x}, {y}, {z}) , Val= {decimal_str(st.value(), digits)} "
            f", Sh= {decimal_str(st.shadow(), digits)} , N= {st.norm}")


def cmd_sequence(args) -> int:
    ctx = build_context(args.m)
    if not args.json:
        _emit(_header(ctx))
    if args.until_period:
        res = detect_period(ctx, iteration_cap=args.iteration_cap,
                            verify_shifts=False)
        for st in res.states:
            if args.json:
                _emit(json.dumps({"n": st.index, "P": _coords(st.current),
                                  "N": st.norm}))
            else:
                _emit(_state_line(st, args.digits))
        unit = _coords(res.fundamental_unit)
        if args.json:
            _emit(json.dumps({"period": res.period, "epsilon0": unit}))
        else:
            _emit(f"period {res.period} , epsilon0 = "
                  f"({unit[0]}, {unit[1]}, {unit[2]})")
        return 0
    st = initial_state(ctx)
    cap = args.iteration_cap
    while True:
        if args.json:
            _emit(json.dumps({"n": st.index, "P": _coords(st.current),
                              "N": st.norm}))
        else:
            _emit(_state_line(st, args.digits))
        if st.index >= cap:
            raise IterationCapExceeded(
                f"no z above {args.max_z} within {cap} steps for m={ctx.m}")
        nxt = next_minimal(st)
        if int(nxt.current.coords()[2]) > args.max_z:
            break
        st = nxt
    return 0


def cmd_unit(args) -> int:
    ctx = build_context(args.m)
    res = detect_period(ctx, iteration_cap=args.iteration_cap,
                        verify_shifts=False)
    x, y, z = _coords(res.fundamental_unit)
    value = decimal_str(val(res.fundamental_unit), args.digits)
    if args.json:
        _emit(json.dumps({"m": ctx.m, "epsilon0": [x, y, z],
                          "value": value, "period": res.period}))
    else:
        _emit(f"m = {ctx.m}: epsilon0 = ({x}, {y}, {z}) , "
              f"value {value} , period {res.period}")
    return 0


def _all_sextuples(ctx: FieldContext, bound: int):
    for a in range(1, bound + 1):
        for c in range(1, bound + 1):
            for f in range(1, bound + 1):
                for b in range(a):
                    for d in range(a):
                        for e in range(c):
                            yield IdealForm(ctx, a, b, c, d, e, f)


def _check_ideal_closure(ctx: FieldContext) -> tuple[bool, int]:
    checked = 0
    for form in _all_sextuples(ctx, _VERIFY_DIAG_BOUND):
        checked += 1
        if is_ideal(form) != oracle_is_ideal(ctx, form):
            return False, checked
    return True, checked


def _check_reduced_oracle(ctx: FieldContext, precision_cap: int) -> tuple[bool, int]:
    checked = 0
    for ln in range(1, max_reduced_length(ctx) + 1):
        for form in enumerate_primitive_ideals(ctx, ln):
            checked += 1
            if is_reduced(form, precision_cap) != oracle_is_reduced(ctx, form):
                return False, checked
    return True, checked


def _check_minimal_chain(ctx: FieldContext, res) -> tuple[bool, int]:
    # the greedy corner sweep must rediscover the exhaustive unit
    unit = tuple(_coords(res.fundamental_unit))
    z_unit = unit[2]
    accepted = corner_search(ctx, z_unit)
    found = any(tuple(_coords(st.current)) == unit and st.norm == 1
                for st in accepted)
    return found, len(accepted)


def _check_roundtrip(ctx: FieldContext, res) -> tuple[bool, int]:
    reduced_set = {f.sextuple() for f in enumerate_reduced(ctx)}
    unit = res.fundamental_unit
    seen = set()
    for gamma in res.minimal_elements:
        form = ideal_from_minimal(ctx, gamma, res)
        if form.sextuple() not in reduced_set:
            return False, len(seen)
        if form.sextuple() in seen:
            return False, len(seen)
        seen.add(form.sextuple())
        eta = length(form) * invert(gamma)
        back = minimal_from_ideal(ctx, form, eta, unit)
        if back != gamma:
            return False, len(seen)
        if minimal_from_ideal(ctx, form, eta * unit, unit) != gamma:
            return False, len(seen)
    return True, len(seen)


def _verify_one(m: int, args) -> tuple[bool, list[str]]:
    ctx = build_context(m)
    lines = []
    ok_all = True
    res = detect_period(ctx, iteration_cap=args.iteration_cap,
                        verify_shifts=True)
    checks = [
        ("ideal-closure", *_check_ideal_closure(ctx), "sextuples"),
        ("reduced-oracle", *_check_reduced_oracle(ctx, args.precision_cap),
         "ideals"),
        ("minimal-chain", *_check_minimal_chain(ctx, res), "corner accepts"),
        ("roundtrip", *_check_roundtrip(ctx, res), "elements"),
    ]
    for name, ok, count, noun in checks:
        ok_all = ok_all and ok
        if args.json:
            lines.append(json.dumps({"m": m, "check": name,
                                     "status": "PASS" if ok else "FAIL",
                                     "checked": count}))
        else:
            lines.append(f"m = {m}: {name} "
                         f"{'PASS' if ok else 'FAIL'} ({count} {noun})")
    return ok_all, lines


def cmd_verify(args) -> int:
    last = args.m if args.m_max is None else args.m_max
    ms = range(args.m, last + 1)
    status = 0
    single = args.m_max is None
    for m in ms:
        try:
            validate_and_factor(m)
        except InvalidGenerator as exc:
            _emit(str(exc))
            if single:
                return 2
            continue
        try:
            ok, lines = _verify_one(m, args)
        except (IterationCapExceeded, PrecisionExhausted):
            raise
        except Exception as exc:  # a failed internal invariant is a FAIL
            ok, lines = False, [f"m = {m}: cross-check FAIL ({exc})"]
        for line in lines:
            _emit(line)
        if not ok:
            status = 1
    return status


def cmd_report(args) -> int:
    from . import report

    last = args.m if args.m_max is None else args.m_max
    ms = []
    for m in range(args.m, last + 1):
        try:
            validate_and_factor(m)
        except InvalidGenerator as exc:
            _emit(str(exc))
            if args.m_max is None:
                return 2
            continue
        ms.append(m)
    paths = report.write_report(ms, args.out_dir, digits=args.digits,
                                iteration_cap=args.iteration_cap)
    for p in paths:
        _emit(f"wrote {p}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purecubic",
        description="Exact reduced-ideal and unit computations in pure "
                    "cubic fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m_range=False):
        p.add_argument("--m", type=int, required=True,
                       help="field generator, the radicand of the cube root")
        if m_range:
            p.add_argument("--m-max", type=int, default=None,
                           help="sweep m up to this value inclusive")
        p.add_argument("--digits", type=int, default=6,
                       help="decimal digits for certified values")
        p.add_argument("--precision-cap", type=int,
                       default=_env_default(_ENV_PRECISION, 1024),
                       help="bit budget for certified comparisons")
        p.add_argument("--iteration-cap", type=int,
                       default=_env_default(_ENV_ITERATION, 10**6),
                       help="step budget for sequence iteration")
        p.add_argument("--json", action="store_true",
                       help="emit JSON records instead of text")

    p = sub.add_parser("ideals", help="list primitive ideals by length")
    common(p)
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--all-lengths-up-to", type=int, default=None)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("reduced", help="list the reduced ideals")
    common(p)
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the search oracle")
    p.set_defaults(func=cmd_reduced)

    p = sub.add_parser("sequence", help="print the minimal-element chain")
    common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--until-period", action="store_true")
    group.add_argument("--max-z", type=int, default=None)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("unit", help="compute the fundamental unit")
    common(p)
    p.set_defaults(func=cmd_unit)

    p = sub.add_parser("verify", help="run the full cross-check suite")
    common(p, m_range=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="write CSV summary and figures")
    common(p, m_range=True)
    p.add_argument("--out-dir", default="reports",
                   help="directory for the CSV and PNG files")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.precision_cap < 64:
        _emit(f"precision cap {args.precision_cap} below the 64-bit floor")
        return 2
    try:
        return args.func(args)
    except InvalidGenerator as exc:
        _emit(str(exc))
        return 2
    except (IterationCapExceeded, PrecisionExhausted) as exc:
        print(str(exc), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
