"""Certified real arithmetic over Q(alpha), alpha = cbrt(m).

Every comparison the library makes bottoms out here, and none of them
trusts floating point.  Three layers:

1. QAlpha: exact elements c0 + c1*alpha + c2*alpha^2 with rational
   coefficients.  Sign is decided by refining the context's dyadic
   enclosure of alpha; a zero is recognized from the coefficients, so
   the refinement loop always terminates.

2. SqrtForm: expressions u + v*sqrt(w) with u, v, w in Q(alpha) and
   w >= 0.  Sign is decided exactly by comparing signs of u and v and,
   when they disagree, squaring: sign(u + v*sqrt(w)) reduces to
   sign(u^2 - v^2*w) in Q(alpha).  This grammar covers every boundary
   that the reduced-ideal test and the sequence search can tie on.

3. Real: a dyadic interval enclosure with on-demand refinement, plus
   the symbolic form above when the expression has one.  compare()
   refines to a configurable bit cap and then falls back to the exact
   symbolic sign, so ties are decided, never guessed.  pi enters only
   through mpmath's interval context and can never tie against an
   algebraic number, so refinement alone settles those comparisons.

Enclosures only ever shrink: each Real caches its best interval and
intersects every new evaluation into it.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import isqrt, lcm

import mpmath

from .errors import PrecisionExhausted, ZeroElement

DEFAULT_PRECISION_CAP = 1 << 10  # bits; past this, symbolic fallback

_ZERO = Fraction(0)
_ONE = Fraction(1)


def int_sign(ctx, c0: int, c1: int, c2: int, prec: int = 32) -> int:
    """Exact sign of c0 + c1*alpha + c2*alpha^2 for integer coefficients.

    Pure integer interval arithmetic against alpha's dyadic enclosure,
    doubling precision until the sign separates.  A true zero forces
    c0 = c1 = c2 = 0 because {1, alpha, alpha^2} is a Q-basis, so the
    loop terminates.
    """
    if c0 == 0 and c1 == 0 and c2 == 0:
        return 0
    while True:
        n = ctx.alpha_shift(prec)
        t = 1 << prec
        lo = hi = c0 * t * t
        if c1 >= 0:
            lo += c1 * n * t
            hi += c1 * (n + 1) * t
        else:
            lo += c1 * (n + 1) * t
            hi += c1 * n * t
        if c2 >= 0:
            lo += c2 * n * n
            hi += c2 * (n + 1) * (n + 1)
        else:
            lo += c2 * (n + 1) * (n + 1)
            hi += c2 * n * n
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2


class QAlpha:
    """Exact element of Q(alpha) in the power basis {1, alpha, alpha^2}."""

    __slots__ = ("ctx", "c0", "c1", "c2")

    def __init__(self, ctx, c0, c1, c2):
        self.ctx = ctx
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)
        self.c2 = Fraction(c2)

    def __repr__(self):
        return f"QAlpha({self.c0}, {self.c1}, {self.c2}; m={self.ctx.m})"

    def __eq__(self, other):
        if not isinstance(other, QAlpha):
            return NotImplemented
        return (self.ctx.m == other.ctx.m and self.c0 == other.c0
                and self.c1 == other.c1 and self.c2 == other.c2)

    def __hash__(self):
        return hash((self.ctx.m, self.c0, self.c1, self.c2))

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1 or self.c2)

    def is_rational(self) -> bool:
        return not (self.c1 or self.c2)

    def __add__(self, other):
        other = self._coerce(other)
        return QAlpha(self.ctx, self.c0 + other.c0, self.c1 + other.c1,
                      self.c2 + other.c2)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QAlpha(self.ctx, -self.c0, -self.c1, -self.c2)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QAlpha(self.ctx, self.c0 * other, self.c1 * other,
                          self.c2 * other)
        m = self.ctx.m
        a0, a1, a2 = self.c0, self.c1, self.c2
        b0, b1, b2 = other.c0, other.c1, other.c2
        return QAlpha(
            self.ctx,
            a0 * b0 + m * (a1 * b2 + a2 * b1),
            a0 * b1 + a1 * b0 + m * a2 * b2,
            a0 * b2 + a1 * b1 + a2 * b0,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return QAlpha(self.ctx, self.c0 / other, self.c1 / other,
                          self.c2 / other)
        return self * other.inverse()

    def norm(self) -> Fraction:
        """Field norm down to Q: the product of the three conjugates."""
        m = self.ctx.m
        a, b, c = self.c0, self.c1, self.c2
        return a**3 + m * b**3 + m * m * c**3 - 3 * m * a * b * c

    def inverse(self) -> "QAlpha":
        n = self.norm()
        if n == 0:
            raise ZeroElement("inverse of 0 in Q(alpha)")
        m = self.ctx.m
        a, b, c = self.c0, self.c1, self.c2
        return QAlpha(self.ctx, (a * a - m * b * c) / n,
                      (m * c * c - a * b) / n, (b * b - a * c) / n)

    def _coerce(self, other):
        if isinstance(other, QAlpha):
            return other
        return QAlpha(self.ctx, other, 0, 0)

    def sign(self) -> int:
        l = lcm(self.c0.denominator, self.c1.denominator, self.c2.denominator)
        return int_sign(self.ctx,
                        int(self.c0 * l), int(self.c1 * l), int(self.c2 * l))

    def bounds(self, prec: int) -> tuple[Fraction, Fraction]:
        """Exact rational enclosure from alpha's dyadic enclosure."""
        alo, ahi = self.ctx.alpha_bounds(prec)
        lo = hi = self.c0
        for coef, blo, bhi in ((self.c1, alo, ahi),
                               (self.c2, alo * alo, ahi * ahi)):
            if coef >= 0:
                lo += coef * blo
                hi += coef * bhi
            else:
                lo += coef * bhi
                hi += coef * blo
        return lo, hi


def scaled_int_coeffs(q: QAlpha, mult: int) -> tuple[int, int, int, int]:
    """(d, i0, i1, i2) with q*mult*d = i0 + i1*alpha + i2*alpha^2, all
    integers and d > 0.

    Lets hot loops trade one up-front denominator clearing for pure
    integer sign tests per candidate.
    """
    f0 = q.c0 * mult
    f1 = q.c1 * mult
    f2 = q.c2 * mult
    d = lcm(f0.denominator, f1.denominator, f2.denominator)
    return d, int(f0 * d), int(f1 * d), int(f2 * d)


class SqrtForm:
    """u + v*sqrt(w) with u, v, w in Q(alpha), w >= 0."""

    __slots__ = ("u", "v", "w")

    def __init__(self, u: QAlpha, v: QAlpha, w: QAlpha):
        if v.is_zero() or w.is_zero():
            v = QAlpha(u.ctx, 0, 0, 0)
            w = QAlpha(u.ctx, 0, 0, 0)
        self.u = u
        self.v = v
        self.w = w

    def __repr__(self):
        return f"SqrtForm({self.u!r} + {self.v!r}*sqrt({self.w!r}))"

    @classmethod
    def from_qalpha(cls, u: QAlpha) -> "SqrtForm":
        zero = QAlpha(u.ctx, 0, 0, 0)
        return cls(u, zero, zero)

    def is_radical_free(self) -> bool:
        return self.v.is_zero()

    def _compatible(self, other: "SqrtForm"):
        """Common radicand, or None if the two cannot be combined."""
        if self.v.is_zero():
            return other.w
        if other.v.is_zero() or self.w == other.w:
            return self.w
        return None

    def add(self, other: "SqrtForm"):
        w = self._compatible(other)
        if w is None:
            return None
        return SqrtForm(self.u + other.u, self.v + other.v, w)

    def sub(self, other: "SqrtForm"):
        return self.add(other.neg())

    def neg(self) -> "SqrtForm":
        return SqrtForm(-self.u, -self.v, self.w)

    def mul(self, other: "SqrtForm"):
        w = self._compatible(other)
        if w is None:
            return None
        return SqrtForm(self.u * other.u + self.v * other.v * w,
                        self.u * other.v + self.v * other.u, w)

    def div(self, other: "SqrtForm"):
        # 1/(u + v*sqrt(w)) = (u - v*sqrt(w)) / (u^2 - v^2 w); the
        # denominator is the radical conjugate's product and can vanish
        # even for a nonzero value when w is a perfect square.
        den = other.u * other.u - other.v * other.v * other.w
        if den.is_zero():
            return None
        inv = SqrtForm((other.u) * den.inverse(), (-other.v) * den.inverse(),
                       other.w)
        return self.mul(inv)

    def sign(self) -> int:
        if self.v.is_zero():
            return self.u.sign()
        sw = self.w.sign()
        if sw < 0:
            raise ValueError("negative radicand in SqrtForm")
        if sw == 0:
            return self.u.sign()
        su = self.u.sign()
        sv = self.v.sign()
        if sv == 0:
            return su
        if su == 0:
            return sv
        if su == sv:
            return su
        t = (self.u * self.u - self.v * self.v * self.w).sign()
        return t if su > 0 else -t

    def bounds(self, prec: int) -> tuple[Fraction, Fraction]:
        ulo, uhi = self.u.bounds(prec)
        if self.v.is_zero():
            return ulo, uhi
        wlo, whi = self.w.bounds(prec)
        rlo = sqrt_lower(max(wlo, _ZERO), prec)
        rhi = sqrt_upper(max(whi, _ZERO), prec)
        vlo, vhi = self.v.bounds(prec)
        lo = min(vlo * rlo, vlo * rhi, vhi * rlo, vhi * rhi)
        hi = max(vlo * rlo, vlo * rhi, vhi * rlo, vhi * rhi)
        return ulo + lo, uhi + hi


def sqrt_lower(x: Fraction, prec: int) -> Fraction:
    """Dyadic lower bound for sqrt(x), x >= 0."""
    if x < 0:
        raise ValueError("sqrt of negative value")
    a, b = x.numerator, x.denominator
    s = 1 << prec
    return Fraction(isqrt(a * b * s * s), b * s)

def sqrt_upper(x: Fraction, prec: int) -> Fraction:
    if x < 0:
        raise ValueError("sqrt of negative value")
    a, b = x.numerator, x.denominator
    s = 1 << prec
    r = isqrt(a * b * s * s)
    if r * r == a * b * s * s:
        return Fraction(r, b * s)
    return Fraction(r + 1, b * s)


_PI_CACHE: dict[int, tuple[Fraction, Fraction]] = {}


def _mpf_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    man = int(man)
    if man == 0:
        return _ZERO
    v = Fraction(man) * (Fraction(2) ** int(exp))
    return -v if sign else v


def pi_bounds(prec: int) -> tuple[Fraction, Fraction]:
    """Certified enclosure of pi via mpmath's interval context."""
    cached = _PI_CACHE.get(prec)
    if cached is None:
        old = mpmath.iv.prec
        try:
            mpmath.iv.prec = prec + 10
            raw_lo, raw_hi = (+mpmath.iv.pi)._mpi_
        finally:
            mpmath.iv.prec = old
        cached = (_mpf_fraction(raw_lo), _mpf_fraction(raw_hi))
        _PI_CACHE[prec] = cached
    return cached


class Real:
    """A real number as a refinable dyadic enclosure.

    `sym` carries the exact u + v*sqrt(w) form when the expression has
    one; arithmetic propagates it whenever the radicands are compatible.
    `rat` tags exact rational values, which embed into any Q(alpha), so
    mixing a bare constant into a symbolic expression keeps it exact.
    """

    __slots__ = ("_fn", "sym", "rat", "_lo", "_hi", "_prec")

    def __init__(self, fn, sym=None, rat=None):
        self._fn = fn
        self.sym = sym
        self.rat = rat
        self._lo = None
        self._hi = None
        self._prec = 0

    # -- constructors ------------------------------------------------

    @classmethod
    def from_fraction(cls, x) -> "Real":
        x = Fraction(x)
        return cls(lambda prec: (x, x), sym=None, rat=x)

    @classmethod
    def from_qalpha(cls, qa: QAlpha) -> "Real":
        rat = qa.c0 if qa.is_rational() else None
        return cls(qa.bounds, sym=SqrtForm.from_qalpha(qa), rat=rat)

    @classmethod
    def from_sqrtform(cls, sf: SqrtForm) -> "Real":
        return cls(sf.bounds, sym=sf)

    @classmethod
    def pi(cls) -> "Real":
        return cls(pi_bounds, sym=None)

    # -- symbolic plumbing --------------------------------------------

    def _sym_in(self, ctx):
        if self.sym is not None:
            return self.sym
        if self.rat is not None and ctx is not None:
            return SqrtForm.from_qalpha(QAlpha(ctx, self.rat, 0, 0))
        return None

    @staticmethod
    def _paired_syms(a: "Real", b: "Real"):
        ctx = None
        if a.sym is not None:
            ctx = a.sym.u.ctx
        elif b.sym is not None:
            ctx = b.sym.u.ctx
        return a._sym_in(ctx), b._sym_in(ctx)

    # -- enclosure management -----------------------------------------

    def bounds(self, prec: int) -> tuple[Fraction, Fraction]:
        """Enclosure at the requested precision; never widens."""
        if self._prec >= prec and self._lo is not None:
            return self._lo, self._hi
        lo, hi = self._fn(prec)
        if self._lo is not None:
            lo = max(lo, self._lo)
            hi = min(hi, self._hi)
        assert lo <= hi, "enclosure refinement produced an empty interval"
        self._lo, self._hi, self._prec = lo, hi, prec
        return lo, hi

    def refine_below(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """Refine until hi - lo <= width."""
        prec = max(self._prec, 32)
        lo, hi = self.bounds(prec)
        while hi - lo > width:
            prec *= 2
            lo, hi = self.bounds(prec)
        return lo, hi

    def midpoint_float(self) -> float:
        lo, hi = self.refine_below(Fraction(1, 1 << 40))
        return float((lo + hi) / 2)

    def __repr__(self):
        if self._lo is None:
            return "Real(<unevaluated>)"
        return f"Real(~{float((self._lo + self._hi) / 2):.6g})"

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Real":
        if isinstance(x, Real):
            return x
        if isinstance(x, QAlpha):
            return Real.from_qalpha(x)
        if isinstance(x, SqrtForm):
            return Real.from_sqrtform(x)
        return Real.from_fraction(x)

    def __add__(self, other):
        other = Real._coerce(other)
        asym, bsym = Real._paired_syms(self, other)
        sym = asym.add(bsym) if asym is not None and bsym is not None else None
        rat = None
        if self.rat is not None and other.rat is not None:
            rat = self.rat + other.rat

        def fn(prec, a=self, b=other):
            alo, ahi = a.bounds(prec)
            blo, bhi = b.bounds(prec)
            return alo + blo, ahi + bhi
        return Real(fn, sym, rat)

    __radd__ = __add__

    def __neg__(self):
        sym = self.sym.neg() if self.sym is not None else None
        rat = -self.rat if self.rat is not None else None

        def fn(prec, a=self):
            lo, hi = a.bounds(prec)
            return -hi, -lo
        return Real(fn, sym, rat)

    def __sub__(self, other):
        return self + (-Real._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Real._coerce(other)
        asym, bsym = Real._paired_syms(self, other)
        sym = asym.mul(bsym) if asym is not None and bsym is not None else None
        rat = None
        if self.rat is not None and other.rat is not None:
            rat = self.rat * other.rat

        def fn(prec, a=self, b=other):
            alo, ahi = a.bounds(prec)
            blo, bhi = b.bounds(prec)
            ps = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
            return min(ps), max(ps)
        return Real(fn, sym, rat)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Real._coerce(other)
        asym, bsym = Real._paired_syms(self, other)
        sym = asym.div(bsym) if asym is not None and bsym is not None else None
        rat = None
        if self.rat is not None and other.rat is not None:
            if other.rat == 0:
                raise ZeroDivisionError
            rat = self.rat / other.rat

        def fn(prec, a=self, b=other):
            p = prec
            blo, bhi = b.bounds(p)
            while blo <= 0 <= bhi:
                p *= 2
                if p > (1 << 24):
                    raise PrecisionExhausted("division by an enclosure of 0")
                blo, bhi = b.bounds(p)
            alo, ahi = a.bounds(p)
            qs = (alo / blo, alo / bhi, ahi / blo, ahi / bhi)
            return min(qs), max(qs)
        return Real(fn, sym, rat)

    def __rtruediv__(self, other):
        return Real._coerce(other) / self

    def sqrt(self) -> "Real":
        sym = None
        rat = None
        if self.rat is not None:
            rn, rd = self.rat.numerator, self.rat.denominator
            sn, sd = isqrt(max(rn, 0)), isqrt(rd)
            if sn * sn == rn and sd * sd == rd:
                rat = Fraction(sn, sd)
        if self.sym is not None and self.sym.is_radical_free():
            ctx = self.sym.u.ctx
            zero = QAlpha(ctx, 0, 0, 0)
            one = QAlpha(ctx, 1, 0, 0)
            sym = SqrtForm(zero, one, self.sym.u)

        def fn(prec, a=self):
            lo, hi = a.bounds(prec)
            return sqrt_lower(max(lo, _ZERO), prec), sqrt_upper(max(hi, _ZERO), prec)
        return Real(fn, sym, rat)


class Ordering(enum.Enum):
    LESS = -1
    EXACT_EQUAL = 0
    GREATER = 1


def compare(lhs, rhs, cap_bits: int | None = None) -> Ordering:
    """Certified three-way comparison.

    Interval refinement up to cap_bits, then the exact symbolic sign.
    Raises PrecisionExhausted only if neither side of a tie admits the
    u + v*sqrt(w) form (which the library's own expressions always do).
    """
    cap = DEFAULT_PRECISION_CAP if cap_bits is None else cap_bits
    a = Real._coerce(lhs)
    b = Real._coerce(rhs)
    prec = 64
    while prec <= cap:
        alo, ahi = a.bounds(prec)
        blo, bhi = b.bounds(prec)
        if ahi < blo:
            return Ordering.LESS
        if bhi < alo:
            return Ordering.GREATER
        if alo == ahi and blo == bhi:
            # both enclosures are points: exact rational values
            return Ordering.EXACT_EQUAL if alo == blo else (
                Ordering.LESS if alo < blo else Ordering.GREATER)
        prec *= 2
    asym, bsym = Real._paired_syms(a, b)
    if asym is not None and bsym is not None:
        d = asym.sub(bsym)
        if d is not None:
            s = d.sign()
            if s < 0:
                return Ordering.LESS
            if s > 0:
                return Ordering.GREATER
            return Ordering.EXACT_EQUAL
    raise PrecisionExhausted(
        f"comparison undecided at {cap} bits and no symbolic form")


def floor_with_exactness(x, cap_bits: int | None = None) -> tuple[int, bool]:
    """(floor(x), x is exactly that integer).

    Refines until the enclosure pins the floor; if the enclosure keeps
    straddling one integer, decides equality against it symbolically.
    """
    cap = DEFAULT_PRECISION_CAP if cap_bits is None else cap_bits
    r = Real._coerce(x)
    prec = 64
    while prec <= cap:
        lo, hi = r.bounds(prec)
        flo = lo.numerator // lo.denominator
        fhi = hi.numerator // hi.denominator
        if flo == fhi:
            # whole enclosure inside [n, n+1); floor settled, exact only
            # if the enclosure is the single point n
            return flo, lo == hi == flo
        prec *= 2
    # enclosure still straddles; at most a handful of integers remain
    lo, hi = r.bounds(cap)
    n = hi.numerator // hi.denominator
    order = compare(r, Fraction(n), cap_bits=cap)
    if order is Ordering.EXACT_EQUAL:
        return n, True
    if order is Ordering.GREATER:
        return n, False
    return n - 1, False


def certified_floor(x, cap_bits: int | None = None) -> int:
    return floor_with_exactness(x, cap_bits)[0]


def certified_ceil(x, cap_bits: int | None = None) -> int:
    return -floor_with_exactness(-Real._coerce(x), cap_bits)[0]


def largest_integer_below(x, cap_bits: int | None = None) -> int:
    """Largest integer strictly less than x."""
    n, exact = floor_with_exactness(x, cap_bits)
    return n - 1 if exact else n


def positive_lower_bound(x: Real) -> Fraction:
    """A positive rational below x; caller guarantees x > 0."""
    prec = 64
    lo, hi = x.bounds(prec)
    while lo <= 0:
        prec *= 2
        lo, hi = x.bounds(prec)
    return lo


def decimal_str(x, digits: int) -> str:
    """Decimal rendering with all printed digits certified up to one
    final-place rounding ulp."""
    r = Real._coerce(x)
    lo, hi = r.refine_below(Fraction(1, 10 ** (digits + 3)))
    mid = (lo + hi) / 2
    scaled = mid * 10 ** digits
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled - n) >= 1:
        n += 1
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return f"{sign}{n}"
    return f"{sign}{n // 10 ** digits}.{n % 10 ** digits:0{digits}d}"
