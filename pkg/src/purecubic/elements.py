"""Field elements and their geometric measures.

Coordinates live over the integral basis {1, alpha, theta}, so integer
triples are exactly the algebraic integers of the field.  The same
element can be rewritten over the radical basis {1, alpha, alpha_hat},
which is where the embedding value, the norm, and the quadratic form
measuring the two complex embeddings all take their simplest shape.

For beta with radical coordinates (x, y, z):

    value(beta)  = x + y*alpha + z*alpha_hat        (real embedding)
    shadow(beta) = |complex embedding of beta|^2
                 = U^2 - U*V + V^2,  U = x - z*alpha_hat,
                                     V = y*alpha - z*alpha_hat
    norm(beta)   = x^3 + h*k^2*y^3 + h^2*k*z^3 - 3*h*k*x*y*z

and norm = value * shadow, so the shadow is the exact price the real
embedding pays for a small norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .context import FieldContext
from .errors import GeneratorMismatch, ZeroElement
from .exactreal import QAlpha, Real


class RadicalCoords(NamedTuple):
    """Coordinates over {1, alpha, alpha_hat}."""

    x: Fraction
    y: Fraction
    z: Fraction


@dataclass(frozen=True)
class FieldElement:
    """x + y*alpha + z*theta with rational coordinates."""

    ctx: FieldContext
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        object.__setattr__(self, "z", Fraction(self.z))

    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def is_integral(self) -> bool:
        return (self.x.denominator == 1 and self.y.denominator == 1
                and self.z.denominator == 1)

    def _check(self, other: "FieldElement"):
        if self.ctx.m != other.ctx.m:
            raise GeneratorMismatch(
                f"elements of Q(cbrt({self.ctx.m})) and Q(cbrt({other.ctx.m}))")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.x + other.x, self.y + other.y,
                            self.z + other.z)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.x - other.x, self.y - other.y,
                            self.z - other.z)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.ctx, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.ctx, self.x * other, self.y * other,
                                self.z * other)
        self._check(other)
        # image of the multiplication-by-self matrix on other's column
        ma, mt = self.ctx.mul_alpha, self.ctx.mul_theta
        v = (other.x, other.y, other.z)
        out = []
        for i in range(3):
            acc = self.x * v[i]
            acc += self.y * (ma[i][0] * v[0] + ma[i][1] * v[1] + ma[i][2] * v[2])
            acc += self.z * (mt[i][0] * v[0] + mt[i][1] * v[1] + mt[i][2] * v[2])
            out.append(acc)
        return FieldElement(self.ctx, *out)

    __rmul__ = __mul__


def element(ctx: FieldContext, x, y, z) -> FieldElement:
    return FieldElement(ctx, Fraction(x), Fraction(y), Fraction(z))


def one(ctx: FieldContext) -> FieldElement:
    return FieldElement(ctx, Fraction(1), Fraction(0), Fraction(0))


def radical_coords(el: FieldElement) -> RadicalCoords:
    """Rewrite over {1, alpha, alpha_hat}."""
    ctx = el.ctx
    zt = Fraction(el.z, ctx.sigma)
    return RadicalCoords(el.x + zt * ctx.k, el.y + ctx.sign * zt * ctx.k, zt)


def from_radical_coords(ctx: FieldContext, rc: RadicalCoords) -> FieldElement:
    z = rc.z * ctx.sigma
    return FieldElement(ctx, rc.x - ctx.k * rc.z, rc.y - ctx.sign * ctx.k * rc.z, z)


def as_qalpha(el: FieldElement) -> QAlpha:
    """Power-basis form; alpha_hat = alpha^2 / k."""
    xt, yt, zt = radical_coords(el)
    return QAlpha(el.ctx, xt, yt, Fraction(zt, el.ctx.k))


def from_qalpha(qa: QAlpha) -> FieldElement:
    ctx = qa.ctx
    zt = qa.c2 * ctx.k
    return from_radical_coords(ctx, RadicalCoords(qa.c0, qa.c1, zt))


def val(el: FieldElement) -> Real:
    """The real embedding, as a certified real."""
    return Real.from_qalpha(as_qalpha(el))


def element_sign(el: FieldElement) -> int:
    return as_qalpha(el).sign()


def norm_exact(el: FieldElement) -> Fraction:
    x, y, z = radical_coords(el)
    h, k = el.ctx.h, el.ctx.k
    return (x**3 + h * k * k * y**3 + h * h * k * z**3
            - 3 * h * k * x * y * z)


def shadow_exact(el: FieldElement) -> QAlpha:
    """|complex embedding|^2, exactly, as an element of Q(alpha).

    With U = x - z*alpha_hat and V = y*alpha - z*alpha_hat (radical
    coordinates), the form is U^2 - U*V + V^2; both U and V lie in
    Q(alpha), so the value is exact.
    """
    if el.is_zero():
        raise ZeroElement("shadow of 0 is undefined (norm / element)")
    ctx = el.ctx
    xt, yt, zt = radical_coords(el)
    zk = Fraction(zt, ctx.k)
    u = QAlpha(ctx, xt, 0, -zk)
    v = QAlpha(ctx, 0, yt, -zk)
    return u * u - u * v + v * v


def shadow_real(el: FieldElement) -> Real:
    return Real.from_qalpha(shadow_exact(el))


def scaled_value_ints(ctx: FieldContext, x: int, y: int, z: int) -> tuple[int, int, int]:
    """Integer triple (u, v, z) with value * k * sigma = u + v*alpha + z*alpha^2.

    Clearing the basis denominators once keeps candidate filtering in
    lattice scans on plain integers.
    """
    k = ctx.k
    return k * (ctx.sigma * x + z * k), k * (ctx.sigma * y + ctx.sign * z * k), z


def scaled_shadow_ints(ctx: FieldContext, u: int, v: int, z: int) -> tuple[int, int, int]:
    """Coefficients of shadow * (k*sigma)^2 over {1, alpha, alpha^2}.

    Takes the scaled value triple from scaled_value_ints.  Expanding
    U^2 - U*V + V^2 with k*sigma*U = u - z*alpha^2 and
    k*sigma*V = v*alpha - z*alpha^2 and reducing by alpha^3 = m gives
    integer coefficients directly.
    """
    m = ctx.m
    return u * u - m * z * v, m * z * z - u * v, v * v - u * z


def invert(el: FieldElement) -> FieldElement:
    if el.is_zero():
        raise ZeroElement("cannot invert 0")
    return from_qalpha(as_qalpha(el).inverse())


def power(el: FieldElement, n: int) -> FieldElement:
    """el**n by binary exponentiation; negative n inverts first."""
    if n < 0:
        el, n = invert(el), -n
    acc = one(el.ctx)
    base = el
    while n:
        if n & 1:
            acc = acc * base
        base = base * base
        n >>= 1
    return acc
