"""Field data for the pure cubic field Q(cbrt(m)).

A valid generator is a cube-free m = h*k^2 with h, k coprime squarefree
and h > k; every pure cubic field has exactly one such generator, since
cbrt(h*k^2) and cbrt(h^2*k) generate the same field.  The ring of
integers has basis {1, alpha, theta} where alpha^3 = m and

    theta = (k + pm*k*alpha + alpha_hat) / sigma,

with alpha_hat = cbrt(h^2*k) = alpha^2/k, sigma = 3 exactly when
m = +-1 (mod 9) and 1 otherwise, and pm = -1 only when m = 8 (mod 9).

The context also owns dyadic enclosures of alpha used by every certified
comparison downstream: alpha_shift(prec) returns the integer n with
n <= alpha * 2^prec < n + 1, computed by an exact integer cube root.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import gmpy2

from .errors import NotCubeFree, PerfectCube, RedundantGenerator


def icbrt(n: int) -> int:
    """Integer cube root: largest r with r^3 <= n."""
    if n < 0:
        raise ValueError("icbrt expects n >= 0")
    return int(gmpy2.iroot(gmpy2.mpz(n), 3)[0])


def _cube_part(m: int) -> tuple[int, int]:
    """Split m as (cube-free part, largest d with d^3 | m)."""
    d = icbrt(m)
    while d > 1:
        if m % (d * d * d) == 0:
            break
        d -= 1
    return m // (d * d * d), d


def _square_part(n: int) -> int:
    """Largest k with k^2 | n."""
    k = isqrt(n)
    while k > 1:
        if n % (k * k) == 0:
            break
        k -= 1
    return k


def validate_and_factor(m: int) -> tuple[int, int]:
    """Return (h, k) for a valid generator m = h*k^2, else raise.

    Rejections carry the equivalent generator where one exists:
    a cube divisor points at the cube-free part's preferred mirror,
    and h < k points at h^2*k.

    >>> validate_and_factor(2)
    (2, 1)
    >>> validate_and_factor(12)
    (3, 2)
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    cube_free, d = _cube_part(m)
    if cube_free == 1:
        raise PerfectCube(m)
    if d > 1:
        k = _square_part(cube_free)
        h = cube_free // (k * k)
        raise NotCubeFree(m, min(h * h * k, h * k * k))
    k = _square_part(m)
    h = m // (k * k)
    if h < k:
        raise RedundantGenerator(m, h * h * k)
    return h, k


class FieldContext:
    """Immutable bundle of exact data for one field Q(cbrt(m)).

    p, q, r, s, t are the integer structure constants of the basis:

        alpha * theta = p + q*alpha + pm*k^2*theta
        theta^2       = -r*k^2 + s*alpha + t*theta

    mul_alpha and mul_theta are the regular representations of alpha and
    theta on coordinate columns over {1, alpha, theta}; both are exact
    integer matrices, and mul_alpha**3 = m * I.
    """

    __slots__ = (
        "m", "h", "k", "sigma", "sign", "p", "q", "r", "s", "t",
        "mul_alpha", "mul_theta", "alpha", "alpha_hat", "_alpha_cache",
    )

    def __init__(self, m: int):
        h, k = validate_and_factor(m)
        self.m = m
        self.h = h
        self.k = k
        sigma = 3 if m % 9 in (1, 8) else 1
        pm = -1 if m % 9 == 8 else 1
        self.sigma = sigma
        self.sign = pm

        # integer structure constants; the divisions must be exact
        for name, num, den in (
            ("p", h * k - pm * k**3, sigma),
            ("q", k - k**3, sigma),
            ("r", k * k - pm * 2 * h + 1, sigma * sigma),
            ("s", h - pm * k**4, sigma * sigma),
            ("t", k**3 + 2 * k, sigma),
        ):
            quo, rem = divmod(num, den)
            assert rem == 0, f"structure constant {name} not integral for m={m}"
            setattr(self, name, quo)
        p, q, r, s, t = self.p, self.q, self.r, self.s, self.t

        k2 = k * k
        self.mul_alpha = (
            (0, -k2, p),
            (1, -pm * k2, q),
            (0, sigma * k, pm * k2),
        )
        self.mul_theta = (
            (0, p, -k2 * r),
            (0, q, s),
            (1, pm * k2, t),
        )
        assert _mat_mul(self.mul_alpha, _mat_mul(self.mul_alpha, self.mul_alpha)) == \
            tuple(tuple(m * (i == j) for j in range(3)) for i in range(3))
        # theta = (k + pm*k*alpha + alpha^2/k) / sigma, as matrices
        a2 = _mat_mul(self.mul_alpha, self.mul_alpha)
        lhs = tuple(
            tuple(a2[i][j] + k2 * (i == j) + pm * k2 * self.mul_alpha[i][j] for j in range(3))
            for i in range(3)
        )
        assert lhs == tuple(tuple(sigma * k * v for v in row) for row in self.mul_theta)

        self._alpha_cache: dict[int, int] = {}

        from .exactreal import Real, QAlpha  # deferred: exactreal has no imports back

        self.alpha = Real.from_qalpha(QAlpha(self, Fraction(0), Fraction(1), Fraction(0)))
        self.alpha_hat = Real.from_qalpha(
            QAlpha(self, Fraction(0), Fraction(0), Fraction(1, k)))

    def alpha_shift(self, prec: int) -> int:
        """n such that alpha * 2^prec lies in [n, n + 1)."""
        n = self._alpha_cache.get(prec)
        if n is None:
            n = icbrt(self.m << (3 * prec))
            self._alpha_cache[prec] = n
        return n

    def alpha_bounds(self, prec: int) -> tuple[Fraction, Fraction]:
        """Exact dyadic enclosure alpha in [lo, hi], width 2^-prec."""
        n = self.alpha_shift(prec)
        return Fraction(n, 1 << prec), Fraction(n + 1, 1 << prec)

    def alpha_hat_bounds(self, prec: int) -> tuple[Fraction, Fraction]:
        """Enclosure of alpha_hat = alpha^2 / k."""
        n = self.alpha_shift(prec)
        den = self.k << (2 * prec)
        return Fraction(n * n, den), Fraction((n + 1) * (n + 1), den)

    def __repr__(self):
        return (f"FieldContext(m={self.m}, h={self.h}, k={self.k}, "
                f"sigma={self.sigma}, sign={self.sign:+d})")


def _mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][l] * B[l][j] for l in range(3)) for j in range(3))
        for i in range(3)
    )


def build_context(m: int) -> FieldContext:
    """Validate m and assemble the full field context."""
    return FieldContext(m)


def refine_alpha(ctx: FieldContext, accuracy) -> tuple:
    """Refine the context's enclosures of alpha and alpha_hat to the
    requested width and return the pair."""
    acc = Fraction(accuracy)
    if acc <= 0:
        raise ValueError("accuracy must be positive")
    ctx.alpha.refine_below(acc)
    ctx.alpha_hat.refine_below(acc)
    return ctx.alpha, ctx.alpha_hat
