"""Exception taxonomy for the package.

Generator rejections carry the equivalent generator so callers can point
the user at the field they probably meant.
"""


class Error(Exception):
    """Base class for all package errors."""


class InvalidGenerator(Error):
    """m does not generate a pure cubic field in lowest terms."""

    def __init__(self, m, message):
        super().__init__(message)
        self.m = m


class PerfectCube(InvalidGenerator):
    """m is a perfect cube (including m = 1), so Q(m^(1/3)) = Q."""

    def __init__(self, m):
        super().__init__(m, f"m = {m} is a perfect cube")


class NotCubeFree(InvalidGenerator):
    """m carries a cube divisor; `equivalent` generates the same field."""

    def __init__(self, m, equivalent):
        super().__init__(m, f"m = {m} is not cube-free. See m = {equivalent}")
        self.equivalent = equivalent


class RedundantGenerator(InvalidGenerator):
    """m = hk^2 with h < k; the mirror h^2*k generates the same field."""

    def __init__(self, m, equivalent):
        super().__init__(m, f"m = {m} is redundant with m = {equivalent}")
        self.equivalent = equivalent


class RankDeficient(Error):
    """Generators span a sublattice of rank < 3."""


class ZeroElement(Error):
    """Operation undefined for the zero element."""


class NotAnIdeal(Error):
    """Canonical form fails the ideal divisibility conditions."""


class NotPrimitive(Error):
    """Canonical form has a common factor in its six coefficients."""


class NotReduced(Error):
    """Ideal is not reduced."""


class NotMinimalElement(Error):
    """Element is not in the computed list of minimal elements."""


class GeneratorMismatch(Error):
    """Supplied generator does not generate the supplied ideal."""


class IterationCapExceeded(Error):
    """Sequence iteration hit the configured cap; says nothing about math."""


class PrecisionExhausted(Error):
    """Certified comparison hit its precision cap with no symbolic fallback."""
