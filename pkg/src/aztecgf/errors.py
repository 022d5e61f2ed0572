"""Exception types shared across the package.

Every error here signals a violated precondition or a broken internal
convention, never a numerical tolerance: all arithmetic in this package is
exact, so any mismatch is a hard bug.
"""


class AztecError(Exception):
    """Base class for all package-specific errors."""


class InexactDivision(AztecError):
    """Polynomial division left a remainder where an exact quotient was required."""


class PoleAtZero(AztecError):
    """Evaluation substituted 0 into a negative exponent."""


class NegativeExponent(AztecError):
    """A generating function that must be a genuine polynomial has a negative exponent."""


class InvalidHoles(AztecError):
    """Hole positions violate 1 <= s_1 < ... < s_m <= n."""


class InvalidDents(AztecError):
    """Dent positions violate 1 <= s_1 < ... < s_a <= a + b."""


class InconsistentBoundary(AztecError):
    """Checkerboard coloring cannot make all northwest-side cells white."""


class RegionTooWide(AztecError):
    """The dynamic-programming frontier exceeded the configured width bound."""


class ConstructionFailed(AztecError):
    """The minimal-tiling construction produced overlaps or an untileable remainder."""


class OddVerticalCount(AztecError):
    """The vertical-domino statistic is not an integer for this tiling."""


class Unreachable(AztecError):
    """A tiling is not connected to the minimal tiling in the flip graph."""


class BijectionViolation(AztecError):
    """A tiling/path or tiling/plane-partition conversion broke its invariants."""


class NegativeRank(AztecError):
    """A path-computed rank came out negative, signalling a convention error."""


class CalibrationMismatch(AztecError):
    """The local domino weights disagree with brute force on the calibration regions."""


class InvalidPartition(AztecError):
    """A vertex split was given sets that do not partition the neighborhood."""


class PatternMismatch(AztecError):
    """The graph does not contain the requested rewrite pattern."""


class ZeroDelta(AztecError):
    """An urban-renewal step has xz + yt = 0 and cannot be applied."""
