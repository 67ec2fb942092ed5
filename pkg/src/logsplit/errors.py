"""Exception hierarchy for the logsplit engine.

Every failure mode the engine can report has its own class so that callers
(and the CLI exit-code mapping) can dispatch on type rather than on message
text.
"""


class LogSplitError(Exception):
    """Base class for all logsplit errors."""


class InputFormatError(LogSplitError):
    """Malformed input document; message carries the offending field path."""


class DimensionMismatch(LogSplitError):
    """Matrix/vector dimensions do not agree, or lie outside 1..8."""


class SingularMatrix(LogSplitError):
    """|det| below the singularity tolerance where an inverse is required."""


class RootFindingDivergence(LogSplitError):
    """Simultaneous root iteration failed to converge within its budget."""


class ZeroEigenvalue(LogSplitError):
    """An eigenvalue is numerically zero; monodromies must be invertible."""


class ZeroArgument(LogSplitError):
    """Normalized argument requested for the zero scalar."""


class OutOfBranch(LogSplitError):
    """A branch datum q lies outside the half-open interval [0, 1)."""


class ProductNotIdentity(LogSplitError):
    """Local monodromies fail to multiply to the identity within tolerance."""


class NonIntegralChernClass(LogSplitError):
    """The residue-trace sum is farther from an integer than tolerated."""


class InternalInconsistency(LogSplitError):
    """Two independent routes to the same invariant disagree."""


class UnsupportedCase(LogSplitError):
    """Input is valid but outside the implemented classification range."""
