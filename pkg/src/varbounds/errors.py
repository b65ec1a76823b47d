"""Exception hierarchy.

Every error raised by the package derives from :class:`UncertaintyError`,
itself a :class:`ValueError`, so callers can catch broadly or narrowly.
"""


class UncertaintyError(ValueError):
    pass


class NonFinite(UncertaintyError):
    pass


class NotSquare(UncertaintyError):
    pass


class NotHermitian(UncertaintyError):
    def __init__(self, asymmetry):
        self.asymmetry = float(asymmetry)
        super().__init__(f"matrix is not Hermitian (max asymmetry {asymmetry:.3e})")


class NotNormalized(UncertaintyError):
    pass


class NotUnitTrace(UncertaintyError):
    pass


class NotPositive(UncertaintyError):
    pass


class DimensionMismatch(UncertaintyError):
    pass


class NonRealExpectation(UncertaintyError):
    pass


class NegativeVariance(UncertaintyError):
    pass


class EmptyList(UncertaintyError):
    pass


class NeedAtLeastTwo(UncertaintyError):
    pass


class NeedAtLeastThree(UncertaintyError):
    pass


class BlochNormExceeded(UncertaintyError):
    pass


class BadDimension(UncertaintyError):
    pass


class NotOrthogonal(UncertaintyError):
    pass


class MixedStateUnsupported(UncertaintyError):
    pass


class DegeneratePerp(UncertaintyError):
    """The saturating orthogonal state has (numerically) zero norm."""


class BadGrid(UncertaintyError):
    pass


class BadStep(UncertaintyError):
    pass


class FormatError(UncertaintyError):
    """Malformed matrix/state text file or CLI state specifier."""
