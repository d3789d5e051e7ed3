"""Exception hierarchy. All errors derive from :class:`GramError`."""


class GramError(Exception):
    """Base class for all library errors."""


class InvalidInput(GramError, ValueError):
    """Malformed arguments or serialized data."""


class NotSymmetric(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class SizeMismatch(InvalidInput):
    pass


class DegreeMismatch(InvalidInput):
    pass


class ZeroForm(InvalidInput):
    pass


class NotPsd(InvalidInput):
    pass


class DifferentForm(InvalidInput):
    pass


class EqualPoints(InvalidInput):
    pass


class InvalidSliceDim(InvalidInput):
    pass


class InvalidRoots(InvalidInput):
    pass


class NonCanonicalCode(InvalidInput):
    pass


class EqualCodes(InvalidInput):
    pass


class DegreeTooLarge(InvalidInput):
    pass


class PatakiViolation(InvalidInput):
    pass


class NotVanishingAtInfinity(InvalidInput):
    pass


class PNotInSpan(InvalidInput):
    pass


class GenericityFailure(GramError):
    """A random sample landed in a non-generic locus."""


class ExhaustedTries(GenericityFailure):
    """Rejection sampling gave up; ``samples`` holds every rejected draw."""

    def __init__(self, message, samples=()):
        super().__init__(message)
        self.samples = list(samples)


class CrossCheckMismatch(GenericityFailure):
    """Structural and face-dimension edge criteria disagree on ``pair``."""

    def __init__(self, message, pair=None, report=None):
        super().__init__(message)
        self.pair = pair
        self.report = report
