"""Exception types shared across the package."""


class EvidenceError(Exception):
    """Base class for every domain error raised by hintkit."""


class ValidationError(EvidenceError, ValueError):
    """A value violates its construction invariants."""


class FrameMismatch(ValidationError):
    """Two objects that must share a frame are built over different frames."""


class InvalidBelief(ValidationError):
    """A belief table is not the belief function of any mass function."""


class TotalConflict(EvidenceError):
    """Combination removed every joint outcome.

    Raised when the conditioning step of Dempster's rule would have to
    divide by zero, i.e. the pieces of evidence are jointly incompatible
    with the model.
    """


class ImpossibleObservation(EvidenceError):
    """The observed value has probability zero under the model source."""


class ZeroEvidence(EvidenceError):
    """The Bayes normalizer is zero: no parameter value can explain the data."""


class EnumerationLimit(EvidenceError):
    """A joint enumeration would exceed the configured size guard."""
