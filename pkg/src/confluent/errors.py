"""Exception types shared across the package."""


class ConfluentError(Exception):
    """Base class for all library-specific failures."""


class DomainError(ConfluentError):
    """Input outside the mathematical domain of the requested operation."""


class NonConvergence(ConfluentError):
    """An iterative computation hit its budget before reaching tolerance."""


class NotDegenerate(ConfluentError):
    """Polynomial-only operation called with a non-polynomial parameter set."""


class InvalidShift(ConfluentError):
    """A contiguous shift would move the denominator parameter onto a pole."""


class ZeroOnCircle(ConfluentError):
    """A function zero sits too close to every perturbed sampling circle."""


class AmbiguousCase(ConfluentError):
    """Real-zero count case analysis failed to select a unique branch."""


class Inconclusive(ConfluentError):
    """Numerical scan and closed-form count disagree; result is reported, not hidden."""

    def __init__(self, message: str, found=None, expected: int | None = None):
        super().__init__(message)
        self.found = list(found) if found is not None else []
        self.expected = expected
