"""Exception taxonomy shared across the package."""


class DesignError(Exception):
    """Base class for all library errors."""


class DomainError(DesignError, ValueError):
    """Input outside the documented domain (bad point, empty multiset, ...)."""


class PreconditionError(DesignError, ValueError):
    """A stated hypothesis inequality is violated (e.g. n > 2m)."""


class HypothesisError(DesignError):
    """The design condition itself fails.

    ``failing_index`` is the smallest odd index whose residual is nonzero,
    when that is what went wrong.
    """

    def __init__(self, message: str, failing_index: int | None = None):
        super().__init__(message)
        self.failing_index = failing_index


class ToleranceError(DesignError):
    """Approximate-mode certification could not complete.

    ``reason`` is ``"pairing ambiguous"`` when a candidate partner misses the
    per-pair gap only narrowly (within 10x the tolerance), and
    ``"hypothesis approximately violated"`` when no near-partner exists at
    all, i.e. the input is not even close to symmetric.
    """

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


class NotSquarefreeError(DesignError):
    """Polynomial has repeated roots; reduce to its squarefree part first."""


class InternalDefectError(DesignError):
    """An identity the theory guarantees failed to hold; indicates a bug."""
