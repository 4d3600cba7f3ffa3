"""Exception hierarchy shared by all cyclicgv modules."""

from __future__ import annotations


class CyclicGVError(Exception):
    """Base class for all library errors."""


class LengthMismatchError(CyclicGVError):
    """Two codewords of different lengths were combined."""


class DomainError(CyclicGVError):
    """An argument is outside the operation's mathematical domain."""


class ParseError(CyclicGVError):
    """A code file or rational string does not match the expected format."""


class ContractError(CyclicGVError):
    """A precondition on structured input was violated.

    Carries a concrete witness (e.g. a word and the shift index whose
    rotation is missing from a set that claimed cyclic closure).
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CapacityError(CyclicGVError):
    """Input exceeds a configured exhaustive-scan limit.

    ``partial`` holds a partial result when one could be computed.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class SamplingBudgetError(CyclicGVError):
    """Rejection sampling exhausted its attempt budget.

    Carries the set built so far plus acceptance statistics.
    """

    def __init__(self, message: str, partial=None, attempts: int = 0,
                 accepted: int = 0, orbits: int = 0):
        super().__init__(message)
        self.partial = partial
        self.attempts = attempts
        self.accepted = accepted
        self.orbits = orbits


class WitnessNotFoundError(CyclicGVError):
    """No word satisfying the requested margin was found within budget."""

    def __init__(self, message: str, margin: str = "", budget: int = 0):
        super().__init__(message)
        self.margin = margin
        self.budget = budget
