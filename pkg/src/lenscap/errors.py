"""Domain errors.

Every error raised for a violated precondition derives from :class:`DomainError`,
so callers (the CLI in particular) can separate bad input from bugs.
"""


class DomainError(ValueError):
    """A precondition on the mathematical input was violated."""


class ZeroOverZero(DomainError):
    pass


class NegativeInput(DomainError):
    pass


class InfinityInput(DomainError):
    pass


class IndeterminateForm(DomainError):
    pass


class BadModulus(DomainError):
    pass


class OddP(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class QZeroModP(NotCoprime):
    pass


class NotAVertex(DomainError):
    pass


class RootHasNoMother(DomainError):
    pass


class BadT(DomainError):
    pass


class NonPositive(DomainError):
    pass


class BadHighlight(DomainError):
    pass
