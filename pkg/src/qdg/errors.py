"""Error taxonomy shared by the whole toolkit.

Every failure that reflects bad mathematical input (as opposed to a bug)
derives from DomainError so callers, and the command line driver, can map
them to a single exit path.
"""


class DomainError(Exception):
    """Input is outside the mathematical domain of the operation."""


class SingularCharacterError(DomainError):
    """Character parameter lies on the divisor spiral of theta."""


class ProhibitedDirectionError(DomainError):
    """Summation direction resonates with the system (lies in Sigma)."""


class NoThetaStructure(DomainError):
    """No coweight pairs strictly negatively with every root.

    Carries an optional certificate: a nonnegative combination of the
    roots equal to zero, which is the dual witness of infeasibility.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotRealizable(DomainError):
    """Group data fails a hypothesis of the realization procedure."""


class SupportError(DomainError):
    """Laurent data violates a declared support constraint."""
