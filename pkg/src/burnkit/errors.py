"""Exception hierarchy shared by every burnkit module."""


class BurnkitError(Exception):
    """Base class for all burnkit errors."""


class InputError(BurnkitError, ValueError):
    """Malformed argument: vertex out of range, missing edge, bad parameter."""


class DomainError(BurnkitError, ValueError):
    """Well-formed input outside the mathematical domain of an operation."""


class BudgetExceeded(BurnkitError):
    """An exhaustive search ran past its configured cap.

    ``partial`` carries whatever was established before the cap was hit
    (for example a lower bound), or ``None``.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
