"""Exception hierarchy shared by all modules."""


class StarbaryError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(StarbaryError, ValueError):
    pass


class DomainError(StarbaryError, ValueError):
    """Evaluation requested outside the interval or disk of definition."""


class SamplingError(StarbaryError):
    """A sampled function value was not finite.

    Attributes
    ----------
    index : tuple of int
        Grid index ``(i, j)`` of the offending node.
    """

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class NotStarlikeError(StarbaryError, ValueError):
    pass


class InvalidBoundaryError(StarbaryError, ValueError):
    pass


class OutsideDomainError(DomainError):
    pass


class EmptyGridError(StarbaryError):
    pass
