"""Exception types raised across the package."""


class BettiBoundsError(Exception):
    """Base class for all package errors."""


class DimensionError(BettiBoundsError, ValueError):
    """Objects over different numbers of variables were combined."""


class UndefinedInputError(BettiBoundsError, ValueError):
    """The quantity is not defined for this input (e.g. m(1), reg(0))."""


class ArgumentError(BettiBoundsError, ValueError):
    """A numeric argument is out of its admissible range."""


class PreconditionError(BettiBoundsError, ValueError):
    """An operation was called on input that violates its hypothesis.

    ``witness`` carries the offending object (a generator, a table entry, ...).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ContractError(BettiBoundsError, ValueError):
    """A user supplied callback broke its contract."""


class ObstructionError(BettiBoundsError):
    """A homology class that was required to vanish does not.

    ``homology_class`` is a chain representing the nonzero class.
    """

    def __init__(self, message, homology_class=None):
        super().__init__(message)
        self.homology_class = homology_class


class ResourceError(BettiBoundsError):
    """The input exceeds a configured size cap."""


class InstabilityError(BettiBoundsError):
    """Randomized trials disagreed; ``observed`` lists every outcome."""

    def __init__(self, message, observed=()):
        super().__init__(message)
        self.observed = list(observed)


class ParseError(BettiBoundsError, ValueError):
    """Malformed ideal, table or polynomial input."""
