"""Exception hierarchy shared across the package."""


class Hyp321Error(Exception):
    """Base class for all package-specific errors."""


class PoleError(Hyp321Error):
    """A gamma/polygamma argument landed (numerically) on a non-positive integer."""


# Gamma-quotient poles raised while assembling contiguous elements.
GammaPole = PoleError


class UnboundSymbol(Hyp321Error):
    """An expression was evaluated with a free symbol missing from the assignment."""


class NonIntegerSumBound(Hyp321Error):
    """A finite-sum bound did not bind to an integer."""


class IndexCapture(Hyp321Error):
    """A substitution target mentions a symbol bound by an enclosing finite sum."""


class DivergentSeries(Hyp321Error):
    """Non-terminating series at unit argument with Re(excess) <= 0."""


class LowerPole(Hyp321Error):
    """A lower parameter hits a non-positive integer before the series terminates."""


class NoConvergence(Hyp321Error):
    """The truncation cap was exceeded before the requested tolerance was met."""


class ParseError(Hyp321Error):
    """Malformed input text (parameter grammar or database file)."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class SchemaVersionMismatch(Hyp321Error):
    """Database file declares an unsupported schema version."""


class InsufficientSamples(Hyp321Error):
    """verify_entry could not find enough convergent, pole-free samples."""


class SingularRecursionPath(Hyp321Error):
    """A contiguous-recursion denominator vanished along the chosen path."""


class AnchorPole(Hyp321Error):
    """A recursion anchor could not be evaluated (gamma pole in its closed form)."""


class NoConvergentCheck(Hyp321Error):
    """A value was produced but no convergent series cross-check is available."""


class ExceptionalCase(Hyp321Error):
    """Parameter configuration for which the requested conversion formula fails."""
