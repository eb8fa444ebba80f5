"""Exception hierarchy shared by all zetaprop modules."""

from __future__ import annotations


class ZetaPropError(Exception):
    """Base class for every error raised by zetaprop."""


# ring
class ZeroDenominator(ZetaPropError, ZeroDivisionError):
    pass


class ZeroInput(ZetaPropError, ValueError):
    pass


class BadConstantTerm(ZetaPropError, ValueError):
    pass


# linalg
class NotSquare(ZetaPropError, ValueError):
    pass


class NotInvariant(ZetaPropError, ValueError):
    pass


# presentation
class PresentationError(ZetaPropError, ValueError):
    """A presentation failed to parse or validate.

    ``line`` and ``column`` are 1-based source positions when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class PresentationSyntaxError(PresentationError):
    pass


class UnknownLocus(PresentationError):
    pass


class NotAChainComplex(PresentationError):
    pass


class BadHomologyShape(PresentationError):
    pass


class IllegalExchange(PresentationError):
    pass


class IllegalSlide(PresentationError):
    pass


class BadClosure(PresentationError):
    pass


class NotAChainMap(PresentationError):
    pass


class OrientationReversing(PresentationError):
    pass


class BettiNotOne(ZetaPropError, ValueError):
    pass


class IdentityViolated(ZetaPropError, AssertionError):
    pass


# cycles
class AdjacencyMismatch(ZetaPropError, AssertionError):
    pass


class EnumerationBudgetExceeded(ZetaPropError, RuntimeError):
    pass
