"""Exception hierarchy shared by every module."""

from __future__ import annotations


class BipMinorError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(BipMinorError, ValueError):
    pass


class DuplicateVertex(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class MonochromaticEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return ValueError.__str__(self)


class UnknownEdge(GraphError, KeyError):
    def __str__(self) -> str:
        return ValueError.__str__(self)


class DifferentSides(GraphError):
    pass


class SameVertex(GraphError):
    pass


class NotACycle(GraphError):
    pass


class NotAPath(GraphError):
    pass


class NotAdmissible(BipMinorError):
    """A contraction was requested that has no witness cycle.

    ``reason`` is ``"no common neighbor"`` or ``"no peripheral cycle"``.
    """

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


class BudgetExhausted(BipMinorError):
    """A bounded search ran out of budget before reaching a verdict."""


class BadParameter(BipMinorError, ValueError):
    pass


class BadSides(BipMinorError, ValueError):
    pass


class SideTooSmall(BipMinorError, ValueError):
    pass


class NotLaman(BipMinorError, ValueError):
    pass


class WrongDegree(BipMinorError, ValueError):
    pass


class MinDegreeNot3(BipMinorError, ValueError):
    pass


class IsK22(BipMinorError, ValueError):
    pass


class CapExceeded(BipMinorError, ValueError):
    pass


class TheoremViolation(BipMinorError, AssertionError):
    """A statement proved in the literature failed on a concrete graph."""
