"""Exception hierarchy shared by every module."""

from __future__ import annotations


class KBestError(Exception):
    """Base class for all library errors."""


class ParseError(KBestError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdge(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class WeightOverflow(ParseError):
    pass


class UnknownEdge(KBestError):
    pass


class InvalidParameter(KBestError):
    pass


class IncompleteInstance(KBestError):
    pass


class InstanceTooLarge(KBestError):
    pass


class DisconnectedGraph(KBestError):
    pass


class InvalidTour(KBestError):
    pass


class InvalidExchange(KBestError):
    pass


class DecompositionFailure(KBestError):
    """No distance-reducing exchange sequence links two tours.

    Carries both tours so callers can archive the counterexample.
    """

    def __init__(self, h, h2, message: str = "no exchange sequence found"):
        self.h = h
        self.h2 = h2
        super().__init__(f"{message}: {list(h.order)} -> {list(h2.order)}")
