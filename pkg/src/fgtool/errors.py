"""Exception types raised across the toolkit."""


class FGToolError(ValueError):
    """Base class for every input or precondition error."""


class MissingFace(FGToolError):
    pass


class UnknownVertex(FGToolError):
    pass


class EmptySimplex(FGToolError):
    pass


class InvalidPoset(FGToolError):
    pass


class CyclicQuiver(FGToolError):
    pass


class ParallelArrows(FGToolError):
    pass


class NotOrdered(FGToolError):
    pass


class Disconnected(FGToolError):
    pass


class UnknownBasepoint(FGToolError):
    pass


class MalformedWalk(FGToolError):
    pass


class NotAnEdgePath(FGToolError):
    pass


class CoverViolation(FGToolError):
    pass


class DisconnectedPiece(FGToolError):
    pass


class BadBasepoint(FGToolError):
    pass


class TargetTooLarge(FGToolError):
    pass


class NonPrimeCharacteristic(FGToolError):
    pass


class ParseError(FGToolError):
    """Input text error; ``line`` is 1-based, or None when not tied to a line."""

    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class InputSyntaxError(ParseError):
    pass


class DuplicateId(ParseError):
    pass


class UnknownLabel(ParseError):
    pass
