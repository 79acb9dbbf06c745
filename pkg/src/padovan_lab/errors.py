"""Exception types raised by padovan_lab."""


class PadovanLabError(ValueError):
    pass


class OutOfRange(PadovanLabError):
    """Weight k is outside the admissible range for length n."""


class ParseFailure(PadovanLabError):
    pass


class NotAdjacent(PadovanLabError):
    pass


class ContextMismatch(PadovanLabError):
    """Two weak partitions belong to different Pi_{p,q}."""


class NotSquare(PadovanLabError):
    pass


class TooShort(PadovanLabError):
    pass


class EmptyGraph(PadovanLabError):
    pass


class Disconnected(PadovanLabError):
    pass


class SizeLimit(PadovanLabError):
    """A brute-force routine was asked to run on a graph above its bound."""
