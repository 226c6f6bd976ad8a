"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for graph construction and precondition failures."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class SameVertexError(GraphError):
    pass


class NotAnEdgeError(GraphError):
    pass


class DisconnectedError(GraphError):
    """Raised when an operation requires a connected graph."""


class NoEdgesError(GraphError):
    pass


class BadParamsError(GraphError):
    """Invalid parameters for a builder or sweep."""


class KOutOfRangeError(BadParamsError):
    pass


class MTooSmallError(BadParamsError):
    pass


class NTooLargeError(BadParamsError):
    pass


class FormatError(GraphError):
    """Malformed input text; the message names the offending line or character."""
