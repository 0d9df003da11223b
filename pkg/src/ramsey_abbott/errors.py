"""Exception types shared across the package."""


class RamseyError(Exception):
    """Base class for errors raised by this package."""


class GraphFormatError(RamseyError, ValueError):
    """Malformed serialized graph. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class GraphValidationError(RamseyError, ValueError):
    """Adjacency data that is not a simple undirected graph."""


class CapacityError(RamseyError):
    """Requested object exceeds the configured size budget."""


class ParameterError(RamseyError, ValueError):
    """Parameters for which the requested guarantee cannot hold.

    ``estimator`` carries the offending estimator value when there is one.
    """

    def __init__(self, message: str, estimator=None):
        super().__init__(message)
        self.estimator = estimator


class SearchExhausted(RamseyError):
    """No candidate passed before the seed budget ran out."""

    def __init__(self, message: str, seeds_tried: int):
        super().__init__(message)
        self.seeds_tried = seeds_tried
