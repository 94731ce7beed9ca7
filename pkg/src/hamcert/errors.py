"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed caller input: bad vertex ids, loops, degenerate queries."""


class Graph6ParseError(GraphInputError):
    """Invalid graph6 text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapacityError(RuntimeError):
    """Input exceeds a desk-scale ceiling of an exponential routine."""


class EngineError(RuntimeError):
    """Internal inconsistency in the extraction engine; always a bug."""
