"""Exception hierarchy shared by every module."""


class MajdomError(Exception):
    """Base class for all library errors."""


class GraphError(MajdomError, ValueError):
    """An edit or construction would break a graph invariant."""


class LoopError(GraphError):
    pass


class MissingArcError(GraphError):
    pass


class DuplicateArcError(GraphError):
    pass


class LastVertexError(GraphError):
    pass


class VertexRangeError(GraphError, IndexError):
    pass


class FamilyError(MajdomError, ValueError):
    """Bad family name or parameters."""


class ParseError(MajdomError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAMODSError(MajdomError, ValueError):
    pass


class LimitExceeded(MajdomError):
    """Instance is larger than a configured exact-computation limit."""

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what} = {size} exceeds the configured limit of {limit}")
