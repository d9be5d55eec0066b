"""Exception hierarchy shared by every tatforge module."""


class TatError(Exception):
    """Base class for tatforge errors."""


class InvalidParameterError(TatError, ValueError):
    """A constructor or operation received an out-of-range parameter."""


class NotFoundError(TatError, KeyError):
    """A vertex or edge is not part of the graph."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class IncompleteLabelingError(TatError):
    """A labeling does not cover every vertex and edge of its graph."""


class FormatError(TatError):
    """A labeling, edge-list or manifest file could not be parsed."""
