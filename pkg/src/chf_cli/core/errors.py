"""Exception hierarchy shared by the computational core."""


class ChfError(Exception):
    """Base class for every error raised by chf-cli."""


class GraphFormatError(ChfError):
    """Raised when a graph or labeling file cannot be parsed."""

    def __init__(self, message: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class GraphValidationError(ChfError):
    """Raised when permutations do not describe a connected trivalent ribbon graph."""


class LabelingFormatError(ChfError):
    """Raised when an edge labeling is malformed or inconsistent."""


class UnknownBuiltinError(ChfError):
    """Raised for an unknown builtin graph name."""


class ClosureBoundError(ChfError):
    """Raised when a permutation-group closure exceeds the configured bound."""


class MatrixDomainError(ChfError):
    """Raised when a matrix is outside the domain of an operation (e.g. not in PSL2(Z))."""


class NotParabolicError(ChfError):
    """Raised when a parabolic element was required."""


class SideError(ChfError):
    """Raised when a geodesic is not a side of the given triangle."""


class DepthLimitError(ChfError):
    """Raised when a net expansion depth exceeds the configured limit."""


class RenderError(ChfError):
    """Raised when an SVG or sidecar file cannot be written."""


class WordError(ChfError):
    """Raised for malformed words or words outside the expected subgroup."""
