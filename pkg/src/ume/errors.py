"""Exception types shared across the toolkit.

Every error carries a ``component`` tag naming the subsystem it belongs
to; the CLI uses it to attribute failures in its exit-2 messages.
"""


class UmeError(Exception):
    component = "ume"


class GraphFormatError(UmeError):
    """Malformed graph input. ``line`` is the 1-based offending line, when known."""

    component = "graphs"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateEdgeError(GraphFormatError):
    pass


class DanglingEndpointError(GraphFormatError):
    """Edge endpoint outside the declared node range."""


class SelfLoopError(GraphFormatError):
    """Graphs reject (u, u) edges; self-transitions live only in evader chains."""


class DimensionMismatchError(UmeError):
    component = "evaders"


class SingularSystemError(UmeError):
    """The passage system I - (M - M*r*d) has no solution: the chain holds a
    recurrent class with no leakage under the plan."""

    component = "evaders"


class UnknownNodeError(UmeError):
    component = "interdiction"


class TransformError(UmeError):
    component = "interdiction"


class ColoringTimeoutError(UmeError):
    """No proper 4-coloring found within the time budget; the input is
    non-planar, adversarial, or the budget is too small."""

    component = "coloring"


class ImproperColoringError(UmeError):
    component = "coloring"


class MissingColorError(UmeError):
    component = "coloring"


class SearchSpaceError(UmeError):
    component = "solvers"


class PathExplosionError(UmeError):
    component = "oracles"


class InstanceTooLargeError(UmeError):
    component = "oracles"
