"""Exception hierarchy.  Every error raised on purpose by the package derives
from :class:`PlanarCanonError` so the CLI can map it to exit code 2."""

from __future__ import annotations


class PlanarCanonError(Exception):
    pass


class GraphError(PlanarCanonError, ValueError):
    """Malformed graph input or out-of-range vertex id."""


class ParseError(PlanarCanonError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DisconnectedGraph(PlanarCanonError):
    pass


class InvalidRotation(PlanarCanonError):
    def __init__(self, vertex: int, reason: str):
        self.vertex = vertex
        self.reason = reason
        super().__init__(f"vertex {vertex}: {reason}")


class NotTriconnected(PlanarCanonError):
    pass


class NotPlanar(PlanarCanonError):
    pass


class InvalidConfiguration(PlanarCanonError):
    pass


class GeodesicError(PlanarCanonError):
    """Empty geodesic system, or endpoints that do not sit on a common
    geodesic of the configuration."""


class NoIntersection(PlanarCanonError):
    """The two geodesic systems of a configuration share no vertex."""


class NoStrongIntersection(PlanarCanonError):
    """The first boundaries of the two geodesic systems do not touch."""


class NotTriconnectedWitness(PlanarCanonError):
    def __init__(self, separator: tuple[int, int]):
        self.separator = separator
        super().__init__(f"vertices {separator[0]} and {separator[1]} separate the graph")


class GeometryInvariantViolation(PlanarCanonError):
    """An invariant that holds in every triconnected plane graph failed."""


class StrategyError(PlanarCanonError):
    """A scripted strategy was invoked outside its precondition."""


class BudgetExceeded(PlanarCanonError):
    """The exact game solver would exceed its state budget."""


class TupleSpaceTooLarge(PlanarCanonError):
    pass
