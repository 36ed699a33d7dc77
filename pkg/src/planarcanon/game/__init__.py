"""The k-pebble game on graphs, rotation systems and layout systems."""

from .play import (
    Board,
    GamePosition,
    GreedyMetricDuplicator,
    Move,
    OptimalDuplicator,
    RandomDuplicator,
    Transcript,
    Violation,
    make_duplicator,
    partial_iso,
    play,
    solver_spoiler,
)
from .solver import PebbleTypes, depth_matrix, refine, solve_depth
from .strategies import (
    GeneralizedHalving,
    metric_endgame,
    spoiler_coordinate_strategy,
    spoiler_generalized_halving,
    spoiler_halving,
    spoiler_metric_guard,
)
from .structure import Structure

__all__ = [
    "Board",
    "GamePosition",
    "GeneralizedHalving",
    "GreedyMetricDuplicator",
    "Move",
    "OptimalDuplicator",
    "PebbleTypes",
    "RandomDuplicator",
    "Structure",
    "Transcript",
    "Violation",
    "depth_matrix",
    "make_duplicator",
    "metric_endgame",
    "partial_iso",
    "play",
    "refine",
    "solve_depth",
    "solver_spoiler",
    "spoiler_coordinate_strategy",
    "spoiler_generalized_halving",
    "spoiler_halving",
    "spoiler_metric_guard",
]
