"""Finite relational structures for the pebble game: a graph, optionally
with the ternary successor relation of a rotation system or the ternary and
quaternary relations of a layout system."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from ..embedding import LayoutSystem, RotationSystem
from ..graph import INF, Graph, all_pairs_distances

StructureKind = Literal["graph", "rotation", "layout"]


@dataclass(frozen=True, eq=False)
class Structure:
    """``relations[j]`` is a boolean array of shape ``(n,) * arity``.

    Distances always refer to the underlying graph.
    """

    graph: Graph
    kind: StructureKind
    relations: tuple[np.ndarray, ...] = ()
    rotation: RotationSystem | None = field(default=None, repr=False)
    _dist: list[list[float]] | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @classmethod
    def from_graph(cls, g: Graph) -> "Structure":
        return cls(g, "graph")

    @classmethod
    def from_rotation(cls, rot: RotationSystem) -> "Structure":
        """Ternary relation T(a, b, c) iff c follows b around a."""
        n = rot.n
        t = np.zeros((n, n, n), dtype=bool)
        for a in range(n):
            for b, c in rot.succ[a].items():
                t[a, b, c] = True
        return cls(rot.graph, "rotation", (t,), rotation=rot)

    @classmethod
    def from_layout(cls, lay: LayoutSystem) -> "Structure":
        """Ternary T(a, b, c) iff {b, c} is an edge of the cycle at a, and
        quaternary Q in both reading directions."""
        n = lay.graph.n
        t = np.zeros((n, n, n), dtype=bool)
        for a in range(n):
            for b, c in lay.cyc[a]:
                t[a, b, c] = t[a, c, b] = True
        q = np.zeros((n, n, n, n), dtype=bool)
        for b1, a1, a2, b2 in lay.quad:
            q[b1, a1, a2, b2] = q[b2, a2, a1, b1] = True
        return cls(lay.graph, "layout", (t, q))

    @property
    def adjacency(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for a, b in self.graph.edges:
            m[a, b] = m[b, a] = True
        return m

    def dist(self, a: int, b: int) -> float:
        if self._dist is None:
            object.__setattr__(self, "_dist", all_pairs_distances(self.graph))
        return self._dist[a][b]  # type: ignore[index]

    def holds(self, j: int, args: Sequence[int]) -> bool:
        return bool(self.relations[j][tuple(args)])

    def arities(self) -> tuple[int, ...]:
        return tuple(r.ndim for r in self.relations)


def same_signature(a: Structure, b: Structure) -> bool:
    return a.arities() == b.arities()


__all__ = ["INF", "Structure", "StructureKind", "same_signature"]
