"""Coordinates of a rotation system relative to an origin edge, and the
canonical codes they induce.

From an origin edge ``(a, b)`` each vertex ``v`` gets the lexicographically
smallest code of a shortest ``a``-``v`` path, where a path
``a = a0, a1, ..., ad = v`` is coded by the local positions
``c_{a b}(a1), c_{a1 a0}(a2), ..., c_{a(d-1) a(d-2)}(ad)``.  Codes are
pairwise distinct, so sorting by them orders the vertices canonically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .embedding import RotationSystem, conjugate, embed, validate_rotation
from .errors import DisconnectedGraph, GraphError, InvalidRotation
from .graph import Graph

CODE_PREFIX = "pcanon1:"


def _positions(rot: RotationSystem) -> list[dict[int, int]]:
    return [{b: i for i, b in enumerate(rot.cycle(a))} for a in range(rot.n)]


def local_coord(rot: RotationSystem, x: int, y: int, z: int) -> int:
    """Number of clockwise steps from ``y`` to ``z`` around ``x``."""
    m = rot.succ[x]
    if y not in m or z not in m:
        raise GraphError(f"{y} and {z} must both be neighbors of {x}")
    steps, cur = 0, y
    while cur != z:
        cur = m[cur]
        steps += 1
    return steps


@dataclass(frozen=True)
class CoordinateCode:
    origin: tuple[int, int]
    coords: tuple[tuple[int, ...], ...]
    # predecessor of each vertex on its extreme path (-1 for the origin tail)
    parent: tuple[int, ...]

    def path_to(self, v: int) -> tuple[int, ...]:
        """The shortest path whose code is ``coords[v]``."""
        walk = [v]
        while walk[-1] != self.origin[0]:
            walk.append(self.parent[walk[-1]])
        return tuple(walk[::-1])

    def order(self) -> list[int]:
        """Vertices sorted by coordinate."""
        return sorted(range(len(self.coords)), key=self.coords.__getitem__)


def _coords(
    rot: RotationSystem, pos: list[dict[int, int]], a: int, b: int
) -> tuple[list[tuple[int, ...]], list[int]]:
    n = rot.n
    adj = rot.graph.adj
    code: list[tuple[int, ...] | None] = [None] * n
    parent = [-1] * n
    code[a] = ()
    pa = pos[a]
    da = len(pa)
    layer = []
    ref = pa[b]
    for v in adj[a]:
        code[v] = ((pa[v] - ref) % da,)
        parent[v] = a
        layer.append(v)
    while layer:
        best: dict[int, tuple[int, ...]] = {}
        for u in layer:
            pu = pos[u]
            du = len(pu)
            cu = code[u]
            assert cu is not None
            ref = pu[parent[u]] if parent[u] >= 0 else 0
            for v in adj[u]:
                if code[v] is not None:
                    continue
                cand = cu + ((pu[v] - ref) % du,)
                old = best.get(v)
                if old is None or cand < old:
                    best[v] = cand
                    parent[v] = u
        for v, c in best.items():
            code[v] = c
        layer = sorted(best)
    if any(c is None for c in code):
        raise DisconnectedGraph("coordinates need a connected graph")
    return code, parent  # type: ignore[return-value]


def global_coords(rot: RotationSystem, a: int, b: int) -> CoordinateCode:
    if not rot.graph.has_edge(a, b):
        raise GraphError(f"origin ({a}, {b}) is not an edge")
    code, parent = _coords(rot, _positions(rot), a, b)
    return CoordinateCode((a, b), tuple(code), tuple(parent))


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------


def _nat(x: int) -> bytes:
    return x.to_bytes(4, "big")


def _serialize(rot: RotationSystem, order: Sequence[int]) -> bytes:
    """Relabel so that ``order[i]`` becomes ``i`` and encode n, the edge list
    and the rotation, each list prefixed by its length."""
    new = [0] * len(order)
    for i, v in enumerate(order):
        new[v] = i
    edges = sorted((min(new[u], new[v]), max(new[u], new[v])) for u, v in rot.graph.edges)
    parts = [_nat(rot.n), _nat(len(edges))]
    for u, v in edges:
        parts.append(_nat(u))
        parts.append(_nat(v))
    for v in order:
        m = rot.succ[v]
        cyc = [new[x] for x in rot.cycle(v)]
        k = cyc.index(min(cyc))
        cyc = cyc[k:] + cyc[:k]
        parts.append(_nat(len(m)))
        parts.extend(_nat(x) for x in cyc)
    return b"".join(parts)


@dataclass(frozen=True)
class CanonicalForm:
    code: bytes
    origin: tuple[int, int]
    conjugate: bool = False

    def hex(self) -> str:
        return CODE_PREFIX + self.code.hex()

    def witness_json(self) -> str:
        return json.dumps({"origin": list(self.origin), "conjugate": self.conjugate})

    def __lt__(self, other: "CanonicalForm") -> bool:
        return (self.code, self.conjugate, self.origin) < (other.code, other.conjugate, other.origin)


def canonical_code_rotation(rot: RotationSystem) -> CanonicalForm:
    """Smallest serialization over all origin edges, scanned in ascending
    ``(a, b)``; the first origin reaching the minimum is the witness."""
    bad = validate_rotation(rot)
    if bad is not None:
        raise InvalidRotation(bad.vertex, bad.reason)
    pos = _positions(rot)
    best: bytes | None = None
    witness = (-1, -1)
    for a, b in sorted(rot.graph.directed_edges()):
        code, _ = _coords(rot, pos, a, b)
        order = sorted(range(rot.n), key=code.__getitem__)
        s = _serialize(rot, order)
        if best is None or s < best:
            best, witness = s, (a, b)
    if best is None:
        raise GraphError("canonical code needs at least one edge")
    return CanonicalForm(best, witness)


def canonical_code_graph(g: Graph) -> CanonicalForm:
    rot = embed(g)
    left = canonical_code_rotation(rot)
    right = canonical_code_rotation(conjugate(rot))
    if right.code < left.code:
        return CanonicalForm(right.code, right.origin, True)
    return left


def iso_graphs(g: Graph, h: Graph) -> bool:
    return canonical_code_graph(g).code == canonical_code_graph(h).code


def iso_rotations(r: RotationSystem, s: RotationSystem) -> bool:
    """Isomorphism of rotation systems as structures (orientation kept)."""
    return canonical_code_rotation(r).code == canonical_code_rotation(s).code
