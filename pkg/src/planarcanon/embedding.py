"""Rotation systems, layout systems, face tracing, and the planar embedding
of triconnected graphs.

A rotation system stores, for each vertex ``a``, the clockwise successor map
``succ[a]`` on its neighbors.  Faces are traced with the rule: after arriving
at ``v`` along ``(u, v)`` continue with ``(v, succ[v][u])``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DisconnectedGraph, InvalidRotation, NotPlanar, NotTriconnected
from .graph import Graph, connected_components, is_connected, is_k_connected

Quad = tuple[int, int, int, int]


@dataclass(frozen=True)
class RotationViolation:
    vertex: int
    reason: str


@dataclass(frozen=True, eq=False)
class RotationSystem:
    """A graph with a cyclic successor order at every vertex.

    ``succ[a]`` maps each neighbor of ``a`` to the next one clockwise.  The
    object may hold an invalid map; call :func:`validate_rotation` (or build
    through :meth:`from_cycles`, which validates) before relying on it.
    """

    graph: Graph
    succ: tuple[Mapping[int, int], ...]
    _pred: tuple[dict[int, int], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        frozen = tuple(dict(m) for m in self.succ)
        object.__setattr__(self, "succ", frozen)
        object.__setattr__(
            self, "_pred", tuple({c: b for b, c in m.items()} for m in frozen)
        )

    @classmethod
    def from_cycles(cls, graph: Graph, cycles: Sequence[Sequence[int]]) -> "RotationSystem":
        """Build from per-vertex neighbor lists in clockwise order."""
        if len(cycles) != graph.n:
            raise InvalidRotation(len(cycles), "wrong number of vertex cycles")
        succ = []
        for cyc in cycles:
            succ.append({cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))})
        rot = cls(graph, tuple(succ))
        bad = validate_rotation(rot)
        if bad is not None:
            raise InvalidRotation(bad.vertex, bad.reason)
        return rot

    @property
    def n(self) -> int:
        return self.graph.n

    def s(self, a: int, b: int) -> int:
        """Successor of ``b`` around ``a``."""
        return self.succ[a][b]

    def p(self, a: int, b: int) -> int:
        """Predecessor of ``b`` around ``a``."""
        return self._pred[a][b]

    def cycle(self, a: int, start: int | None = None) -> tuple[int, ...]:
        """Neighbors of ``a`` in clockwise order from ``start`` (default: the
        smallest neighbor)."""
        m = self.succ[a]
        if not m:
            return ()
        cur = min(m) if start is None else start
        out = [cur]
        for _ in range(len(m) - 1):
            cur = m[cur]
            out.append(cur)
        return tuple(out)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.cycle(a) for a in range(self.n))

    def _key(self) -> tuple:
        return (self.graph.n, self.graph.edges, tuple(tuple(sorted(m.items())) for m in self.succ))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def relabel(self, perm: Sequence[int]) -> "RotationSystem":
        succ: list[dict[int, int]] = [{} for _ in range(self.n)]
        for a in range(self.n):
            succ[perm[a]] = {perm[b]: perm[c] for b, c in self.succ[a].items()}
        return RotationSystem(self.graph.relabel(perm), tuple(succ))


def validate_rotation(rot: RotationSystem, min_degree: int = 3) -> RotationViolation | None:
    """Return ``None`` if every ``succ[a]`` is a single cycle on exactly the
    neighborhood of ``a`` and every degree is at least ``min_degree``;
    otherwise describe the first offending vertex."""
    g = rot.graph
    if len(rot.succ) != g.n:
        return RotationViolation(min(len(rot.succ), g.n), "succ table size differs from n")
    for a in range(g.n):
        m = rot.succ[a]
        nbrs = set(g.adj[a])
        if len(nbrs) < min_degree:
            return RotationViolation(a, f"degree {len(nbrs)} below {min_degree}")
        if set(m) != nbrs:
            extra = sorted(set(m) - nbrs)
            what = f"non-neighbor {extra[0]}" if extra else "missing neighbor"
            return RotationViolation(a, f"succ domain mismatch ({what})")
        if set(m.values()) != nbrs:
            return RotationViolation(a, "succ is not a permutation of the neighborhood")
        start = next(iter(m))
        cur, steps = m[start], 1
        while cur != start:
            cur = m[cur]
            steps += 1
        if steps != len(m):
            return RotationViolation(a, "succ splits into more than one cycle")
    return None


def conjugate(rot: RotationSystem) -> RotationSystem:
    return RotationSystem(rot.graph, tuple({c: b for b, c in m.items()} for m in rot.succ))


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceSet:
    """Faces as closed walks of vertices; ``faces[i][j] -> faces[i][j+1]`` are
    the directed edges of face ``i`` (wrapping around)."""

    faces: tuple[tuple[int, ...], ...]
    dart_face: Mapping[tuple[int, int], int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.faces)

    def darts(self, i: int) -> list[tuple[int, int]]:
        f = self.faces[i]
        return [(f[j], f[(j + 1) % len(f)]) for j in range(len(f))]


def faces(rot: RotationSystem) -> FaceSet:
    bad = validate_rotation(rot, min_degree=1)
    if bad is not None:
        raise InvalidRotation(bad.vertex, bad.reason)
    if not is_connected(rot.graph):
        raise DisconnectedGraph("face tracing needs a connected graph")
    dart_face: dict[tuple[int, int], int] = {}
    out: list[tuple[int, ...]] = []
    for start in sorted(rot.graph.directed_edges()):
        if start in dart_face:
            continue
        idx = len(out)
        walk = []
        u, v = start
        while (u, v) not in dart_face:
            dart_face[(u, v)] = idx
            walk.append(u)
            u, v = v, rot.s(v, u)
        out.append(tuple(walk))
    return FaceSet(tuple(out), dart_face)


def genus_check(rot: RotationSystem) -> int:
    """V - E + F; equal to 2 exactly for embeddings in the sphere."""
    g = rot.graph
    return g.n - g.m + len(faces(rot))


# ---------------------------------------------------------------------------
# Layout systems
# ---------------------------------------------------------------------------


def _canon_quad(q: Quad) -> Quad:
    r = (q[3], q[2], q[1], q[0])
    return min(q, r)


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class LayoutSystem:
    """Undirected cyclic orders plus facial-continuation quadruples.

    ``cyc[a]`` is the edge set of an undirected cycle on the neighbors of
    ``a``.  Quadruples are stored in canonical form: a quadruple and its
    reversal are the same entry and the smaller tuple represents both.
    """

    graph: Graph
    cyc: tuple[frozenset[tuple[int, int]], ...]
    quad: frozenset[Quad]

    def __init__(self, graph: Graph, cyc: Iterable[Iterable[tuple[int, int]]], quad: Iterable[Quad]):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(
            self, "cyc", tuple(frozenset(_pair(b, c) for b, c in pairs) for pairs in cyc)
        )
        object.__setattr__(self, "quad", frozenset(_canon_quad(tuple(q)) for q in quad))

    def cyc_neighbors(self, a: int, b: int) -> tuple[int, ...]:
        return tuple(sorted(c if d == b else d for c, d in self.cyc[a] if b in (c, d)))

    def quads_through(self, a1: int, a2: int) -> list[Quad]:
        """Quadruples with middle pair ``(a1, a2)``, read in that direction."""
        out = []
        for q in self.quad:
            if q[1] == a1 and q[2] == a2:
                out.append(q)
            elif q[2] == a1 and q[1] == a2:
                out.append((q[3], q[2], q[1], q[0]))
        return sorted(out)


def layout_of(rot: RotationSystem) -> LayoutSystem:
    g = rot.graph
    cyc = [[(b, rot.s(a, b)) for b in g.adj[a]] for a in range(g.n)]
    quads = []
    for a1, a2 in g.directed_edges():
        quads.append((rot.p(a1, a2), a1, a2, rot.s(a2, a1)))
        quads.append((rot.s(a1, a2), a1, a2, rot.p(a2, a1)))
    return LayoutSystem(g, cyc, quads)


def validate_layout(lay: LayoutSystem) -> RotationViolation | None:
    g = lay.graph
    for a in range(g.n):
        nbrs = g.adj[a]
        if len(nbrs) < 3:
            return RotationViolation(a, f"degree {len(nbrs)} below 3")
        pairs = lay.cyc[a]
        touched = {x for p in pairs for x in p}
        if touched != set(nbrs) or len(pairs) != len(nbrs):
            return RotationViolation(a, "cyc is not a cycle on the neighborhood")
        for b in nbrs:
            if len(lay.cyc_neighbors(a, b)) != 2:
                return RotationViolation(a, "cyc is not a cycle on the neighborhood")
        # connectedness of the 2-regular graph: walk from one neighbor
        start = nbrs[0]
        prev, cur, steps = None, start, 0
        while True:
            nxt = [c for c in lay.cyc_neighbors(a, cur) if c != prev][0]
            prev, cur = cur, nxt
            steps += 1
            if cur == start:
                break
        if steps != len(nbrs):
            return RotationViolation(a, "cyc splits into more than one cycle")
    counts: dict[tuple[int, int], int] = {}
    for q in lay.quad:
        b1, a1, a2, b2 = q
        if not g.has_edge(a1, a2):
            return RotationViolation(a1, f"quadruple {q} on a non-edge")
        if b1 not in lay.cyc_neighbors(a1, a2) or b2 not in lay.cyc_neighbors(a2, a1):
            return RotationViolation(a1, f"quadruple {q} does not follow cyc")
        counts[_pair(a1, a2)] = counts.get(_pair(a1, a2), 0) + 1
    for e in g.edges:
        if counts.get(e, 0) != 2:
            return RotationViolation(e[0], f"edge {e} extends to {counts.get(e, 0)} quadruples")
    return None


@dataclass(frozen=True)
class LayoutInconsistency:
    """Two orientation propagations that disagree at ``vertex``."""

    vertex: int
    path_a: tuple[int, ...]
    path_b: tuple[int, ...]
    reason: str


def _orient_from(lay: LayoutSystem, a: int, b: int, c: int) -> dict[int, int]:
    """The successor map at ``a`` in which ``c`` follows ``b``."""
    order = [b, c]
    while len(order) < len(lay.graph.adj[a]):
        nxt = [d for d in lay.cyc_neighbors(a, order[-1]) if d != order[-2]][0]
        order.append(nxt)
    return {order[i]: order[(i + 1) % len(order)] for i in range(len(order))}


def rotations_of_layout(
    lay: LayoutSystem,
) -> tuple[RotationSystem, RotationSystem] | LayoutInconsistency:
    """Recover the two conjugate rotation systems whose layout is ``lay``.

    The smallest vertex is oriented so that its smallest neighbor is followed
    by the smaller of that neighbor's two cyc-neighbors; orientations are then
    pushed across edges breadth-first.  Every edge is checked in both
    directions, and a disagreement is reported with the two tree paths that
    produced it.
    """
    g = lay.graph
    bad = validate_layout(lay)
    if bad is not None:
        return LayoutInconsistency(bad.vertex, (bad.vertex,), (bad.vertex,), bad.reason)
    if not is_connected(g):
        raise DisconnectedGraph("layout propagation needs a connected graph")
    succ: list[dict[int, int] | None] = [None] * g.n
    path: list[tuple[int, ...]] = [()] * g.n
    seed = 0
    b0 = g.adj[seed][0]
    succ[seed] = _orient_from(lay, seed, b0, min(lay.cyc_neighbors(seed, b0)))
    path[seed] = (seed,)

    def implied(a1: int, a2: int) -> dict[int, int] | None:
        orient = succ[a1]
        assert orient is not None
        pred_a2 = next(b for b, c in orient.items() if c == a2)
        hits = [q for q in lay.quads_through(a1, a2) if q[0] == pred_a2]
        if len(hits) != 1:
            return None
        return _orient_from(lay, a2, a1, hits[0][3])

    queue = deque([seed])
    while queue:
        a1 = queue.popleft()
        for a2 in g.adj[a1]:
            want = implied(a1, a2)
            if want is None:
                return LayoutInconsistency(
                    a2, path[a1] + (a2,), path[a1], "no unique quadruple continues the orientation"
                )
            if succ[a2] is None:
                succ[a2] = want
                path[a2] = path[a1] + (a2,)
                queue.append(a2)
            elif succ[a2] != want:
                return LayoutInconsistency(
                    a2, path[a2], path[a1] + (a2,), "propagated orientations disagree"
                )
    rot = RotationSystem(g, tuple(s for s in succ if s is not None))
    if layout_of(rot) != lay:
        extra = sorted(lay.quad - layout_of(rot).quad)
        v = extra[0][1] if extra else seed
        return LayoutInconsistency(v, path[v], path[v], "quadruple set not realized")
    return rot, conjugate(rot)


# ---------------------------------------------------------------------------
# Embedding by path addition
# ---------------------------------------------------------------------------


def _shortest_cycle_through(g: Graph, u: int, v: int) -> list[int]:
    """Shortest cycle containing edge uv, as a vertex list starting at u."""
    parent = {v: v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if x == u:
            break
        for y in g.adj[x]:
            if (x, y) in ((v, u),):
                continue
            if y not in parent:
                parent[y] = x
                queue.append(y)
    walk = [u]
    while walk[-1] != v:
        walk.append(parent[walk[-1]])
    return walk


@dataclass
class _Fragment:
    attachments: frozenset[int]
    vertices: frozenset[int]  # interior vertices (empty for a chord)
    chord: tuple[int, int] | None


def _fragments(g: Graph, placed: set[int], placed_edges: set[tuple[int, int]]) -> list[_Fragment]:
    out: list[_Fragment] = []
    for e in sorted(g.edges):
        if e not in placed_edges and e[0] in placed and e[1] in placed:
            out.append(_Fragment(frozenset(e), frozenset(), e))
    for comp in connected_components(g, placed):
        att = frozenset(w for c in comp for w in g.adj[c] if w in placed)
        out.append(_Fragment(att, frozenset(comp), None))
    return out


def _fragment_path(g: Graph, frag: _Fragment) -> list[int]:
    if frag.chord is not None:
        return list(frag.chord)
    a = min(frag.attachments)
    # BFS through the interior from a to any other attachment
    parent: dict[int, int] = {}
    queue: deque[int] = deque()
    for c in g.adj[a]:
        if c in frag.vertices and c not in parent:
            parent[c] = a
            queue.append(c)
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in frag.attachments and y != a:
                walk = [y, x]
                while walk[-1] != a:
                    walk.append(parent[walk[-1]])
                return walk[::-1]
            if y in frag.vertices and y not in parent:
                parent[y] = x
                queue.append(y)
    raise NotTriconnected("fragment with a single attachment")


def embed(g: Graph) -> RotationSystem:
    """A sphere embedding of a triconnected planar graph.

    Deterministic: the starting cycle, fragment order and face order depend
    only on vertex ids.
    """
    if not is_k_connected(g, 3):
        raise NotTriconnected(f"graph with n={g.n}, m={g.m} is not 3-connected")
    if g.m > 3 * g.n - 6:
        raise NotPlanar(f"m={g.m} exceeds 3n-6={3 * g.n - 6}")
    u0 = 0
    cycle = _shortest_cycle_through(g, u0, g.adj[u0][0])
    face_list: list[list[int]] = [cycle, cycle[::-1]]
    placed = set(cycle)
    placed_edges = {
        (min(cycle[i], cycle[i - 1]), max(cycle[i], cycle[i - 1])) for i in range(len(cycle))
    }
    while len(placed_edges) < g.m:
        frags = _fragments(g, placed, placed_edges)
        face_sets = [set(f) for f in face_list]
        admissible = [[i for i, fs in enumerate(face_sets) if f.attachments <= fs] for f in frags]
        for adm in admissible:
            if not adm:
                raise NotPlanar("a fragment fits in no face")
        pick = next((i for i, adm in enumerate(admissible) if len(adm) == 1), 0)
        fi = admissible[pick][0]
        p = _fragment_path(g, frags[pick])
        f = face_list[fi]
        i, j = f.index(p[0]), f.index(p[-1])
        inner = p[1:-1]
        if i <= j:
            arc_ab, arc_ba = f[i : j + 1], f[j:] + f[: i + 1]
        else:
            arc_ab, arc_ba = f[i:] + f[: j + 1], f[j : i + 1]
        face_list[fi] = arc_ab + inner[::-1]
        face_list.append(arc_ba + inner)
        placed.update(inner)
        for k in range(len(p) - 1):
            placed_edges.add((min(p[k], p[k + 1]), max(p[k], p[k + 1])))
    succ: list[dict[int, int]] = [{} for _ in range(g.n)]
    for f in face_list:
        L = len(f)
        for k in range(L):
            u, v, w = f[k - 1], f[k], f[(k + 1) % L]
            succ[v][u] = w
    rot = RotationSystem(g, tuple(succ))
    if validate_rotation(rot) is not None or genus_check(rot) != 2:
        raise NotPlanar("path addition did not close into a sphere embedding")
    return rot
