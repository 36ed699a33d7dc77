"""Local geometry of configurations in an embedded triconnected graph.

A configuration pins six labeled vertices ``z, w, x, y, u, v`` (``z == w``
for the five-vertex X kind).  Distances ``d0`` only use paths whose inner
vertices avoid the configuration; ``S0(a, b)`` is the union of all such
shortest paths.  Questions about which side of a closed curve a vertex lies
on are answered combinatorially: the faces of the rotation system are glued
across every edge not on the curve, and the two resulting face classes are
the two regions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Literal, Sequence

from .embedding import FaceSet, RotationSystem, faces
from .errors import (
    GeodesicError,
    GeometryInvariantViolation,
    InvalidConfiguration,
    NoIntersection,
    NoStrongIntersection,
    NotTriconnectedWitness,
)
from .graph import (
    INF,
    Graph,
    all_geodesics_avoiding,
    articulation_points,
    bfs_distances,
    connected_components,
    subgraph_block_decomposition,
)

Path = tuple[int, ...]
Kind = Literal["X", "H"]
Shape = Literal["collocated", "twisted", "neither"]


@dataclass(frozen=True)
class Configuration:
    kind: Kind
    z: int
    w: int
    x: int
    y: int
    u: int
    v: int

    @classmethod
    def X(cls, w: int, x: int, y: int, u: int, v: int) -> "Configuration":
        return cls("X", w, w, x, y, u, v)

    @classmethod
    def H(cls, z: int, w: int, x: int, y: int, u: int, v: int) -> "Configuration":
        return cls("H", z, w, x, y, u, v)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.z, self.w, self.x, self.y, self.u, self.v))

    def labels(self) -> dict[str, int]:
        out = {"w": self.w, "x": self.x, "y": self.y, "u": self.u, "v": self.v}
        if self.kind == "H":
            out = {"z": self.z, **out}
        return out

    def swap_xy(self) -> "Configuration":
        return Configuration(self.kind, self.z, self.w, self.y, self.x, self.u, self.v)

    def validate(self, g: Graph) -> None:
        labels = self.labels()
        for name, vtx in labels.items():
            if not 0 <= vtx < g.n:
                raise InvalidConfiguration(f"{name}={vtx} out of range")
        if len(set(labels.values())) != len(labels):
            raise InvalidConfiguration("configuration vertices must be pairwise distinct")
        if self.kind == "X":
            for name in "xyuv":
                if not g.has_edge(self.w, labels[name]):
                    raise InvalidConfiguration(f"{name} is not adjacent to w")
        else:
            if not g.has_edge(self.z, self.w):
                raise InvalidConfiguration("z and w are not adjacent")
            for name, hub in (("x", self.z), ("y", self.z), ("u", self.w), ("v", self.w)):
                if not g.has_edge(hub, labels[name]):
                    raise InvalidConfiguration(f"{name} is not adjacent to its hub")

    def __str__(self) -> str:
        return f"{self.kind}(" + ",".join(str(v) for v in self.labels().values()) + ")"


def classify_configuration(rot: RotationSystem, c: Configuration) -> Shape:
    c.validate(rot.graph)
    if c.kind == "X":
        keep = {c.u, c.x, c.y, c.v}
        order = [b for b in rot.cycle(c.w, c.u) if b in keep]
        if order[1:] in ([c.x, c.y, c.v], [c.v, c.y, c.x]):
            return "collocated"
        if order[1:] in ([c.y, c.x, c.v], [c.v, c.x, c.y]):
            return "twisted"
        return "neither"
    # The two faces through {z, w} pass (pred_z(w), z, w, succ_w(z)) and
    # (succ_z(w), z, w, pred_w(z)).
    left = (rot.p(c.z, c.w), rot.s(c.w, c.z))
    right = (rot.s(c.z, c.w), rot.p(c.w, c.z))

    def fits(x: int, y: int) -> bool:
        return {(x, c.u), (y, c.v)} == {left, right}

    if fits(c.x, c.y):
        return "collocated"
    if fits(c.y, c.x):
        return "twisted"
    return "neither"


def configurations(g: Graph, kind: Kind) -> Iterator[Configuration]:
    """Every labeled configuration of the given kind."""
    if kind == "X":
        for w in range(g.n):
            for x, y, u, v in itertools.permutations(g.adj[w], 4):
                yield Configuration.X(w, x, y, u, v)
        return
    for z, w in sorted(g.directed_edges()):
        zs = [a for a in g.adj[z] if a != w]
        ws = [a for a in g.adj[w] if a != z]
        for x, y in itertools.permutations(zs, 2):
            for u, v in itertools.permutations(ws, 2):
                if len({x, y, u, v}) == 4:
                    yield Configuration.H(z, w, x, y, u, v)


# ---------------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------------


class Regions:
    """Split the sphere along a simple closed walk of vertices."""

    def __init__(self, fs: FaceSet, rot: RotationSystem, cycle: Sequence[int]):
        self.cycle = tuple(cycle)
        on = set(cycle)
        if len(on) != len(cycle):
            raise GeometryInvariantViolation(f"closing walk {cycle} is not a simple cycle")
        cut = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
        parent = list(range(len(fs)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a, b in rot.graph.edges:
            if frozenset((a, b)) in cut:
                continue
            fa, fb = find(fs.dart_face[(a, b)]), find(fs.dart_face[(b, a)])
            if fa != fb:
                parent[fa] = fb
        roots = sorted({find(i) for i in range(len(fs))})
        if len(roots) != 2:
            raise GeometryInvariantViolation(f"cycle {cycle} splits the faces into {len(roots)} classes")
        self._on = on
        self._cut = cut
        self._find = find
        self._fs = fs
        self._adj = rot.graph.adj
        self._roots = roots

    def side(self, v: int) -> int | None:
        """0 or 1 for vertices off the cycle; ``None`` on it."""
        if v in self._on:
            return None
        root = self._find(self._fs.dart_face[(v, self._adj[v][0])])
        return self._roots.index(root)

    def edge_side(self, a: int, b: int) -> int | None:
        """Side of an edge that is not on the cycle."""
        if frozenset((a, b)) in self._cut:
            return None
        return self._roots.index(self._find(self._fs.dart_face[(a, b)]))

    def sides(self, vs: Iterable[int]) -> set[int]:
        return {s for s in (self.side(v) for v in vs) if s is not None}



def segment(path: Path, a: int, b: int) -> Path:
    """Subpath from ``a`` to ``b`` (in that direction)."""
    i, j = path.index(a), path.index(b)
    return path[i : j + 1] if i <= j else path[j : i + 1][::-1]


def nearest_common(path: Path, other: Iterable[int], end: int) -> int | None:
    """First vertex of ``path``, scanning from endpoint ``end``, that lies in
    ``other``; endpoints of ``path`` are skipped."""
    seq = path if path[0] == end else path[::-1]
    pool = set(other)
    for v in seq[1:-1]:
        if v in pool:
            return v
    return None


# ---------------------------------------------------------------------------
# Geodesic systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryPair:
    b1: Path
    b2: Path

    @property
    def singleton(self) -> bool:
        return self.b1 == self.b2


@dataclass(frozen=True)
class SpecialVertices:
    z1: int
    x1: int
    y1: int
    w1: int
    u1: int
    v1: int
    twisted: bool = False

    def as_dict(self) -> dict[str, int]:
        return {"z1": self.z1, "x1": self.x1, "y1": self.y1,
                "w1": self.w1, "u1": self.u1, "v1": self.v1}


@dataclass(frozen=True)
class EssentialDecomposition:
    cutpoints: tuple[int, ...]
    segments: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class ChainLink:
    c: int
    a: int
    b: int
    path: Path
    side: Literal["x", "y", "other"]


@dataclass(frozen=True)
class ExternalChain:
    links: tuple[ChainLink, ...]

    @property
    def m(self) -> int:
        return len(self.links)


@dataclass
class GeodesicSystem:
    """Distances and geodesics avoiding a configuration, plus the embedded
    constructions built from them.  All queries are cached."""

    rot: RotationSystem
    config: Configuration
    _bfs: dict[tuple[int, frozenset[int]], list[float]] = field(default_factory=dict, repr=False)
    _geo: dict[tuple[int, int], list[Path]] = field(default_factory=dict, repr=False)
    _bounds: dict[tuple[int, int], BoundaryPair] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.config.validate(self.rot.graph)
        self.g = self.rot.graph
        self.C = self.config.vertices

    # -- metric ------------------------------------------------------------

    def dist_from(self, a: int, extra: frozenset[int] = frozenset()) -> list[float]:
        key = (a, extra)
        if key not in self._bfs:
            self._bfs[key] = bfs_distances(self.g, a, self.C | extra)
        return self._bfs[key]

    def d0(self, a: int, b: int) -> float:
        return self.dist_from(a)[b]

    def S0(self, a: int, b: int) -> frozenset[int]:
        da, db = self.dist_from(a), self.dist_from(b)
        total = da[b]
        if total == INF:
            return frozenset()
        inner = (c for c in range(self.g.n) if c not in self.C and da[c] + db[c] == total)
        return frozenset(inner) | {a, b}

    def geodesics(self, a: int, b: int) -> list[Path]:
        """Enumerated d0-geodesics (exponential; oracle-grade)."""
        if (a, b) not in self._geo:
            self._geo[(a, b)] = all_geodesics_avoiding(self.g, self.C, a, b)
        return self._geo[(a, b)]

    def one_geodesic(self, a: int, b: int) -> Path:
        """The d0-geodesic that always steps to the smallest admissible id."""
        da, db = self.dist_from(a), self.dist_from(b)
        total = da[b]
        if total == INF:
            raise GeodesicError(f"no path from {a} to {b} avoids the configuration")
        walk = [a]
        while walk[-1] != b:
            cur = walk[-1]
            step = min(
                c for c in self.g.adj[cur]
                if (c == b or c not in self.C) and da[c] == da[cur] + 1 and db[c] == total - da[c]
            )
            walk.append(step)
        return tuple(walk)

    # -- pairs --------------------------------------------------------------

    def _family(self, s: int, t: int) -> tuple[int, int, int]:
        """Which of the two systems ``(s, t)`` belongs to: returns the pair
        endpoints and the reference vertex used to orient boundaries."""
        c = self.config
        for p, q, ref in ((c.x, c.u, c.y), (c.y, c.v, c.x)):
            dpq = self.d0(p, q)
            if dpq == INF:
                continue
            if self.d0(p, s) + self.d0(s, t) + self.d0(t, q) == dpq and s != t:
                if (s in (p, q) or s not in self.C) and (t in (p, q) or t not in self.C):
                    return p, q, ref
        raise GeodesicError(f"{s} and {t} do not lie on a common geodesic of the configuration")

    def closing_cycle(self, p: int, q: int, s: int, t: int, path: Path) -> list[int]:
        """The closed walk ``Q[p,s] path Q[t,q] w z`` through the hubs."""
        c = self.config
        head = self.one_geodesic(p, s)
        tail = self.one_geodesic(t, q)
        walk = list(head[:-1]) + list(path) + list(tail[1:])
        walk.append(c.w)
        if c.z != c.w:
            walk.append(c.z)
        return walk

    @cached_property
    def faceset(self) -> FaceSet:
        return faces(self.rot)

    def regions(self, cycle: Sequence[int]) -> Regions:
        return Regions(self.faceset, self.rot, cycle)

    def boundaries(self, s: int, t: int) -> BoundaryPair:
        """The two boundary geodesics of ``S0(s, t)``.

        ``b1`` is the one whose closing cycle keeps ``S0(s, t)`` on the same
        side as the reference vertex (``y`` for the ``(x, u)`` system, ``x``
        for the ``(y, v)`` system).
        """
        if (s, t) in self._bounds:
            return self._bounds[(s, t)]
        p, q, ref = self._family(s, t)
        paths = self.geodesics(s, t)
        if not paths:
            raise GeodesicError(f"no geodesic from {s} to {t}")
        if len(paths) == 1:
            out = BoundaryPair(paths[0], paths[0])
            self._bounds[(s, t)] = out
            return out
        support = self.S0(s, t)
        found: list[tuple[Path, bool]] = []
        for path in paths:
            reg = self.regions(self.closing_cycle(p, q, s, t, path))
            held = reg.sides(support)
            if len(held) <= 1:
                found.append((path, reg.side(ref) in held))
        if len(found) != 2:
            raise GeometryInvariantViolation(
                f"S0({s},{t}) has {len(found)} boundary paths instead of 2"
            )
        with_ref = [pth for pth, flag in found if flag]
        if len(with_ref) != 1:
            raise GeometryInvariantViolation(f"boundary indices of S0({s},{t}) are ambiguous")
        other = next(pth for pth, flag in found if not flag)
        out = BoundaryPair(with_ref[0], other)
        self._bounds[(s, t)] = out
        return out

    # -- intersection properties ---------------------------------------------

    def _avoidable(self, p: int, q: int, wall: frozenset[int]) -> bool:
        """Is there a d0-geodesic from p to q with no inner point in wall?"""
        return self.dist_from(p, wall - {p, q})[q] == self.d0(p, q)

    def has_intersection_property(self) -> bool:
        c = self.config
        dxu, dyv = self.d0(c.x, c.u), self.d0(c.y, c.v)
        if dxu == INF and dyv == INF:
            return True
        if dxu == INF or dyv == INF:
            return False
        a = self._avoidable(c.x, c.u, self.S0(c.y, c.v))
        b = self._avoidable(c.y, c.v, self.S0(c.x, c.u))
        return not a and not b

    def has_strong_intersection_property_oracle(self) -> bool:
        """Pairwise check over enumerated geodesics."""
        c = self.config
        ps = [set(p[1:-1]) for p in self.geodesics(c.x, c.u)]
        qs = [set(q[1:-1]) for q in self.geodesics(c.y, c.v)]
        return all(p & q for p in ps for q in qs)

    def has_strong_intersection_property(self) -> bool:
        """Every (x,u)-geodesic meets every (y,v)-geodesic in an inner point.
        Checked path-by-path: no (y,v)-geodesic may avoid a given P."""
        c = self.config
        for path in self.geodesics(c.x, c.u):
            if self._avoidable(c.y, c.v, frozenset(path[1:-1]) | {c.x, c.u}):
                return False
        return True

    # -- special vertices ---------------------------------------------------

    def _shape(self) -> Shape:
        return classify_configuration(self.rot, self.config)

    def special_vertices(self) -> SpecialVertices:
        c = self.config
        shape = self._shape()
        if shape == "neither":
            raise InvalidConfiguration("configuration is neither collocated nor twisted")
        if self.d0(c.x, c.u) == INF or self.d0(c.y, c.v) == INF:
            raise NoIntersection("a geodesic system of the configuration is empty")
        if not self.has_intersection_property():
            raise NoIntersection("the two geodesic systems lack the intersection property")
        bxu, byv = self.boundaries(c.x, c.u), self.boundaries(c.y, c.v)

        def pick(path: Path, other: Path, end: int, what: str) -> int:
            got = nearest_common(path, other, end)
            if got is None:
                raise GeometryInvariantViolation(f"{what}: boundaries do not meet")
            return got

        z1 = pick(bxu.b2, byv.b2, c.x, "z1")
        x1 = pick(bxu.b1, byv.b2, c.x, "x1")
        y1 = pick(byv.b1, bxu.b2, c.y, "y1")
        if shape == "collocated":
            w1 = pick(bxu.b2, byv.b2, c.u, "w1")
            u1 = pick(bxu.b1, byv.b2, c.u, "u1")
            v1 = pick(byv.b1, bxu.b2, c.v, "v1")
        else:
            w1 = pick(bxu.b1, byv.b1, c.u, "w1")
            u1 = pick(bxu.b2, byv.b1, c.u, "u1")
            v1 = pick(byv.b2, bxu.b1, c.v, "v1")
        return SpecialVertices(z1, x1, y1, w1, u1, v1, shape == "twisted")

    def entrances(self, side: Literal["x", "y", "u", "v"]) -> frozenset[int]:
        """Vertices ``e`` of both supports reachable from ``side`` by a
        shortest path that avoids the opposite support."""
        c = self.config
        if not self.has_intersection_property() or self.d0(c.x, c.u) == INF:
            raise NoIntersection("the two geodesic systems lack the intersection property")
        own, far = (c.x, c.u), (c.y, c.v)
        if side in ("y", "v"):
            own, far = far, own
        start = {"x": c.x, "u": c.u, "y": c.y, "v": c.v}[side]
        wall = self.S0(*far)
        both = self.S0(*own) & wall
        out = set()
        for e in both:
            via = self.dist_from(start, wall - {start, e})
            if via[e] == self.d0(start, e):
                out.add(e)
        return frozenset(out)

    # -- block structure ------------------------------------------------------

    def block_tree_is_path(self, s: int, t: int) -> bool:
        return subgraph_block_decomposition(self.g, self.S0(s, t)).is_path()

    def cutpoints(self, s: int, t: int) -> frozenset[int]:
        sub, old = self.g.induced(self.S0(s, t))
        return frozenset(old[v] for v in articulation_points(sub))

    @cached_property
    def H(self) -> frozenset[int]:
        c = self.config
        return self.S0(c.x, c.u) | self.S0(c.y, c.v)

    @cached_property
    def H_edges(self) -> frozenset[tuple[int, int]]:
        """Edges inside one of the two supports.  Chords joining the two
        supports (such as an edge x-v) are not part of H; they count as
        external paths instead."""
        c = self.config
        out = set()
        for part in (self.S0(c.x, c.u), self.S0(c.y, c.v)):
            out.update(e for e in self.g.edges if e[0] in part and e[1] in part)
        return frozenset(out)

    def H_cutpoints(self) -> frozenset[int]:
        old = sorted(self.H)
        index = {v: i for i, v in enumerate(old)}
        sub = Graph(len(old), ((index[a], index[b]) for a, b in self.H_edges))
        return frozenset(old[v] for v in articulation_points(sub))

    def essential_decomposition(self) -> EssentialDecomposition:
        c = self.config
        sv = self.special_vertices()
        bxu, byv = self.boundaries(c.x, c.u), self.boundaries(c.y, c.v)
        if nearest_common(bxu.b1, byv.b1, c.x) is None:
            raise NoStrongIntersection("B1(x,u) and B1(y,v) do not touch")
        cut_h = self.H_cutpoints()
        cut_zw = self.cutpoints(sv.z1, sv.w1)
        ess = [
            e for e in cut_h
            if e in cut_zw or e == sv.x1 == sv.y1 == sv.z1 or e == sv.u1 == sv.v1 == sv.w1
        ]
        ess.sort(key=lambda e: self.d0(sv.z1, e))
        dists = [self.d0(sv.z1, e) for e in ess]
        if not ess:
            raise GeometryInvariantViolation("strong intersection without essential cutpoints")
        if any(a >= b for a, b in zip(dists, dists[1:])):
            raise GeometryInvariantViolation("essential cutpoints share a d0 level")
        segs = [self.S0(c.x, ess[0]) | self.S0(c.y, ess[0])]
        for a, b in zip(ess, ess[1:]):
            segs.append(self.S0(a, b))
        segs.append(self.S0(ess[-1], c.u) | self.S0(ess[-1], c.v))
        return EssentialDecomposition(tuple(ess), tuple(segs))

    # -- external paths -------------------------------------------------------

    def side_paths(self) -> tuple[Path, Path]:
        """The x-side and y-side of H as paths."""
        c = self.config
        bxu, byv = self.boundaries(c.x, c.u), self.boundaries(c.y, c.v)
        if self._shape() == "collocated":
            return bxu.b1, byv.b1
        sv = self.special_vertices()
        xs = segment(bxu.b1, c.x, sv.v1) + segment(byv.b2, sv.v1, c.v)[1:]
        ys = segment(byv.b1, c.y, sv.u1) + segment(bxu.b2, sv.u1, c.u)[1:]
        return xs, ys

    def external_links(self) -> list[tuple[int, int, Path, str]]:
        """All pairs of H-vertices joined through a component of
        ``G - H - {z, w}``, with one witness path and its side."""
        c = self.config
        hv = self.H
        fence = hv | {c.z, c.w}
        xs, ys = self.side_paths()
        hubs = [c.w] if c.z == c.w else [c.w, c.z]
        xreg = self.regions(list(xs) + hubs)
        yreg = self.regions(list(ys) + hubs)
        x_out = 1 - xreg.side(c.y)  # type: ignore[operator]
        y_out = 1 - yreg.side(c.x)  # type: ignore[operator]
        out = []
        for comp in connected_components(self.g, fence):
            inside = set(comp)
            att = sorted({a for v in comp for a in self.g.adj[v] if a in hv})
            probe = comp[0]
            if xreg.side(probe) == x_out:
                side = "x"
            elif yreg.side(probe) == y_out:
                side = "y"
            else:
                side = "other"
            for a, b in itertools.permutations(att, 2):
                out.append((a, b, self._through(a, b, inside), side))
        for a, b in sorted(self.g.edges):
            if a in hv and b in hv and (a, b) not in self.H_edges:
                if xreg.edge_side(a, b) == x_out:
                    side = "x"
                elif yreg.edge_side(a, b) == y_out:
                    side = "y"
                else:
                    side = "other"
                out += [(a, b, (a, b), side), (b, a, (b, a), side)]
        return out

    def _through(self, a: int, b: int, inside: set[int]) -> Path:
        parent: dict[int, int] = {}
        frontier = [v for v in self.g.adj[a] if v in inside]
        for v in frontier:
            parent[v] = a
        i = 0
        while i < len(frontier):
            cur = frontier[i]
            i += 1
            if b in self.g.adj[cur]:
                walk = [b, cur]
                while walk[-1] != a:
                    walk.append(parent[walk[-1]])
                return tuple(walk[::-1])
            for nxt in self.g.adj[cur]:
                if nxt in inside and nxt not in parent:
                    parent[nxt] = cur
                    frontier.append(nxt)
        raise GeometryInvariantViolation(f"component does not join {a} and {b}")

    def segment_levels(self, dec: EssentialDecomposition) -> dict[int, int]:
        """Position of each vertex of H along the chain of segments: a
        vertex inside segment ``j`` gets ``2j``, the cutpoint ``e_(i+1)``
        gets ``2i + 1``."""
        level: dict[int, int] = {}
        for i, e in enumerate(dec.cutpoints):
            level[e] = 2 * i + 1
        for j, seg in enumerate(dec.segments):
            for a in seg:
                if a not in level:
                    level[a] = 2 * j
                elif level[a] % 2 == 0 and level[a] != 2 * j:
                    raise GeometryInvariantViolation(f"{a} lies in two segments")
        missing = self.H - set(level)
        if missing:
            raise GeometryInvariantViolation(f"vertices {sorted(missing)} lie in no segment")
        return level

    def external_chain(self) -> ExternalChain:
        """The sequence of external paths that bypass the essential
        cutpoints one after the other.

        A link around cutpoint ``c`` joins a vertex before ``c`` to a vertex
        after ``c`` in the segment order of H.  Preference: keep the side of
        the previous link (x-side first for the opening link), then the
        latest possible start, then the latest possible end, measured by
        segment position and then by ``d0`` from x; remaining ties go to the
        smallest vertex ids.
        """
        c = self.config
        dec = self.essential_decomposition()
        sv = self.special_vertices()
        ess = dec.cutpoints
        l = len(ess)
        level = self.segment_levels(dec)
        links = self.external_links()
        dx = self.dist_from(c.x)
        order = {"x": 0, "y": 1, "other": 2}

        def choose(cut: int, prefer: str | None) -> ChainLink:
            lc = level[cut]
            cands = [t for t in links if level[t[0]] < lc < level[t[1]]]
            if not cands:
                if len(connected_components(self.g, (c.z, cut))) > 1:
                    raise NotTriconnectedWitness((c.z, cut))
                raise GeometryInvariantViolation(f"no external path bypasses {cut}")
            if prefer is None:
                best_side = min(order[t[3]] for t in cands)
                if best_side < 2:
                    cands = [t for t in cands if order[t[3]] == best_side]
            elif prefer in ("x", "y") and any(t[3] == prefer for t in cands):
                cands = [t for t in cands if t[3] == prefer]
            a, b, path, side = min(
                cands,
                key=lambda t: (-level[t[0]], -dx[t[0]], -level[t[1]], -dx[t[1]], t[0], t[1], t[2]),
            )
            return ChainLink(cut, a, b, path, side)  # type: ignore[arg-type]

        chain = [choose(ess[0], None)]
        while True:
            b = chain[-1].b
            if level[b] == 2 * l:
                break
            if len(chain) >= l:
                raise GeometryInvariantViolation("external chain does not terminate")
            nxt = b if level[b] % 2 == 1 else ess[level[b] // 2]
            chain.append(choose(nxt, chain[-1].side))
        if not len(chain) <= l <= self.d0(sv.z1, sv.w1) + 1:
            raise GeometryInvariantViolation("chain length bound violated")
        return ExternalChain(tuple(chain))


def d0_all_pairs(rot: RotationSystem, c: Configuration) -> GeodesicSystem:
    return GeodesicSystem(rot, c)


def boundaries(rot: RotationSystem, c: Configuration, s: int, t: int) -> BoundaryPair:
    return GeodesicSystem(rot, c).boundaries(s, t)


def special_vertices(rot: RotationSystem, c: Configuration) -> SpecialVertices:
    return GeodesicSystem(rot, c).special_vertices()


def entrances(rot: RotationSystem, c: Configuration, side: Literal["x", "y", "u", "v"]) -> frozenset[int]:
    return GeodesicSystem(rot, c).entrances(side)


def essential_decomposition(rot: RotationSystem, c: Configuration) -> EssentialDecomposition:
    return GeodesicSystem(rot, c).essential_decomposition()


def external_chain(rot: RotationSystem, c: Configuration) -> ExternalChain:
    return GeodesicSystem(rot, c).external_chain()
