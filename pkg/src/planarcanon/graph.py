"""Simple undirected graphs over dense integer vertex ids, plus the metric and
connectivity queries the rest of the package is built on."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedGraph, GraphError

# Distance between vertices in different components.  Compares greater than
# every int and equals nothing but itself.
INF = math.inf

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the ascending tuple of neighbors of ``v``.
    """

    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            key = _norm(u, v)
            if key in seen:
                raise GraphError(f"parallel edge {u}-{v}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def directed_edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            for v in self.adj[u]:
                yield (u, v)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep``; returns it with the new-to-old id map."""
        old = sorted(set(keep))
        index = {v: i for i, v in enumerate(old)}
        sub = Graph(
            len(old),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )
        return sub, old

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")


# ---------------------------------------------------------------------------
# Metric
# ---------------------------------------------------------------------------


def bfs_distances(
    g: Graph, source: int, blocked: frozenset[int] | set[int] = frozenset()
) -> list[float]:
    """Single-source distances where vertices in ``blocked`` may be reached
    but never passed through (they can only end a path).  The source itself
    is always expanded."""
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u != source and u in blocked:
            continue
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    g.check_vertex(u)
    g.check_vertex(v)
    return bfs_distances(g, u)[v]


def all_pairs_distances(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d != INF for d in bfs_distances(g, 0))


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    gone = set(removed)
    comp = [-1] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if s in gone or comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in gone and comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    stack.append(w)
        out.append(sorted(members))
    return out


def geodesic_dag(
    g: Graph, u: int, v: int, avoid: frozenset[int] | set[int] = frozenset()
) -> tuple[float, list[float], list[float]]:
    """Distances from ``u`` and to ``v`` under the avoidance rule, and the
    u-v distance.  A vertex ``c`` lies on some shortest avoiding path iff it is
    an endpoint or ``c`` is not in ``avoid`` and the two distances add up."""
    du = bfs_distances(g, u, avoid)
    dv = bfs_distances(g, v, avoid)
    return du[v], du, dv


def all_geodesics_avoiding(
    g: Graph, avoid: Iterable[int], u: int, v: int
) -> list[tuple[int, ...]]:
    """Every minimum-length u-v path with no inner vertex in ``avoid``.

    Output is exponential in general; meant for small graphs.  Paths are
    returned in lexicographic order.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    blocked = frozenset(avoid)
    total, du, dv = geodesic_dag(g, u, v, blocked)
    if total == INF:
        return []
    if u == v:
        return [(u,)]

    def on_geodesic(c: int) -> bool:
        if c == u or c == v:
            return True
        return c not in blocked and du[c] + dv[c] == total

    out: list[tuple[int, ...]] = []
    path = [u]

    def walk(x: int) -> None:
        if x == v:
            out.append(tuple(path))
            return
        for w in g.adj[x]:
            if du[w] == du[x] + 1 and on_geodesic(w) and dv[w] == dv[x] - 1:
                path.append(w)
                walk(w)
                path.pop()

    walk(u)
    return out


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------


def _local_vertex_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths, stopping at ``cap``.

    Unit-capacity max flow on the split graph: vertex ``x`` becomes
    ``2x -> 2x+1`` (capacity 1 except at s and t).
    """
    n = g.n
    residual: dict[int, dict[int, int]] = {i: {} for i in range(2 * n)}

    def add(a: int, b: int, c: int) -> None:
        residual[a][b] = residual[a].get(b, 0) + c
        residual[b].setdefault(a, 0)

    big = n + 1
    for x in range(n):
        add(2 * x, 2 * x + 1, big if x in (s, t) else 1)
    for a, b in g.edges:
        add(2 * a + 1, 2 * b, big)
        add(2 * b + 1, 2 * a, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in residual[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            residual[x][y] -= 1
            residual[y][x] += 1
            y = x
        flow += 1
    return flow


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has at least k+1 vertices and stays connected after
    deleting any k-1 of them (Menger: k disjoint paths between non-adjacent
    pairs)."""
    if k < 1:
        raise GraphError("k must be positive")
    if g.n < k + 1:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if any(g.degree(v) < k for v in range(g.n)):
        return False
    # Even's reduction: any separator of size < k misses one of the vertices
    # 0..k-1, so testing pairs that involve one of them suffices.  For an
    # adjacent pair the edge is dropped and one fewer path is required.
    for i in range(k):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                h = Graph(g.n, (e for e in g.edges if e != _norm(i, j)))
                if _local_vertex_connectivity(h, i, j, k - 1) < k - 1:
                    return False
            elif _local_vertex_connectivity(g, i, j, k) < k:
                return False
    return True


def articulation_points(g: Graph) -> set[int]:
    """Vertices whose removal increases the number of components."""
    return set(_biconnected(g)[1])


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cutpoints: frozenset[int]
    # Adjacency among block indices; ``None`` when some cutpoint lies in
    # three or more blocks.
    block_tree: tuple[frozenset[int], ...] | None

    def is_path(self) -> bool:
        """Simple cut-block relation and the block-tree is a path."""
        if self.block_tree is None:
            return False
        degs = [len(nb) for nb in self.block_tree]
        if len(degs) <= 1:
            return True
        return max(degs) <= 2 and degs.count(1) == 2


def _biconnected(g: Graph) -> tuple[list[frozenset[int]], list[int]]:
    """Iterative Hopcroft-Tarjan.  Returns blocks (as vertex sets) and
    articulation points.  Isolated vertices form singleton blocks."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            blocks.append(frozenset([root]))
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(g.adj[root]))]
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.adj[w])))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    if parent != root:
                        cuts.add(parent)
                    comp: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (parent, u):
                            break
                    blocks.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    return blocks, sorted(cuts)


def block_decomposition(g: Graph) -> BlockDecomposition:
    if not is_connected(g):
        raise DisconnectedGraph("block decomposition needs a connected graph")
    blocks, cuts = _biconnected(g)
    blocks.sort(key=lambda b: sorted(b))
    membership: dict[int, list[int]] = {c: [] for c in cuts}
    for i, b in enumerate(blocks):
        for c in cuts:
            if c in b:
                membership[c].append(i)
    tree: tuple[frozenset[int], ...] | None
    if all(len(ms) <= 2 for ms in membership.values()):
        nbrs: list[set[int]] = [set() for _ in blocks]
        for ms in membership.values():
            for i, j in itertools.combinations(ms, 2):
                nbrs[i].add(j)
                nbrs[j].add(i)
        tree = tuple(frozenset(s) for s in nbrs)
    else:
        tree = None
    return BlockDecomposition(tuple(blocks), frozenset(cuts), tree)


def subgraph_block_decomposition(g: Graph, keep: Iterable[int]) -> BlockDecomposition:
    """Block decomposition of ``G[keep]`` expressed in ``g``'s vertex ids."""
    sub, old = g.induced(keep)
    bd = block_decomposition(sub)
    return BlockDecomposition(
        tuple(frozenset(old[v] for v in b) for b in bd.blocks),
        frozenset(old[v] for v in bd.cutpoints),
        bd.block_tree,
    )
