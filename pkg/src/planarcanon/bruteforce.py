"""Exhaustive reference computations for small inputs, used by the check
suites to cross-examine the fast algorithms."""

from __future__ import annotations

import itertools

from .embedding import RotationSystem
from .graph import Graph, bfs_distances


def isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking search for an adjacency-preserving bijection."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    image = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for c in range(h.n):
            if used[c] or h.degree(c) != g.degree(v):
                continue
            if all(g.has_edge(v, order[j]) == h.has_edge(c, image[order[j]]) for j in range(i)):
                image[v], used[c] = c, True
                if extend(i + 1):
                    return True
                used[c] = False
        image[v] = -1
        return False

    return extend(0)


def coordinates(rot: RotationSystem, a: int, b: int) -> list[tuple[int, ...]]:
    """Minimum code over every enumerated shortest path from ``a``."""
    g = rot.graph
    dist = bfs_distances(g, a)
    pos = [{x: i for i, x in enumerate(rot.cycle(v))} for v in range(g.n)]

    def local(x: int, y: int, z: int) -> int:
        return (pos[x][z] - pos[x][y]) % len(pos[x])

    best: list[tuple[int, ...] | None] = [None] * g.n
    best[a] = ()

    def walk(path: list[int], code: tuple[int, ...]) -> None:
        v = path[-1]
        cur = best[v]
        if cur is None or code < cur:
            best[v] = code
        for w in g.adj[v]:
            if dist[w] == dist[v] + 1:
                back = b if len(path) == 1 else path[-2]
                walk(path + [w], code + (local(v, back, w),))

    walk([a], ())
    return [c if c is not None else () for c in best]


def all_rotation_systems(g: Graph) -> itertools.product:
    """Every rotation system of ``g`` as a tuple of neighbor cycles."""
    options = []
    for v in range(g.n):
        nb = list(g.adj[v])
        options.append([(nb[0], *rest) for rest in itertools.permutations(nb[1:])] if nb else [()])
    return itertools.product(*options)
