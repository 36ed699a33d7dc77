"""Deterministic generators for triconnected planar test graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphError
from .graph import Graph

PLATONIC = ("tetra", "cube", "octa", "dodeca", "icosa")
FAMILIES = ("wheel", "prism", "antiprism", "platonic", "stacked-triangulation")


def wheel(k: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..k."""
    if k < 3:
        raise GraphError("wheel needs k >= 3")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph(k + 1, edges)


def prism(k: int) -> Graph:
    if k < 3:
        raise GraphError("prism needs k >= 3")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i)]
    return Graph(2 * k, edges)


def antiprism(k: int) -> Graph:
    if k < 3:
        raise GraphError("antiprism needs k >= 3")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i), (j, k + i)]
    return Graph(2 * k, edges)


def platonic(name: str) -> Graph:
    if name == "tetra":
        return Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    if name == "cube":
        return Graph(8, [(i, i ^ bit) for i in range(8) for bit in (1, 2, 4) if i < i ^ bit])
    if name == "octa":
        return Graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if b != a + 3])
    if name == "dodeca":
        # generalized Petersen graph GP(10, 2)
        edges = []
        for i in range(10):
            edges += [(i, (i + 1) % 10), (i, 10 + i), (10 + i, 10 + (i + 2) % 10)]
        return Graph(20, edges)
    if name == "icosa":
        edges = []
        for i in range(1, 6):
            nxt = i % 5 + 1
            edges += [(0, i), (i, nxt), (5 + i, 5 + nxt), (11, 5 + i)]
            edges += [(i, 5 + i), (i, 5 + nxt)]
        return Graph(12, edges)
    raise GraphError(f"unknown platonic solid {name!r}")


def stacked_triangulation(steps: int, seed: int) -> Graph:
    """Start from K4 and ``steps`` times insert a new vertex into a uniformly
    chosen triangular face."""
    if steps < 0:
        raise GraphError("stacked-triangulation needs a non-negative parameter")
    rng = random.Random(seed)
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    tris = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    n = 4
    for _ in range(steps):
        a, b, c = tris.pop(rng.randrange(len(tris)))
        edges += [(a, n), (b, n), (c, n)]
        tris += [(a, b, n), (a, c, n), (b, c, n)]
        n += 1
    return Graph(n, edges)


def generate(family: str, param: int | str = 0, seed: int = 0) -> Graph:
    if family in PLATONIC:
        return platonic(family)
    if family == "platonic":
        return platonic(str(param))
    if family == "stacked-triangulation":
        return stacked_triangulation(int(param), seed)
    makers = {"wheel": wheel, "prism": prism, "antiprism": antiprism}
    if family not in makers:
        raise GraphError(f"unknown family {family!r}")
    return makers[family](int(param))


@dataclass(frozen=True)
class Instance:
    family: str
    param: int | str
    seed: int
    graph: Graph

    @property
    def name(self) -> str:
        if self.family == "platonic":
            return str(self.param)
        if self.family == "stacked-triangulation":
            return f"stacked-{self.param}-s{self.seed}"
        return f"{self.family}-{self.param}"

    def manifest(self) -> dict:
        return {"id": self.name, "family": self.family, "param": self.param,
                "seed": self.seed, "n": self.graph.n, "m": self.graph.m}


def corpus(nmax: int, seed: int = 0, stacked_seeds: int = 3) -> list[Instance]:
    """Every family member with at most ``nmax`` vertices, plus
    ``stacked_seeds`` stacked triangulations per size derived from ``seed``."""
    out: list[Instance] = []
    for k in range(3, nmax):
        out.append(Instance("wheel", k, 0, wheel(k)))
    for k in range(3, nmax // 2 + 1):
        out.append(Instance("prism", k, 0, prism(k)))
        if k > 3:  # antiprism(3) is the octahedron
            out.append(Instance("antiprism", k, 0, antiprism(k)))
    for name in PLATONIC:
        g = platonic(name)
        if g.n <= nmax:
            out.append(Instance("platonic", name, 0, g))
    for steps in range(1, nmax - 3):
        for j in range(stacked_seeds):
            s = seed * 1000 + steps * 10 + j
            out.append(Instance("stacked-triangulation", steps, s, stacked_triangulation(steps, s)))
    return out
