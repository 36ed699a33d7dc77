"""Color refinement and k-dimensional Weisfeiler-Lehman.

Colors are assigned jointly across every graph of a run, so color ids can
be compared between graphs.  Round 0 is the initial coloring; round r + 1
refines round r.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import TupleSpaceTooLarge
from .graph import Graph

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class Coloring:
    """Colors of all ``arity``-tuples of one graph after ``round`` rounds.

    ``colors[i]`` belongs to the tuple whose base-n digits (least
    significant first) are the vertices of the tuple.
    """

    arity: int
    n: int
    colors: np.ndarray
    round: int

    def color(self, t: Sequence[int]) -> int:
        idx = 0
        for i, v in enumerate(t):
            idx += v * self.n**i
        return int(self.colors[idx])

    def classes(self) -> int:
        return len(np.unique(self.colors))

    def histogram(self) -> Counter:
        return Counter(self.colors.tolist())


@dataclass(frozen=True)
class WLRun:
    """Round-by-round joint colorings of several graphs."""

    k: int
    history: list[list[np.ndarray]]  # history[g][r]
    stable: bool

    @property
    def rounds(self) -> int:
        return len(self.history[0]) - 1

    def coloring(self, g: int, r: int | None = None) -> Coloring:
        r = self.rounds if r is None else r
        col = self.history[g][r]
        n = round(len(col) ** (1 / self.k)) if len(col) else 0
        return Coloring(self.k, n, col, r)

    def histogram(self, g: int, r: int) -> tuple[tuple[int, int], ...]:
        vals, counts = np.unique(self.history[g][r], return_counts=True)
        return tuple(zip(vals.tolist(), counts.tolist()))

    def distinguishing_round(self, g: int, h: int) -> int | None:
        for r in range(self.rounds + 1):
            if self.histogram(g, r) != self.histogram(h, r):
                return r
        return None

    def stabilization_round(self, g: int) -> int:
        """First round whose partition of ``g`` equals the next one's (the
        last computed round when the run was truncated)."""
        hist = self.history[g]
        for r in range(len(hist) - 1):
            if _classes(hist[r]) == _classes(hist[r + 1]):
                return r
        return len(hist) - 1


def _classes(col: np.ndarray) -> int:
    return len(np.unique(col))


class _Folder:
    """Mixed-radix accumulation of columns with dense renumbering."""

    LIMIT = 1 << 62

    def __init__(self, key: np.ndarray):
        self.key = key.astype(np.int64)
        self.bound = int(self.key.max()) + 1 if len(self.key) else 1

    def add(self, col: np.ndarray) -> None:
        width = int(col.max()) + 2 if len(col) else 1
        if self.bound * width >= self.LIMIT:
            self.dense()
        self.key = self.key * width + (col + 1)
        self.bound *= width

    def dense(self) -> np.ndarray:
        if len(self.key):
            _, inv = np.unique(self.key, return_inverse=True)
            self.key = inv.reshape(-1).astype(np.int64)
        self.bound = int(self.key.max()) + 1 if len(self.key) else 1
        return self.key


def _adjacency(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=np.int64)
    for a, b in g.edges:
        m[a, b] = m[b, a] = 1
    return m


def _neighbor_multisets(colors: np.ndarray, g: Graph, width: int, count_free: bool) -> np.ndarray:
    out = np.full((g.n, width), -1, dtype=np.int64)
    for v in range(g.n):
        vals = sorted(set(colors[list(g.adj[v])].tolist())) if count_free else sorted(colors[list(g.adj[v])].tolist())
        if vals:
            out[v, width - len(vals) :] = vals
    return out


def _run_wl1(graphs: Sequence[Graph], rmax: int, count_free: bool) -> WLRun:
    sizes = [g.n for g in graphs]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    cur = _Folder(np.array([g.degree(v) for g in graphs for v in range(g.n)], dtype=np.int64)).dense()
    history = [cur]
    width = max((g.n for g in graphs), default=0)
    stable = False
    for _ in range(rmax):
        blocks = [_neighbor_multisets(cur[offsets[i] : offsets[i + 1]], g, width, count_free) for i, g in enumerate(graphs)]
        folder = _Folder(cur.copy())
        sets = np.vstack(blocks) if blocks else np.zeros((0, width), dtype=np.int64)
        for j in range(width):
            folder.add(sets[:, j])
        nxt = folder.dense()
        history.append(nxt)
        if _classes(nxt) == _classes(cur):
            stable = True
            break
        cur = nxt
    per = [[h[offsets[i] : offsets[i + 1]] for h in history] for i in range(len(graphs))]
    return WLRun(1, per, stable)


def _digits(n: int, k: int) -> np.ndarray:
    idx = np.arange(n**k, dtype=np.int64)
    out = np.empty((k, n**k), dtype=np.int64)
    for i in range(k):
        out[i] = idx % n
        idx //= n
    return out


def _run_wlk(graphs: Sequence[Graph], k: int, rmax: int, count_free: bool, cap: int) -> WLRun:
    sizes = [g.n**k for g in graphs]
    if sum(sizes) > cap:
        raise TupleSpaceTooLarge(f"{sum(sizes)} tuples exceed the cap of {cap}")
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    digits = [_digits(g.n, k) for g in graphs]
    folder = _Folder(np.zeros(sum(sizes), dtype=np.int64))
    adjs = [_adjacency(g) for g in graphs]
    for i, j in itertools.combinations(range(k), 2):
        folder.add(np.concatenate([(d[i] == d[j]).astype(np.int64) for d in digits]))
        folder.add(np.concatenate([a[d[i], d[j]] for a, d in zip(adjs, digits)]))
    cur = folder.dense()
    history = [cur]
    width = max((g.n for g in graphs), default=0)
    stable = False
    for _ in range(rmax):
        # color of the substituted k-vector, per tuple and per vertex w
        vec = _Folder(np.zeros(sum(s * width for s in sizes), dtype=np.int64))
        for slot in range(k):
            parts = []
            for gi, g in enumerate(graphs):
                d = digits[gi][slot]
                base = np.arange(sizes[gi], dtype=np.int64) - d * g.n**slot
                idx = base[:, None] + np.arange(g.n, dtype=np.int64)[None, :] * g.n**slot + offsets[gi]
                block = np.full((sizes[gi], width), -1, dtype=np.int64)
                block[:, : g.n] = cur[idx]
                parts.append(block.reshape(-1))
            vec.add(np.concatenate(parts))
        ids = vec.dense()
        blocks = []
        pos = 0
        for gi, g in enumerate(graphs):
            chunk = ids[pos : pos + sizes[gi] * width].reshape(sizes[gi], width).copy()
            pos += sizes[gi] * width
            chunk[:, g.n :] = -1
            chunk = np.sort(chunk, axis=1)
            if count_free and width > 1:
                dup = np.zeros_like(chunk, dtype=bool)
                dup[:, 1:] = chunk[:, 1:] == chunk[:, :-1]
                chunk = np.sort(np.where(dup, -1, chunk), axis=1)
            blocks.append(chunk)
        sets = np.vstack(blocks)
        folder = _Folder(cur.copy())
        for j in range(width):
            folder.add(sets[:, j])
        nxt = folder.dense()
        history.append(nxt)
        if _classes(nxt) == _classes(cur):
            stable = True
            break
        cur = nxt
    per = [[h[offsets[i] : offsets[i + 1]] for h in history] for i in range(len(graphs))]
    return WLRun(k, per, stable)


def wl_many(graphs: Sequence[Graph], k: int, rmax: int, count_free: bool = False, cap: int = DEFAULT_CAP) -> WLRun:
    """Joint refinement of all ``graphs``: k=1 is classic color refinement
    from degrees, k >= 2 refines k-tuples from their ordered atomic type."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return _run_wl1(graphs, rmax, count_free)
    return _run_wlk(graphs, k, rmax, count_free, cap)


def wl1(g: Graph, rmax: int, count_free: bool = False) -> tuple[Coloring, int]:
    """Stable (or round-``rmax``) vertex coloring and its stabilization round."""
    run = wl_many([g], 1, rmax, count_free)
    return _dense(run.coloring(0)), run.stabilization_round(0)


def wlk(g: Graph, k: int, rmax: int, count_free: bool = False, cap: int = DEFAULT_CAP) -> tuple[Coloring, int]:
    if k < 2:
        raise ValueError("wlk needs k >= 2")
    run = wl_many([g], k, rmax, count_free, cap)
    return _dense(run.coloring(0)), run.stabilization_round(0)


def _dense(c: Coloring) -> Coloring:
    _, inv = np.unique(c.colors, return_inverse=True)
    return Coloring(c.arity, c.n, inv.reshape(-1), c.round)


@dataclass(frozen=True)
class Distinction:
    distinguished: bool
    round: int | None  # None means joint stability with equal histograms
    histogram_sizes: tuple[int, int]

    def as_json(self) -> dict:
        return {
            "distinguished": self.distinguished,
            "round": self.round if self.distinguished else "stable-equal",
            "histogramSizes": list(self.histogram_sizes),
        }


def wl_distinguish(
    g: Graph, h: Graph, k: int, rmax: int, count_free: bool = False, cap: int = DEFAULT_CAP
) -> Distinction:
    run = wl_many([g, h], k, rmax, count_free, cap)
    r = run.distinguishing_round(0, 1)
    last = run.rounds
    sizes = (len(run.histogram(0, last)), len(run.histogram(1, last)))
    return Distinction(r is not None, r, sizes)
