"""Exact values of the k-pebble game via type refinement.

A position of the game is a pair of k-tuples over ``V ∪ {⊥}``.  Two tuples
get the same round-``r`` color exactly when Duplicator survives ``r`` more
rounds from the position they form: round 0 compares atomic types, and
round ``r + 1`` additionally compares, for every pebble slot, the set of
round-``r`` colors reachable by moving that pebble.  The game value from a
start position is the first round at which the colors of its two tuples
differ.  Colors are assigned jointly for all structures involved, so one
run answers every pairwise question.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from ..errors import BudgetExceeded, PlanarCanonError
from ..graph import INF
from .structure import Structure, same_signature

DEFAULT_BUDGET = 2_000_000

Tup = tuple[int | None, ...]


def _encode(t: Tup, n: int) -> int:
    code, base = 0, 1
    for d in t:
        code += (n if d is None else d) * base
        base *= n + 1
    return code


def _digits(size: int, n: int, k: int) -> np.ndarray:
    idx = np.arange(size, dtype=np.int64)
    out = np.empty((k, size), dtype=np.int64)
    for i in range(k):
        out[i] = idx % (n + 1)
        idx //= n + 1
    return out


def _atomic_columns(s: Structure, k: int) -> Iterator[np.ndarray]:
    """Atomic type of every tuple, one small-integer column at a time: bottom
    flags, equality and adjacency per slot pair, and every relation on every
    slot combination (2 marks a ⊥ argument)."""
    n = s.n
    size = (n + 1) ** k
    dig = _digits(size, n, k)
    for i in range(k):
        yield (dig[i] == n).astype(np.int64)
    adj = np.full((n + 1, n + 1), 2, dtype=np.int64)
    adj[:n, :n] = s.adjacency
    for i, j in itertools.combinations(range(k), 2):
        yield (dig[i] == dig[j]).astype(np.int64)
        yield adj[dig[i], dig[j]]
    for rel in s.relations:
        r = rel.ndim
        pad = np.full((n + 1,) * r, 2, dtype=np.int64)
        pad[(slice(0, n),) * r] = rel
        for slots in itertools.product(range(k), repeat=r):
            yield pad[tuple(dig[i] for i in slots)]


class _Folder:
    """Accumulates columns into one key per row, renumbering densely only
    when the mixed-radix key would overflow."""

    LIMIT = 1 << 62

    def __init__(self, key: np.ndarray):
        self.key = key
        self.bound = int(key.max()) + 1 if len(key) else 1

    def add(self, col: np.ndarray) -> None:
        width = int(col.max()) + 2
        if self.bound * width >= self.LIMIT:
            self.dense()
        self.key = self.key * width + (col + 1)
        self.bound *= width

    def dense(self) -> np.ndarray:
        _, inv = np.unique(self.key, return_inverse=True)
        self.key = inv.reshape(-1).astype(np.int64)
        self.bound = int(self.key.max()) + 1 if len(self.key) else 1
        return self.key


@dataclass
class PebbleTypes:
    """Round-by-round joint colorings of all k-tuples of several structures.

    ``colors[s][r]`` holds the round-``r`` color of every tuple of structure
    ``s``.  ``stable`` is true when the last round did not split any class,
    so every later round would be identical.
    """

    structures: tuple[Structure, ...]
    k: int
    colors: list[list[np.ndarray]]
    stable: bool

    @property
    def rounds(self) -> int:
        return len(self.colors[0]) - 1

    def encode(self, s: int, t: Tup) -> int:
        return _encode(t, self.structures[s].n)

    def level(self, s1: int, t1: Tup, s2: int, t2: Tup) -> float:
        """Rounds Duplicator survives from the position ``(t1, t2)``;
        ``INF`` when Duplicator survives forever, ``rounds + 1`` as a lower bound
        when the computation was truncated before stabilizing."""
        i1, i2 = self.encode(s1, t1), self.encode(s2, t2)
        return self._level_idx(s1, i1, s2, i2)

    def _level_idx(self, s1: int, i1: int, s2: int, i2: int) -> float:
        c1, c2 = self.colors[s1], self.colors[s2]
        for r in range(len(c1)):
            if c1[r][i1] != c2[r][i2]:
                return r
        return INF if self.stable else self.rounds + 1

    def move_levels(self, s_mover: int, t_mover: Tup, s_other: int, t_other: Tup, slot: int) -> np.ndarray:
        """For Spoiler moving pebble ``slot`` in the mover structure: matrix
        of levels ``[c, d]`` after mover-side vertex ``c`` and answer ``d``."""
        n1, n2 = self.structures[s_mover].n, self.structures[s_other].n
        base1 = list(t_mover)
        base2 = list(t_other)
        out = np.zeros((n1, n2))
        for c in range(n1):
            base1[slot] = c
            i1 = _encode(tuple(base1), n1)
            for d in range(n2):
                base2[slot] = d
                out[c, d] = self._level_idx(s_mover, i1, s_other, _encode(tuple(base2), n2))
        return out


def refine(structures: Sequence[Structure], k: int, rmax: int, budget: int = DEFAULT_BUDGET) -> PebbleTypes:
    """Joint type refinement for up to ``rmax`` rounds (or until stable).

    All tuple spaces are concatenated and every signature is folded into
    dense ids one column at a time, so equal ids mean equal types across
    all structures.
    """
    if k < 1:
        raise PlanarCanonError("k must be positive")
    structs = tuple(structures)
    if not structs:
        raise PlanarCanonError("need at least one structure")
    for s in structs[1:]:
        if not same_signature(structs[0], s):
            raise PlanarCanonError("structures have different signatures")
    sizes = [(s.n + 1) ** k for s in structs]
    total = sum(sizes)
    if total > budget:
        raise BudgetExceeded(f"{total} tuples exceed the budget of {budget}")
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    nmax = max(s.n for s in structs)

    folder = _Folder(np.zeros(total, dtype=np.int64))
    for parts in zip(*(_atomic_columns(s, k) for s in structs)):
        folder.add(np.concatenate(parts))
    cur = folder.dense()
    history = [cur]
    classes = int(cur.max()) + 1

    def moved(si: int, slot: int) -> np.ndarray:
        n = structs[si].n
        dig = _digits(sizes[si], n, k)[slot]
        w = (n + 1) ** slot
        base = np.arange(sizes[si], dtype=np.int64) - dig * w
        return base[:, None] + np.arange(n, dtype=np.int64)[None, :] * w + offsets[si]

    stable = False
    for _ in range(rmax):
        folder = _Folder(cur.copy())
        for slot in range(k):
            blocks = []
            for si in range(len(structs)):
                m = np.sort(cur[moved(si, slot)], axis=1)
                if m.shape[1] > 1:
                    dup = np.zeros_like(m, dtype=bool)
                    dup[:, 1:] = m[:, 1:] == m[:, :-1]
                    m = np.sort(np.where(dup, -1, m), axis=1)
                if m.shape[1] < nmax:
                    m = np.hstack([np.full((m.shape[0], nmax - m.shape[1]), -1, dtype=np.int64), m])
                blocks.append(m)
            sets = np.vstack(blocks)
            for j in range(nmax):
                folder.add(sets[:, j])
        cur = folder.dense()
        history.append(cur)
        new_classes = int(cur.max()) + 1
        if new_classes == classes:
            stable = True
            break
        classes = new_classes
    colors = [[h[offsets[i] : offsets[i + 1]] for h in history] for i in range(len(structs))]
    return PebbleTypes(structs, k, colors, stable)


def empty_tuple(k: int) -> Tup:
    return (None,) * k


def solve_depth(
    a: Structure,
    b: Structure,
    k: int,
    rmax: int,
    start: tuple[Tup, Tup] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> int | None:
    """Minimum number of rounds Spoiler needs from ``start`` (default: no
    pebbles on the board), or ``None`` if Duplicator survives ``rmax``
    rounds."""
    left, right = start if start is not None else (empty_tuple(k), empty_tuple(k))
    if len(left) != k or len(right) != k:
        raise PlanarCanonError("start tuples must have length k")
    if [x is None for x in left] != [x is None for x in right]:
        raise PlanarCanonError("start position must pebble the same slots on both sides")
    types = refine((a, b), k, rmax, budget)
    lvl = types.level(0, left, 1, right)
    return None if lvl == INF or lvl > rmax else int(lvl)


def depth_matrix(structures: Sequence[Structure], k: int, rmax: int, budget: int = DEFAULT_BUDGET) -> list[list[int | None]]:
    """Pairwise game values from the empty position, from one joint run."""
    types = refine(structures, k, rmax, budget)
    empty = empty_tuple(k)
    n = len(structures)
    out: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            lvl = types.level(i, empty, j, empty)
            out[i][j] = None if lvl == INF or lvl > rmax else int(lvl)
    return out
