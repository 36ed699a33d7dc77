"""Scripted Spoiler strategies.

Every strategy is a function ``Board -> generator of Move``; the runner
sends Duplicator's answer back into the generator and stops it as soon as
the position is no longer a partial isomorphism, so code after a ``yield``
may assume the pebbled map is still a partial isomorphism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..canon import CoordinateCode, global_coords, iso_rotations, local_coord
from ..embedding import RotationSystem
from ..errors import StrategyError
from ..graph import INF
from .play import Board, Move, Side, Spoiler, SpoilerStream, other
from .structure import Structure


def _midpoint(s: Structure, u: int, v: int, t: int) -> int:
    """Smallest vertex at distance ``t`` from ``u`` on a shortest u-v path."""
    d = s.dist(u, v)
    for m in range(s.n):
        if s.dist(u, m) == t and s.dist(m, v) == d - t:
            return m
    raise StrategyError(f"no vertex at distance {t} between {u} and {v}")


def _dists(board: Board, p: int, q: int) -> tuple[float, float]:
    (x, x2), (y, y2) = board.pair(p), board.pair(q)
    return board.a.dist(x, y), board.b.dist(x2, y2)


def halving_moves(board: Board, pu: int, pv: int, spare: int) -> SpoilerStream:
    """Pebble midpoints on the side where the pebbled pair is closer.

    Each round keeps a pebbled pair whose distances still differ and whose
    smaller distance at most halved, so ``ceil(log2 d)`` rounds suffice.
    """
    while True:
        dl, dr = _dists(board, pu, pv)
        if dl == dr:
            raise StrategyError("pebbled distances agree")
        side: Side = "L" if dl < dr else "R"
        d = min(dl, dr)
        if d <= 1:
            raise StrategyError("the distance mismatch is already visible")
        s = board.struct(side)
        m = _midpoint(s, board.at(side, pu), board.at(side, pv), math.ceil(d / 2))
        yield Move(side, spare, m)
        for p, q, rest in ((pu, spare, pv), (spare, pv, pu)):
            ds = board.struct(side).dist(board.at(side, p), board.at(side, q))
            do = board.struct(other(side)).dist(board.at(other(side), p), board.at(other(side), q))
            if ds < do:
                pu, pv, spare = p, q, rest
                break
        else:  # pragma: no cover - excluded by the triangle inequality
            raise StrategyError("no shrinking pair after a midpoint move")


def metric_guard_moves(board: Board, pu: int, pv: int, spare: int) -> SpoilerStream:
    """Halving, preceded by one extra move when one side is disconnected and
    the other side's distance exceeds the disconnected side's order."""
    dl, dr = _dists(board, pu, pv)
    if dl == dr:
        raise StrategyError("pebbled distances agree")
    for inf_side, fin, fin_side in (("L", dr, "R"), ("R", dl, "L")):
        d_inf = dl if inf_side == "L" else dr
        n_inf = board.struct(inf_side).n  # type: ignore[arg-type]
        if d_inf == INF and fin != INF and fin > n_inf:
            s = board.struct(fin_side)  # type: ignore[arg-type]
            w = _midpoint(s, board.at(fin_side, pu), board.at(fin_side, pv), n_inf)  # type: ignore[arg-type]
            yield Move(fin_side, spare, w)  # type: ignore[arg-type]
            yield from halving_moves(board, pu, spare, pv)
            return
    yield from halving_moves(board, pu, pv, spare)


def spoiler_halving(pu: int = 0, pv: int = 1, spare: int = 2) -> Spoiler:
    """Start from pebbles ``pu`` and ``pv`` with unequal distances, finite on
    the smaller side."""

    def run(board: Board) -> SpoilerStream:
        dl, dr = _dists(board, pu, pv)
        if dl == dr or min(dl, dr) == INF:
            raise StrategyError("halving needs unequal distances, one finite")
        yield from halving_moves(board, pu, pv, spare)

    return run


def spoiler_metric_guard(pu: int = 0, pv: int = 1, spare: int = 2) -> Spoiler:
    def run(board: Board) -> SpoilerStream:
        yield from metric_guard_moves(board, pu, pv, spare)

    return run


# -- generalized halving -------------------------------------------------------

Endgame = Callable[[Board, int, Sequence[int], Sequence[int]], SpoilerStream]


@dataclass
class GeneralizedHalving:
    """Bisection over the index sequences ``seq_l`` / ``seq_r`` of t-tuples.

    The start position must pebble ``seq_l[0]``/``seq_r[0]`` with
    ``u_slots`` and ``seq_l[ell]``/``a'`` with ``v_slots`` where
    ``a' != seq_r[ell]``.  Anchor pebbles are never touched.  The state is
    ``(i, j, primary)``: the pebbles ``u`` sit on entry ``i`` on both sides;
    on the primary side ``v`` sits on entry ``j`` and on the other side it
    sits on no entry with index in ``(i, j]``.  When ``j = i + 1`` exactly
    one of ``v = seq[i+1]`` holds, and ``endgame(board, i, u_slots, v_slots)``
    takes over.
    """

    seq_l: Sequence[tuple[int, ...]]
    seq_r: Sequence[tuple[int, ...]]
    ell: int
    endgame: Endgame
    u_slots: Sequence[int]
    v_slots: Sequence[int]
    w_slots: Sequence[int]
    handoff_round: int | None = field(default=None, init=False)
    bisections: int = field(default=0, init=False)

    def __post_init__(self) -> None:
        t = len(self.seq_l[0])
        if any(len(x) != t for x in (*self.seq_l, *self.seq_r)):
            raise StrategyError("all sequence entries must have the same length")
        if not (len(self.u_slots) == len(self.v_slots) == len(self.w_slots) == t):
            raise StrategyError("pebble groups must match the tuple length")
        if len(self.seq_l) != len(self.seq_r):
            raise StrategyError("sequences must have the same length")

    def _seq(self, side: Side) -> Sequence[tuple[int, ...]]:
        return self.seq_l if side == "L" else self.seq_r

    def __call__(self, board: Board) -> SpoilerStream:
        u, v, w = list(self.u_slots), list(self.v_slots), list(self.w_slots)
        read = lambda side, slots: tuple(board.at(side, p) for p in slots)  # noqa: E731
        i, j = 0, self.ell
        if read("L", u) != self.seq_l[0] or read("R", u) != self.seq_r[0]:
            raise StrategyError("u pebbles must start on the first entries")
        if read("L", v) != self.seq_l[self.ell]:
            raise StrategyError("v pebbles must start on entry ell on the left")
        right_v = read("R", v)
        if right_v == self.seq_r[self.ell]:
            raise StrategyError("the right v pebbles sit on entry ell: nothing to win")
        primary: Side = "L"
        idx = [q for q in range(1, self.ell) if self.seq_r[q] == right_v]
        if idx:
            primary, j = "R", idx[0]
        rounds = 0
        while j > i + 1:
            t = (i + j) // 2
            target = self._seq(primary)[t]
            for p, x in zip(w, target):
                yield Move(primary, p, x)
                rounds += 1
            self.bisections += 1
            sec = other(primary)
            got = read(sec, w)
            seq_sec = self._seq(sec)
            hits = [q for q in range(len(seq_sec)) if seq_sec[q] == got]
            if hits and hits[0] == t:
                i, u, w = t, w, u
            elif hits and i < hits[0] < t:
                primary, j, v, w = sec, hits[0], w, v
            else:
                j, v, w = t, w, v
        self.handoff_round = rounds
        yield from self.endgame(board, i, u, v)


def spoiler_generalized_halving(
    seq_l: Sequence[tuple[int, ...]],
    seq_r: Sequence[tuple[int, ...]],
    ell: int,
    endgame: Endgame,
    u_slots: Sequence[int],
    v_slots: Sequence[int],
    w_slots: Sequence[int],
) -> GeneralizedHalving:
    return GeneralizedHalving(seq_l, seq_r, ell, endgame, u_slots, v_slots, w_slots)


def metric_endgame(board: Board, i: int, u_slots: Sequence[int], v_slots: Sequence[int]) -> SpoilerStream:
    """Endgame that wins through any pebbled pair with a distance mismatch."""
    on = board.pos.on_board()
    for p in on:
        for q in on:
            if p < q:
                dl, dr = _dists(board, p, q)
                if dl != dr:
                    spare = board.free(exclude=(p, q))
                    yield from metric_guard_moves(board, p, q, spare)
                    return
    raise StrategyError("endgame found no distance mismatch")


# -- coordinate strategy for rotation systems ---------------------------------


def _rot(s: Structure) -> RotationSystem:
    if s.rotation is None:
        raise StrategyError("the coordinate strategy needs rotation-system structures")
    return s.rotation


def _cycle_halving(board: Board, pa: int, px: int, py: int) -> SpoilerStream:
    """Halving along the directed neighbor cycle of the pebbled center."""
    ra, rb = _rot(board.a), _rot(board.b)
    while True:
        a, a2 = board.pair(pa)
        (x, x2), (y, y2) = board.pair(px), board.pair(py)
        dl, dr = local_coord(ra, a, x, y), local_coord(rb, a2, x2, y2)
        if dl == dr:
            raise StrategyError("local coordinates agree")
        side: Side = "L" if dl < dr else "R"
        ds = min(dl, dr)
        if ds <= 1:
            raise StrategyError("the rotation mismatch is already visible")
        rot = ra if side == "L" else rb
        m = board.at(side, px)
        for _ in range(math.ceil(ds / 2)):
            m = rot.s(board.at(side, pa), m)
        pm = board.free(exclude=(pa, px, py))
        yield Move(side, pm, m)
        rot_o = rb if side == "L" else ra
        o = other(side)
        c, c2 = board.at(side, pa), board.at(o, pa)
        for p, q in ((px, pm), (pm, py)):
            d_s = local_coord(rot, c, board.at(side, p), board.at(side, q))
            d_o = local_coord(rot_o, c2, board.at(o, p), board.at(o, q))
            if d_s < d_o:
                px, py = p, q
                break
        else:  # pragma: no cover - excluded by counting steps around the cycle
            raise StrategyError("no shrinking pair on the neighbor cycle")


def coordinate_lemma_moves(board: Board, pa: int, pb: int, pv: int) -> SpoilerStream:
    """Win from pebbled origin ``(a, b)``/``(a', b')`` and ``v``/``v'`` with
    different coordinates, using at most five pebbles."""
    ra, rb = _rot(board.a), _rot(board.b)
    while True:
        (a, a2), (b, b2), (v, v2) = board.pair(pa), board.pair(pb), board.pair(pv)
        ca: CoordinateCode = global_coords(ra, a, b)
        cb: CoordinateCode = global_coords(rb, a2, b2)
        if ca.coords[v] == cb.coords[v2]:
            raise StrategyError("coordinates of the pebbled pair agree")
        d, d2 = board.a.dist(a, v), board.b.dist(a2, v2)
        if d != d2:
            yield from metric_guard_moves(board, pa, pv, board.free(exclude=(pa, pv)))
            return
        if d == 1:
            yield from _cycle_halving(board, pa, pb, pv)
            return
        h = math.ceil(d / 2)
        path_l, path_r = ca.path_to(v), cb.path_to(v2)
        u, u2 = path_l[h], path_r[h]
        pu = board.free(exclude=(pa, pb, pv))
        if ca.coords[u] != cb.coords[u2]:
            if ca.coords[u] < cb.coords[u2]:
                yield Move("L", pu, u)
            else:
                yield Move("R", pu, u2)
            ul, ur = board.pair(pu)
            if ca.coords[ul] != cb.coords[ur]:
                pv = pu
                continue
            if board.a.dist(ul, v) != board.b.dist(ur, v2):
                yield from metric_guard_moves(board, pu, pv, board.free(exclude=(pu, pv)))
                return
            raise StrategyError("equal codes at the midpoint but no distance mismatch")
        yield Move("L", pu, u)
        if board.at("R", pu) != u2:
            pv = pu
            continue
        if h == 1:
            pw = pa
        else:
            pw = board.free(exclude=(pa, pb, pv, pu))
            yield Move("L", pw, path_l[h - 1])
            if board.at("R", pw) != path_r[h - 1]:
                pv = pw
                continue
        pa, pb = pu, pw


def spoiler_coordinate_strategy() -> Spoiler:
    """Five-pebble strategy for non-isomorphic rotation systems."""

    def run(board: Board) -> SpoilerStream:
        ra, rb = _rot(board.a), _rot(board.b)
        if iso_rotations(ra, rb):
            raise StrategyError("the rotation systems are isomorphic")
        if board.k < 5:
            raise StrategyError("the coordinate strategy needs 5 pebbles")
        a = 0
        b = ra.graph.adj[a][0]
        yield Move("L", 0, a)
        yield Move("L", 1, b)
        ca = global_coords(ra, a, b)
        cb = global_coords(rb, board.at("R", 0), board.at("R", 1))
        by_code_l = {c: x for x, c in enumerate(ca.coords)}
        by_code_r = {c: x for x, c in enumerate(cb.coords)}
        for side, mine, theirs in (("L", ca, by_code_r), ("R", cb, by_code_l)):
            lonely = [x for x, c in enumerate(mine.coords) if c not in theirs]
            if lonely:
                yield Move(side, 2, lonely[0])  # type: ignore[arg-type]
                yield from coordinate_lemma_moves(board, 0, 1, 2)
                return
        f = [by_code_r[c] for c in ca.coords]
        witness = _mismatch(ra, rb, f)
        if witness is None:  # pragma: no cover - f would be an isomorphism
            raise StrategyError("coordinate matching is an isomorphism")
        for slot, x in zip((2, 3, 4), witness):
            yield Move("L", slot, x)
            if board.at("R", slot) != f[x]:
                yield from coordinate_lemma_moves(board, 0, 1, slot)
                return
        raise StrategyError("matched vertices but no visible mismatch")

    return run


def _mismatch(ra: RotationSystem, rb: RotationSystem, f: Sequence[int]) -> tuple[int, ...] | None:
    """Vertices on which ``f`` fails to preserve adjacency or successors."""
    ga, gb = ra.graph, rb.graph
    for x in range(ga.n):
        for y in range(x + 1, ga.n):
            if ga.has_edge(x, y) != gb.has_edge(f[x], f[y]):
                return (x, y)
    for x in range(ga.n):
        for y, z in ra.succ[x].items():
            if rb.succ[f[x]].get(f[y]) != f[z]:
                return (x, y, z)
    inv = {fx: i for i, fx in enumerate(f)}
    for x in range(gb.n):
        for y, z in rb.succ[x].items():
            if ra.succ[inv[x]].get(inv[y]) != inv[z]:
                return (inv[x], inv[y], inv[z])
    return None


__all__ = [
    "GeneralizedHalving",
    "coordinate_lemma_moves",
    "halving_moves",
    "metric_endgame",
    "metric_guard_moves",
    "spoiler_coordinate_strategy",
    "spoiler_generalized_halving",
    "spoiler_halving",
    "spoiler_metric_guard",
]
