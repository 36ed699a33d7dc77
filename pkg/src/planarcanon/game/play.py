"""Positions, the partial isomorphism test, Duplicator adversaries and the
match runner."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Generator, Literal, Protocol

import numpy as np

from ..errors import PlanarCanonError, StrategyError
from ..graph import INF
from .solver import DEFAULT_BUDGET, PebbleTypes, refine
from .structure import Structure

Side = Literal["L", "R"]


def other(side: Side) -> Side:
    return "R" if side == "L" else "L"


@dataclass
class GamePosition:
    """Pebble ``i`` sits on ``left[i]`` and ``right[i]`` (``None`` = off
    board)."""

    k: int
    left: list[int | None]
    right: list[int | None]
    rounds: int = 0

    @classmethod
    def empty(cls, k: int) -> "GamePosition":
        return cls(k, [None] * k, [None] * k)

    @classmethod
    def from_pairs(cls, k: int, pairs: dict[int, tuple[int, int]]) -> "GamePosition":
        pos = cls.empty(k)
        for i, (a, b) in pairs.items():
            pos.left[i], pos.right[i] = a, b
        return pos

    def side(self, s: Side) -> list[int | None]:
        return self.left if s == "L" else self.right

    def on_board(self) -> list[int]:
        return [i for i in range(self.k) if self.left[i] is not None]

    def check(self) -> None:
        if len(self.left) != self.k or len(self.right) != self.k:
            raise PlanarCanonError("position does not match the pebble budget")
        for a, b in zip(self.left, self.right):
            if (a is None) != (b is None):
                raise PlanarCanonError("pebble on board on one side only")

    def tuples(self) -> tuple[tuple[int | None, ...], tuple[int | None, ...]]:
        return tuple(self.left), tuple(self.right)

    def copy(self) -> "GamePosition":
        return GamePosition(self.k, list(self.left), list(self.right), self.rounds)


@dataclass(frozen=True)
class Violation:
    """Why a position is not a partial isomorphism."""

    kind: str  # "equality", "edge" or the relation name
    pebbles: tuple[int, ...]

    def as_json(self) -> dict:
        return {"kind": self.kind, "pebbles": list(self.pebbles)}


_REL_NAMES = {"rotation": ("T",), "layout": ("T", "Q"), "graph": ()}


def partial_iso(a: Structure, b: Structure, pos: GamePosition) -> tuple[bool, Violation | None]:
    pos.check()
    on = pos.on_board()
    la = [pos.left[i] for i in on]
    rb = [pos.right[i] for i in on]
    for (i, x, y), (j, x2, y2) in itertools.combinations(zip(on, la, rb), 2):
        if (x == x2) != (y == y2):
            return False, Violation("equality", (i, j))
    for (i, x, y), (j, x2, y2) in itertools.combinations(zip(on, la, rb), 2):
        if a.graph.has_edge(x, x2) != b.graph.has_edge(y, y2):  # type: ignore[arg-type]
            return False, Violation("edge", (i, j))
    names = _REL_NAMES.get(a.kind, ())
    for r, (ra, rb_) in enumerate(zip(a.relations, b.relations)):
        for slots in itertools.product(range(len(on)), repeat=ra.ndim):
            ta = tuple(la[s] for s in slots)
            tb = tuple(rb[s] for s in slots)
            if bool(ra[ta]) != bool(rb_[tb]):
                name = names[r] if r < len(names) else f"R{r}"
                return False, Violation(name, tuple(on[s] for s in slots))
    return True, None


@dataclass(frozen=True)
class Move:
    side: Side
    pebble: int
    vertex: int


class Board:
    """What a Spoiler strategy sees: both structures and the position."""

    def __init__(self, a: Structure, b: Structure, pos: GamePosition):
        self.a, self.b, self.pos = a, b, pos

    @property
    def k(self) -> int:
        return self.pos.k

    def struct(self, side: Side) -> Structure:
        return self.a if side == "L" else self.b

    def at(self, side: Side, pebble: int) -> int:
        v = self.pos.side(side)[pebble]
        if v is None:
            raise StrategyError(f"pebble {pebble} is not on the board")
        return v

    def pair(self, pebble: int) -> tuple[int, int]:
        return self.at("L", pebble), self.at("R", pebble)

    def free(self, exclude: tuple[int, ...] = ()) -> int:
        """Lowest pebble index not in ``exclude``; off-board pebbles first."""
        for i in range(self.k):
            if i not in exclude and self.pos.left[i] is None:
                return i
        for i in range(self.k):
            if i not in exclude:
                return i
        raise StrategyError("no pebble available")


SpoilerStream = Generator[Move, int, None]
Spoiler = Callable[[Board], SpoilerStream]


class Duplicator(Protocol):
    name: str

    def respond(self, board: Board, move: Move) -> int: ...


def _answers(board: Board, move: Move) -> list[tuple[int, bool]]:
    """Each possible answer with whether it keeps a partial isomorphism."""
    target = other(move.side)
    out = []
    for d in range(board.struct(target).n):
        trial = board.pos.copy()
        trial.side(move.side)[move.pebble] = move.vertex
        trial.side(target)[move.pebble] = d
        out.append((d, partial_iso(board.a, board.b, trial)[0]))
    return out


class OptimalDuplicator:
    """Answers so that the resulting position survives as many further
    rounds as possible (exact, from the type refinement)."""

    name = "optimal"

    def __init__(self, a: Structure, b: Structure, k: int, rmax: int, budget: int = DEFAULT_BUDGET):
        self.types: PebbleTypes = refine((a, b), k, rmax, budget)

    def respond(self, board: Board, move: Move) -> int:
        mover = 0 if move.side == "L" else 1
        left, right = list(board.pos.left), list(board.pos.right)
        t_m, t_o = (left, right) if mover == 0 else (right, left)
        t_m[move.pebble] = move.vertex
        levels = self.types.move_levels(mover, tuple(t_m), 1 - mover, tuple(t_o), move.pebble)
        row = levels[move.vertex]
        return int(np.flatnonzero(row == row.max())[0])


class GreedyMetricDuplicator:
    """Smallest answer that keeps a partial isomorphism and all distances to
    pebbled vertices; relaxes to a partial isomorphism, then to anything."""

    name = "greedy-metric"

    def respond(self, board: Board, move: Move) -> int:
        answers = _answers(board, move)
        src, dst = board.struct(move.side), board.struct(other(move.side))
        pos_src, pos_dst = board.pos.side(move.side), board.pos.side(other(move.side))
        pebbled = [i for i in range(board.k) if pos_src[i] is not None and i != move.pebble]

        def metric_ok(d: int) -> bool:
            return all(src.dist(move.vertex, pos_src[i]) == dst.dist(d, pos_dst[i]) for i in pebbled)  # type: ignore[arg-type]

        for d, ok in answers:
            if ok and metric_ok(d):
                return d
        for d, ok in answers:
            if ok:
                return d
        return 0


class RandomDuplicator:
    """Uniform among answers keeping a partial isomorphism (else uniform)."""

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = random.Random(seed)
        self.name = f"random:{seed}"

    def respond(self, board: Board, move: Move) -> int:
        answers = _answers(board, move)
        good = [d for d, ok in answers if ok] or [d for d, _ in answers]
        return self.rng.choice(good)


def make_duplicator(spec: str, a: Structure, b: Structure, k: int, rmax: int) -> Duplicator:
    if spec == "optimal":
        return OptimalDuplicator(a, b, k, rmax)
    if spec in ("greedy", "greedy-metric"):
        return GreedyMetricDuplicator()
    if spec.startswith("random"):
        _, _, seed = spec.partition(":")
        return RandomDuplicator(int(seed or 0))
    raise PlanarCanonError(f"unknown duplicator {spec!r}")


@dataclass
class Transcript:
    k: int
    rmax: int
    moves: list[dict] = field(default_factory=list)
    winner: Literal["spoiler", "duplicator"] = "duplicator"
    round: int = 0
    violation: Violation | None = None
    error: str | None = None
    start: GamePosition | None = None

    def as_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "k": self.k,
            "rmax": self.rmax,
            "moves": self.moves,
            "winner": self.winner,
            "round": self.round,
            "violation": self.violation.as_json() if self.violation else None,
        }
        if self.error:
            out["error"] = self.error
        return out

    def replay(self, a: Structure, b: Structure) -> tuple[str, int]:
        """Re-run the recorded moves and return (winner, round)."""
        pos = self.start.copy() if self.start else GamePosition.empty(self.k)
        ok, _ = partial_iso(a, b, pos)
        if not ok:
            return "spoiler", 0
        for r, (sp, du) in enumerate(zip(self.moves[::2], self.moves[1::2]), start=1):
            pos.side(sp["side"])[sp["pebble"]] = sp["vertex"]
            pos.side(du["side"])[du["pebble"]] = du["vertex"]
            if not partial_iso(a, b, pos)[0]:
                return "spoiler", r
        return "duplicator", len(self.moves) // 2


def play(
    a: Structure,
    b: Structure,
    spoiler: Spoiler,
    duplicator: Duplicator,
    k: int,
    rmax: int,
    start: GamePosition | None = None,
) -> Transcript:
    """Run a match: Spoiler moves, Duplicator answers, and the game ends as
    soon as the pebbled map stops being a partial isomorphism."""
    pos = start.copy() if start else GamePosition.empty(k)
    if pos.k != k:
        raise PlanarCanonError("start position has a different pebble budget")
    tr = Transcript(k, rmax, start=pos.copy())
    ok, why = partial_iso(a, b, pos)
    if not ok:
        tr.winner, tr.violation = "spoiler", why
        return tr
    board = Board(a, b, pos)
    stream = spoiler(board)
    answer: int | None = None
    try:
        for r in range(1, rmax + 1):
            move = next(stream) if answer is None else stream.send(answer)
            if not 0 <= move.pebble < k:
                raise StrategyError(f"pebble {move.pebble} outside the budget {k}")
            if not 0 <= move.vertex < board.struct(move.side).n:
                raise StrategyError(f"vertex {move.vertex} outside the structure")
            answer = duplicator.respond(board, move)
            pos.side(move.side)[move.pebble] = move.vertex
            pos.side(other(move.side))[move.pebble] = answer
            pos.rounds = r
            tr.moves.append({"side": move.side, "pebble": move.pebble, "vertex": move.vertex})
            tr.moves.append({"side": other(move.side), "pebble": move.pebble, "vertex": answer})
            tr.round = r
            ok, why = partial_iso(a, b, pos)
            if not ok:
                tr.winner, tr.violation = "spoiler", why
                stream.close()
                return tr
    except StopIteration:
        tr.error = "spoiler strategy ended without a win"
    except StrategyError as exc:
        tr.error = str(exc)
    tr.winner = "duplicator"
    return tr


def solver_spoiler(types: PebbleTypes, s_left: int = 0, s_right: int = 1) -> Spoiler:
    """Spoiler that always picks a move minimizing Duplicator's best level."""

    def run(board: Board) -> SpoilerStream:
        while True:
            best: tuple[float, int, int, int] | None = None
            left, right = tuple(board.pos.left), tuple(board.pos.right)
            for side_i, (sm, so, tm, to) in enumerate(((s_left, s_right, left, right), (s_right, s_left, right, left))):
                for slot in range(board.k):
                    lv = types.move_levels(sm, tm, so, to, slot).max(axis=1)
                    c = int(lv.argmin())
                    cand = (float(lv[c]), side_i, slot, c)
                    if best is None or cand < best:
                        best = cand
            assert best is not None
            if best[0] == INF:
                raise StrategyError("Duplicator survives from this position")
            _, side_i, slot, c = best
            yield Move("L" if side_i == 0 else "R", slot, c)

    return run
