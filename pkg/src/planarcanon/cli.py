"""``planarcanon`` command line.

Structured output goes to stdout as JSON, diagnostics to stderr.  Exit
codes: 0 for success or a true answer, 1 for a false answer (not
isomorphic, distinguished, Spoiler won, a suite failed), 2 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .canon import canonical_code_graph, iso_graphs
from .corpus import generate
from .embedding import RotationSystem, embed, faces, genus_check
from .errors import PlanarCanonError
from .formats import parse_graph, parse_rotation, write_graph, write_rotation
from .game import (
    GamePosition,
    Structure,
    make_duplicator,
    play,
    refine,
    solver_spoiler,
    spoiler_coordinate_strategy,
    spoiler_halving,
)
from .game.strategies import spoiler_metric_guard
from .graph import Graph
from .suites import SUITES, run_suite
from .wl import wl_distinguish


def _emit(obj: Any) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _looks_like_rotation(text: str) -> bool:
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            return body.split()[0].endswith(":")
    return False


def _load_graph(path: str) -> Graph:
    text = _read(path)
    if _looks_like_rotation(text):
        return parse_rotation(text).graph
    return parse_graph(text)


def _load_rotation(path: str) -> RotationSystem:
    text = _read(path)
    if _looks_like_rotation(text):
        return parse_rotation(text)
    return embed(parse_graph(text))


def cmd_gen(ns: argparse.Namespace) -> int:
    g = generate(ns.family, ns.param, ns.seed)
    if ns.json:
        _emit({"family": ns.family, "param": ns.param, "seed": ns.seed, "n": g.n, "m": g.m, "graph": write_graph(g)})
    else:
        sys.stdout.write(write_graph(g))
    return 0


def cmd_embed(ns: argparse.Namespace) -> int:
    sys.stdout.write(write_rotation(embed(_load_graph(ns.graph))))
    return 0


def cmd_faces(ns: argparse.Namespace) -> int:
    rot = _load_rotation(ns.input)
    fs = faces(rot)
    _emit({"faces": [list(f) for f in fs.faces], "euler": genus_check(rot)})
    return 0


def cmd_canon(ns: argparse.Namespace) -> int:
    form = canonical_code_graph(_load_graph(ns.graph))
    _emit({"code": form.hex(), "witness": json.loads(form.witness_json())})
    return 0


def cmd_iso(ns: argparse.Namespace) -> int:
    same = iso_graphs(_load_graph(ns.a), _load_graph(ns.b))
    _emit({"isomorphic": same})
    return 0 if same else 1


def cmd_wl(ns: argparse.Namespace) -> int:
    res = wl_distinguish(_load_graph(ns.a), _load_graph(ns.b), ns.k, ns.rounds, count_free=ns.count_free)
    _emit(res.as_json())
    return 1 if res.distinguished else 0


def _pebbles(specs: Sequence[str], k: int) -> GamePosition:
    pos = GamePosition.empty(k)
    for spec in specs:
        try:
            i, a, b = (int(x) for x in spec.split(":"))
        except ValueError:
            raise PlanarCanonError(f"pebble spec {spec!r} is not 'index:left:right'") from None
        if not 0 <= i < k:
            raise PlanarCanonError(f"pebble index {i} outside 0..{k - 1}")
        pos.left[i], pos.right[i] = a, b
    return pos


def cmd_game(ns: argparse.Namespace) -> int:
    if ns.structure == "rotation" or ns.spoiler == "coord":
        a, b = Structure.from_rotation(_load_rotation(ns.a)), Structure.from_rotation(_load_rotation(ns.b))
    else:
        a, b = Structure.from_graph(_load_graph(ns.a)), Structure.from_graph(_load_graph(ns.b))
    start = _pebbles(ns.pebble, ns.k)
    if ns.spoiler == "halving":
        on = start.on_board()
        if len(on) < 2:
            raise PlanarCanonError("halving needs two pebbles on the board (--pebble)")
        spare = next((i for i in range(ns.k) if i not in on[:2]), None)
        if spare is None:
            raise PlanarCanonError("halving needs a third pebble")
        spoiler = spoiler_halving(on[0], on[1], spare)
    elif ns.spoiler == "guard":
        on = start.on_board()
        if len(on) < 2 or ns.k < 3:
            raise PlanarCanonError("the metric guard needs two pebbles on the board and a third pebble")
        spoiler = spoiler_metric_guard(on[0], on[1], next(i for i in range(ns.k) if i not in on[:2]))
    elif ns.spoiler == "coord":
        spoiler = spoiler_coordinate_strategy()
    else:
        spoiler = solver_spoiler(refine((a, b), ns.k, ns.rmax))
    duplicator = make_duplicator(ns.duplicator, a, b, ns.k, ns.rmax)
    tr = play(a, b, spoiler, duplicator, ns.k, ns.rmax, start=start)
    _emit(tr.as_json())
    return 1 if tr.winner == "spoiler" else 0


def cmd_check(ns: argparse.Namespace) -> int:
    names = SUITES if ns.suite == "all" else (ns.suite,)
    reports = [run_suite(s, ns.nmax, ns.seed).as_json() for s in names]
    _emit(reports[0] if len(reports) == 1 else {"reports": reports, "passed": all(r["passed"] for r in reports)})
    return 0 if all(r["passed"] for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarcanon", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a corpus graph")
    g.add_argument("family")
    g.add_argument("param", nargs="?", default="0")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--json", action="store_true", help="wrap the graph with its manifest")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("embed", help="rotation system of a triconnected planar graph")
    e.add_argument("graph")
    e.set_defaults(func=cmd_embed)

    f = sub.add_parser("faces", help="faces of a graph's embedding or of a rotation file")
    f.add_argument("input")
    f.set_defaults(func=cmd_faces)

    c = sub.add_parser("canon", help="canonical code of a triconnected planar graph")
    c.add_argument("graph")
    c.set_defaults(func=cmd_canon)

    i = sub.add_parser("iso", help="isomorphism test via canonical codes")
    i.add_argument("a")
    i.add_argument("b")
    i.set_defaults(func=cmd_iso)

    w = sub.add_parser("wl", help="Weisfeiler-Lehman comparison of two graphs")
    w.add_argument("a")
    w.add_argument("b")
    w.add_argument("--k", type=int, default=2)
    w.add_argument("--rounds", type=int, default=10)
    w.add_argument("--count-free", action="store_true")
    w.set_defaults(func=cmd_wl)

    m = sub.add_parser("game", help="play the pebble game and print the transcript")
    m.add_argument("a")
    m.add_argument("b")
    m.add_argument("--k", type=int, default=3)
    m.add_argument("--rmax", type=int, default=10)
    m.add_argument("--spoiler", choices=("halving", "guard", "coord", "solver"), default="solver")
    m.add_argument("--duplicator", default="optimal", help="optimal, greedy or random:<seed>")
    m.add_argument("--structure", choices=("graph", "rotation"), default="graph")
    m.add_argument("--pebble", action="append", default=[], metavar="I:L:R",
                   help="start with pebble I on left vertex L and right vertex R")
    m.set_defaults(func=cmd_game)

    k = sub.add_parser("check", help="run an invariant suite")
    k.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    k.add_argument("--nmax", type=int, default=10)
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (PlanarCanonError, OSError, ValueError) as exc:
        print(f"planarcanon: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
