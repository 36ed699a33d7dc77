"""Invariant suites behind ``planarcanon check``.

Each suite walks a deterministic corpus and returns a report listing how
many cases it checked and every counterexample it found.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import bruteforce
from .canon import canonical_code_graph, canonical_code_rotation, global_coords
from .corpus import Instance, corpus
from .embedding import (
    LayoutInconsistency,
    RotationSystem,
    conjugate,
    embed,
    faces,
    genus_check,
    layout_of,
    rotations_of_layout,
)
from .errors import NotPlanar, PlanarCanonError
from .game import GamePosition, OptimalDuplicator, Structure, play, refine, spoiler_halving
from .geometry import GeodesicSystem, classify_configuration, configurations
from .graph import INF, Graph, bfs_distances, is_k_connected
from .wl import wl_many

SUITES = (
    "euler",
    "laylay",
    "coords",
    "canon-vs-oracle",
    "boundaries",
    "twisted-intersection",
    "blockpath",
    "halving-bounds",
    "wl-sweep",
    "depth-envelopes",
)
MAX_DUMPS = 20


@dataclass
class Report:
    suite: str
    nmax: int
    seed: int
    checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **info: Any) -> None:
        self.failures.append(info)

    def merge(self, other: "Report") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)
        for k, v in other.stats.items():
            if isinstance(v, (int, float)) and not isinstance(v, bool):
                if k.startswith("max_"):
                    self.stats[k] = max(self.stats.get(k, v), v)
                else:
                    self.stats[k] = self.stats.get(k, 0) + v
            else:
                self.stats[k] = v

    def as_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "nmax": self.nmax,
            "seed": self.seed,
            "passed": self.passed,
            "checked": self.checked,
            "failureCount": len(self.failures),
            "failures": self.failures[:MAX_DUMPS],
            "stats": dict(sorted(self.stats.items())),
        }


def threads() -> int:
    raw = os.environ.get("PLANARCANON_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# -- per-instance suites ------------------------------------------------------


def _euler(inst: Instance, rep: Report) -> None:
    rot = embed(inst.graph)
    fs = faces(rot)
    rep.checked += 1
    size = sum(len(f) for f in fs.faces)
    if genus_check(rot) != 2 or size != 2 * inst.graph.m:
        rep.fail(instance=inst.name, euler=genus_check(rot), face_total=size, edges=inst.graph.m)


def _laylay(inst: Instance, rep: Report) -> None:
    rot = embed(inst.graph)
    got = rotations_of_layout(layout_of(rot))
    rep.checked += 1
    if isinstance(got, LayoutInconsistency) or set(got) != {rot, conjugate(rot)}:
        rep.fail(instance=inst.name, result=str(got))


def _coords(inst: Instance, rep: Report) -> None:
    rot = embed(inst.graph)
    g = inst.graph
    for a, b in g.directed_edges():
        cc = global_coords(rot, a, b)
        dist = bfs_distances(g, a)
        rep.checked += 1
        if len(set(cc.coords)) != g.n:
            rep.fail(instance=inst.name, origin=[a, b], problem="coordinates not injective")
        for v in range(g.n):
            if len(cc.coords[v]) != dist[v]:
                rep.fail(instance=inst.name, origin=[a, b], vertex=v, problem="code length")
            path = cc.path_to(v)
            for i, u in enumerate(path):
                if cc.coords[u] != cc.coords[v][:i]:
                    rep.fail(instance=inst.name, origin=[a, b], vertex=v, problem="prefix identity")
                    break
        if g.n <= 8 and bruteforce.coordinates(rot, a, b) != list(cc.coords):
            rep.fail(instance=inst.name, origin=[a, b], problem="differs from path enumeration")


def _geometry(inst: Instance, rep: Report, which: str) -> None:
    rot = embed(inst.graph)
    for kind in ("X", "H"):
        for c in configurations(inst.graph, kind):  # type: ignore[arg-type]
            shape = classify_configuration(rot, c)
            if shape == "neither":
                continue
            gs = GeodesicSystem(rot, c)
            finite = gs.d0(c.x, c.u) != INF and gs.d0(c.y, c.v) != INF
            tag = {"instance": inst.name, "config": str(c), "shape": shape}
            if which == "twisted-intersection":
                if shape == "collocated":
                    rep.checked += 1
                    if not finite:
                        rep.fail(**tag, problem="collocated with an empty geodesic system")
                elif finite:
                    rep.checked += 1
                    if not gs.has_strong_intersection_property_oracle():
                        rep.fail(**tag, problem="twisted without strong intersection")
                continue
            if not finite:
                continue
            if which == "boundaries":
                for s, t in ((c.x, c.u), (c.y, c.v)):
                    if len(gs.geodesics(s, t)) < 2:
                        continue
                    rep.checked += 1
                    try:
                        gs.boundaries(s, t)
                    except PlanarCanonError as exc:
                        rep.fail(**tag, pair=[s, t], problem=str(exc))
                if gs.has_intersection_property():
                    rep.checked += 1
                    b2 = set(gs.boundaries(c.y, c.v).b2)
                    ents = gs.entrances("x")
                    if not ents <= b2:
                        rep.fail(**tag, problem="x-entrance off B2(y,v)", off=sorted(ents - b2))
            elif which == "blockpath":
                path = gs.one_geodesic(c.x, c.u)
                for s, t in itertools.combinations(path, 2):
                    rep.checked += 1
                    if not gs.block_tree_is_path(s, t):
                        rep.fail(**tag, pair=[s, t], problem="block tree is not a path")


PER_INSTANCE: dict[str, Callable[[Instance, Report], None]] = {
    "euler": _euler,
    "laylay": _laylay,
    "coords": _coords,
    "boundaries": lambda i, r: _geometry(i, r, "boundaries"),
    "twisted-intersection": lambda i, r: _geometry(i, r, "twisted-intersection"),
    "blockpath": lambda i, r: _geometry(i, r, "blockpath"),
}


def _run_one(args: tuple[str, Instance, int, int]) -> Report:
    suite, inst, nmax, seed = args
    rep = Report(suite, nmax, seed)
    try:
        PER_INSTANCE[suite](inst, rep)
    except PlanarCanonError as exc:
        rep.fail(instance=inst.name, problem=f"{type(exc).__name__}: {exc}")
    return rep


# -- whole-corpus suites --------------------------------------------------------


def _canon_vs_oracle(rep: Report, nmax: int, seed: int) -> None:
    rng = random.Random(seed)
    graphs: list[tuple[str, Graph]] = []
    for inst in corpus(nmax, seed):
        graphs.append((inst.name, inst.graph))
        perm = list(range(inst.graph.n))
        rng.shuffle(perm)
        graphs.append((inst.name + "~", inst.graph.relabel(perm)))
    codes = [canonical_code_graph(g).code for _, g in graphs]
    for (i, (na, ga)), (j, (nb, gb)) in itertools.combinations(enumerate(graphs), 2):
        rep.checked += 1
        if (codes[i] == codes[j]) != bruteforce.isomorphic(ga, gb):
            rep.fail(a=na, b=nb, canon_equal=codes[i] == codes[j])


def halving_fixtures(dmax: int = 8) -> list[dict[str, Any]]:
    """Pebbled pairs with a distance mismatch whose smaller distance is at
    most ``dmax``: paths against longer paths, cycles against longer cycles,
    and paths against two disjoint paths."""

    def path(n: int) -> Graph:
        return Graph(n, [(i, i + 1) for i in range(n - 1)])

    def cycle(n: int) -> Graph:
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])

    out = []
    for d in range(1, dmax + 1):
        for extra in (1, 2):
            out.append({"name": f"P{d + 1}-P{d + extra + 1}", "a": path(d + 1), "b": path(d + extra + 1),
                        "u": (0, 0), "v": (d, d + extra), "d": d})
        if d >= 2:
            out.append({"name": f"C{2 * d}-C{2 * d + 2}", "a": cycle(2 * d), "b": cycle(2 * d + 2),
                        "u": (0, 0), "v": (d, d + 1), "d": d})
        split = Graph(d + 2, [(i, i + 1) for i in range(d + 1) if i != d // 2])
        out.append({"name": f"P{d + 1}-split", "a": path(d + 1), "b": split,
                    "u": (0, 0), "v": (d, d + 1), "d": d})
    return out


def _halving(rep: Report, dmax: int) -> None:
    worst = 0
    for fx in halving_fixtures(dmax):
        a, b = Structure.from_graph(fx["a"]), Structure.from_graph(fx["b"])
        start = GamePosition.from_pairs(3, {0: fx["u"], 1: fx["v"]})
        bound = math.ceil(math.log2(fx["d"]))
        tr = play(a, b, spoiler_halving(), OptimalDuplicator(a, b, 3, bound + 2), 3, bound + 2, start=start)
        rep.checked += 1
        worst = max(worst, tr.round)
        if tr.winner != "spoiler" or tr.round > bound:
            rep.fail(fixture=fx["name"], bound=bound, transcript=tr.as_json())
    rep.stats["max_rounds"] = worst


def distinct_corpus_graphs(nmax: int, seed: int) -> list[tuple[str, Graph]]:
    seen: dict[str, tuple[str, Graph]] = {}
    for inst in corpus(nmax, seed):
        seen.setdefault(canonical_code_graph(inst.graph).code, (inst.name, inst.graph))
    return sorted(seen.values(), key=lambda x: (x[1].n, x[0]))


def _wl_sweep(rep: Report, nmax: int, seed: int) -> None:
    named = distinct_corpus_graphs(nmax, seed)
    graphs = [g for _, g in named]
    runs = {k: wl_many(graphs, k, max(g.n for g in graphs) + 1) for k in (1, 2, 3)}
    worst = 0
    for i, j in itertools.combinations(range(len(graphs)), 2):
        rep.checked += 1
        rounds = {k: runs[k].distinguishing_round(i, j) for k in runs}
        n = min(graphs[i].n, graphs[j].n)
        tag = {"a": named[i][0], "b": named[j][0], "rounds": {str(k): r for k, r in rounds.items()}}
        if rounds[3] is None:
            rep.fail(**tag, problem="3-WL does not distinguish")
        elif rounds[3] > n:
            rep.fail(**tag, problem="more than n rounds")
        else:
            worst = max(worst, rounds[3])
        for k in (1, 2):
            if rounds[k] is not None and rounds[k + 1] is None:
                rep.fail(**tag, problem=f"{k + 1}-WL loses a {k}-WL distinction")
    rep.stats["max_rounds_3wl"] = worst
    rep.stats["graphs"] = len(graphs)


def small_rotation_classes(nmax: int = 5) -> list[RotationSystem]:
    """One representative per isomorphism class of rotation systems of
    graphs with minimum degree 3 on at most ``nmax`` vertices."""
    reps: dict[str, RotationSystem] = {}
    for g in small_graphs(nmax, min_degree=3):
        for cycles in bruteforce.all_rotation_systems(g):
            rot = RotationSystem.from_cycles(g, cycles)
            reps.setdefault(canonical_code_rotation(rot).code, rot)
    return [reps[k] for k in sorted(reps)]


def small_graphs(nmax: int, min_degree: int = 0) -> Iterable[Graph]:
    """Every labeled connected graph with 4..nmax vertices and the given
    minimum degree (exponential; for nmax <= 6)."""
    for n in range(4, nmax + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            deg = [0] * n
            for a, b in edges:
                deg[a] += 1
                deg[b] += 1
            if min(deg) >= min_degree:
                yield Graph(n, edges)


def small_polyhedral_graphs(nmax: int = 6) -> list[Graph]:
    """Isomorphism-class representatives of triconnected planar graphs."""
    reps: dict[str, Graph] = {}
    for g in small_graphs(nmax, min_degree=3):
        if not is_k_connected(g, 3):
            continue
        try:
            code = canonical_code_graph(g).code
        except NotPlanar:
            continue
        reps.setdefault(code, g)
    return [reps[k] for k in sorted(reps)]


def envelope_rotations(nmax: int = 5, k: int = 5) -> dict[str, Any]:
    rots = small_rotation_classes(nmax)
    structs = [Structure.from_rotation(r) for r in rots]
    types = refine(structs, k, 64, budget=10**8)
    empty = (None,) * k
    worst, pairs, bad = 0.0, 0, []
    for i, j in itertools.combinations(range(len(rots)), 2):
        pairs += 1
        depth = types.level(i, empty, j, empty)
        n = min(rots[i].n, rots[j].n)
        bound = 3 * math.log2(n) + 8
        worst = max(worst, depth)
        if not depth < bound:
            bad.append({"a": i, "b": j, "depth": depth, "bound": bound})
    return {"classes": len(rots), "pairs": pairs, "max_depth": worst, "violations": bad}


def envelope_polyhedra(nmax: int = 6, k: int = 4) -> dict[str, Any]:
    graphs = small_polyhedral_graphs(nmax)
    structs = [Structure.from_graph(g) for g in graphs]
    types = refine(structs, k, 64, budget=10**8)
    empty = (None,) * k
    worst, pairs, bad = 0.0, 0, []
    for i, j in itertools.combinations(range(len(graphs)), 2):
        pairs += 1
        depth = types.level(i, empty, j, empty)
        bound = 11 * math.log2(min(graphs[i].n, graphs[j].n)) + 43
        worst = max(worst, depth)
        if not depth < bound:
            bad.append({"a": i, "b": j, "depth": depth, "bound": bound})
    return {"classes": len(graphs), "pairs": pairs, "max_depth": worst, "violations": bad}


def _depth_envelopes(rep: Report) -> None:
    for name, res in (("rotation", envelope_rotations()), ("polyhedral", envelope_polyhedra())):
        rep.checked += res["pairs"]
        rep.stats[f"{name}_classes"] = res["classes"]
        rep.stats[f"max_{name}_depth"] = res["max_depth"]
        for v in res["violations"]:
            rep.fail(family=name, **v)


def run_suite(suite: str, nmax: int = 10, seed: int = 0, instances: list[Instance] | None = None) -> Report:
    if suite not in SUITES:
        raise PlanarCanonError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    rep = Report(suite, nmax, seed)
    if suite in PER_INSTANCE:
        insts = sorted(instances if instances is not None else corpus(nmax, seed), key=lambda i: i.name)
        jobs = [(suite, inst, nmax, seed) for inst in insts]
        if threads() > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=threads()) as pool:
                parts = list(pool.map(_run_one, jobs))
        else:
            parts = [_run_one(j) for j in jobs]
        for part in parts:
            rep.merge(part)
        rep.stats["instances"] = len(insts)
    elif suite == "canon-vs-oracle":
        _canon_vs_oracle(rep, nmax, seed)
    elif suite == "halving-bounds":
        _halving(rep, 8)
    elif suite == "wl-sweep":
        _wl_sweep(rep, nmax, seed)
    else:
        _depth_envelopes(rep)
    return rep


__all__ = [
    "Report",
    "SUITES",
    "distinct_corpus_graphs",
    "envelope_polyhedra",
    "envelope_rotations",
    "halving_fixtures",
    "run_suite",
    "small_graphs",
    "small_polyhedral_graphs",
    "small_rotation_classes",
]
