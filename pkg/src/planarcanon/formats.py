"""Text formats for graphs, rotation systems and layout systems.

Graph::

    p <n> <m>
    e <u> <v>        (m lines, 0-indexed)

Rotation: one line ``v: n1 n2 ... nd`` per vertex, neighbors in clockwise
order starting from the smallest neighbor.  A layout adds ``q b1 a1 a2 b2``
lines and uses the rotation lines only for the undirected neighbor cycles.
Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

from typing import Iterator

from .embedding import LayoutSystem, RotationSystem, layout_of
from .errors import GraphError, InvalidRotation, ParseError
from .graph import Graph


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _int(tok: str, no: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None
    if val < 0:
        raise ParseError(f"negative number {val}", no)
    return val


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for no, toks in _lines(text):
        if toks[0] == "p":
            if n is not None:
                raise ParseError("second header line", no)
            if len(toks) != 3:
                raise ParseError("header must be 'p <n> <m>'", no)
            n, m = _int(toks[1], no), _int(toks[2], no)
        elif toks[0] == "e":
            if n is None:
                raise ParseError("edge before the header", no)
            if len(toks) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", no)
            u, v = _int(toks[1], no), _int(toks[2], no)
            if u >= n or v >= n:
                raise ParseError(f"vertex out of range 0..{n - 1}", no)
            if u == v:
                raise ParseError(f"self-loop at {u}", no)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {key}", no)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", no)
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_graph(g: Graph) -> str:
    out = [f"p {g.n} {g.m}"]
    out += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def _parse_cycles(text: str) -> tuple[dict[int, list[int]], list[tuple[int, list[str]]]]:
    cycles: dict[int, list[int]] = {}
    rest: list[tuple[int, list[str]]] = []
    for no, toks in _lines(text):
        if toks[0].endswith(":"):
            v = _int(toks[0][:-1], no)
            if v in cycles:
                raise ParseError(f"vertex {v} listed twice", no)
            cycles[v] = [_int(t, no) for t in toks[1:]]
        elif toks[0] == "q":
            rest.append((no, toks))
        else:
            raise ParseError(f"expected 'v: neighbors' or 'q ...', got {toks[0]!r}", no)
    n = len(cycles)
    if sorted(cycles) != list(range(n)):
        raise ParseError("vertices must be listed as 0..n-1")
    return cycles, rest


def _graph_of_cycles(cycles: dict[int, list[int]]) -> Graph:
    n = len(cycles)
    edges = set()
    for v, nb in cycles.items():
        for u in nb:
            if u >= n:
                raise ParseError(f"neighbor {u} of {v} out of range")
            edges.add((min(u, v), max(u, v)))
    try:
        g = Graph(n, sorted(edges))
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    for v, nb in cycles.items():
        if sorted(nb) != list(g.adj[v]) or len(set(nb)) != len(nb):
            raise InvalidRotation(v, "cycle is not a permutation of the neighborhood")
    return g


def parse_rotation(text: str) -> RotationSystem:
    cycles, rest = _parse_cycles(text)
    if rest:
        raise ParseError("quadruple lines belong to the layout format", rest[0][0])
    g = _graph_of_cycles(cycles)
    return RotationSystem.from_cycles(g, [cycles[v] for v in range(g.n)])


def write_rotation(rot: RotationSystem) -> str:
    lines = []
    for v in range(rot.n):
        nb = rot.graph.adj[v]
        cyc = rot.cycle(v, nb[0]) if nb else ()
        lines.append(f"{v}: " + " ".join(map(str, cyc)) if cyc else f"{v}:")
    return "\n".join(lines) + "\n"


def parse_layout(text: str) -> LayoutSystem:
    cycles, rest = _parse_cycles(text)
    g = _graph_of_cycles(cycles)
    cyc = []
    for v in range(g.n):
        c = cycles[v]
        cyc.append([(c[i], c[(i + 1) % len(c)]) for i in range(len(c))] if len(c) > 2 else [])
    quads = []
    for no, toks in rest:
        if len(toks) != 5:
            raise ParseError("quadruple line must be 'q b1 a1 a2 b2'", no)
        quads.append(tuple(_int(t, no) for t in toks[1:]))
    return LayoutSystem(g, cyc, quads)  # type: ignore[arg-type]


def write_layout(lay: LayoutSystem | RotationSystem) -> str:
    """Layout of a rotation system (or a layout whose cycles are given as
    edge sets) in text form."""
    if isinstance(lay, RotationSystem):
        text = write_rotation(lay)
        lay = layout_of(lay)
    else:
        text = _layout_cycles_text(lay)
    quads = sorted(lay.quad)
    return text + "".join(f"q {b1} {a1} {a2} {b2}\n" for b1, a1, a2, b2 in quads)


def _layout_cycles_text(lay: LayoutSystem) -> str:
    lines = []
    for v in range(lay.graph.n):
        nb = lay.graph.adj[v]
        if not nb:
            lines.append(f"{v}:")
            continue
        walk = [nb[0]]
        prev = None
        while len(walk) < len(nb):
            options = [x for x in lay.cyc_neighbors(v, walk[-1]) if x != prev and x not in walk]
            if not options:
                break
            prev = walk[-1]
            walk.append(min(options))
        lines.append(f"{v}: " + " ".join(map(str, walk)))
    return "\n".join(lines) + "\n"
