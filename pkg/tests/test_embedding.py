import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarcanon.corpus import platonic, prism, wheel
from planarcanon.embedding import (
    LayoutInconsistency,
    LayoutSystem,
    RotationSystem,
    conjugate,
    embed,
    faces,
    genus_check,
    layout_of,
    rotations_of_layout,
    validate_rotation,
)
from planarcanon.errors import InvalidRotation, NotPlanar, NotTriconnected
from planarcanon.graph import Graph

from conftest import complete_graph, cycle_graph, random_relabel

K4_CYCLES = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]


def k4_rotation() -> RotationSystem:
    return RotationSystem.from_cycles(complete_graph(4), K4_CYCLES)


def test_k4_rotation_is_valid():
    assert validate_rotation(k4_rotation()) is None
    assert genus_check(k4_rotation()) == 2


def test_rotation_with_two_cycles_is_rejected():
    g = complete_graph(4)
    succ = [dict(m) for m in k4_rotation().succ]
    succ[0] = {1: 2, 2: 1, 3: 3}
    bad = validate_rotation(RotationSystem(g, tuple(succ)))
    assert bad is not None and bad.vertex == 0


def test_rotation_naming_a_non_neighbor_is_rejected():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (4, 3)])
    rot = embed(g)
    succ = [dict(m) for m in rot.succ]
    succ[0] = {1: 2, 2: 4, 4: 1}
    bad = validate_rotation(RotationSystem(g, tuple(succ)))
    assert bad is not None and bad.vertex == 0
    assert "non-neighbor" in bad.reason
    with pytest.raises(InvalidRotation):
        RotationSystem.from_cycles(g, [(1, 2, 4), *rot.cycles()[1:]])


def test_low_degree_is_rejected():
    with pytest.raises(InvalidRotation):
        RotationSystem.from_cycles(cycle_graph(4), [(1, 3), (0, 2), (1, 3), (0, 2)])


def test_conjugate_reverses_each_cycle_and_is_an_involution():
    rot = k4_rotation()
    conj = conjugate(rot)
    assert conj.cycle(0) == (1, 3, 2)
    for a in range(4):
        assert conj.cycle(a) == (rot.cycle(a)[0], *reversed(rot.cycle(a)[1:]))
    assert conjugate(conj) == rot
    assert conj != rot


@pytest.mark.parametrize(
    "graph, count, length",
    [(complete_graph(4), 4, 3), (platonic("cube"), 6, 4), (platonic("octa"), 8, 3),
     (platonic("dodeca"), 12, 5), (platonic("icosa"), 20, 3)],
)
def test_platonic_faces(graph, count, length):
    fs = faces(embed(graph))
    assert len(fs) == count
    assert {len(f) for f in fs.faces} == {length}


def test_faces_partition_darts_and_follow_the_tracing_rule(embedded_corpus):
    for inst, rot in embedded_corpus:
        fs = faces(rot)
        darts = [d for i in range(len(fs)) for d in fs.darts(i)]
        assert len(darts) == 2 * rot.graph.m == len(set(darts))
        for i in range(len(fs)):
            ds = fs.darts(i)
            for (u, v), (v2, w) in zip(ds, ds[1:] + ds[:1]):
                assert v == v2 and w == rot.s(v, u)
        assert genus_check(rot) == 2, inst.name


def test_transposing_one_cycle_of_k4_drops_below_the_sphere():
    succ = [dict(m) for m in k4_rotation().succ]
    succ[0] = {1: 3, 3: 2, 2: 1}
    assert genus_check(RotationSystem(complete_graph(4), tuple(succ))) < 2


def test_layout_of_k4():
    rot = k4_rotation()
    lay = layout_of(rot)
    assert lay == layout_of(conjugate(rot))
    assert lay.cyc[0] == frozenset({(1, 2), (2, 3), (1, 3)})
    # two unordered quadruples per edge, each standing for both directions
    assert len(lay.quad) == 2 * 6
    for a1, a2 in rot.graph.directed_edges():
        assert len(lay.quads_through(a1, a2)) == 2


def test_layout_round_trip_over_corpus(embedded_corpus):
    for inst, rot in embedded_corpus:
        got = rotations_of_layout(layout_of(rot))
        assert not isinstance(got, LayoutInconsistency), inst.name
        assert set(got) == {rot, conjugate(rot)}


def test_layout_with_a_swapped_quadruple_is_inconsistent():
    rot = embed(prism(4))
    lay = layout_of(rot)
    a1, a2 = 0, 1
    (p, _, _, x), (s, _, _, y) = lay.quads_through(a1, a2)
    # same cyc relation and two quadruples per edge, but the continuations
    # across the edge 0-1 are crossed over
    kept = [q for q in lay.quad if {q[1], q[2]} != {a1, a2}]
    bad = LayoutSystem(lay.graph, lay.cyc, kept + [(p, a1, a2, y), (s, a1, a2, x)])
    got = rotations_of_layout(bad)
    assert isinstance(got, LayoutInconsistency)
    assert got.path_a and got.path_b


def test_embed_examples():
    assert len(faces(embed(complete_graph(4)))) == 4
    with pytest.raises(NotPlanar):
        embed(complete_graph(5))
    with pytest.raises(NotTriconnected):
        embed(cycle_graph(6))


def test_embed_rejects_k33():
    k33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    with pytest.raises(NotPlanar):
        embed(k33)


def test_embed_is_deterministic(small_corpus):
    for inst in small_corpus:
        assert embed(inst.graph) == embed(Graph(inst.graph.n, inst.graph.sorted_edges()[::-1]))


@given(st.integers(3, 12), st.integers(0, 2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_relabeled_wheels_embed_on_the_sphere(k, seed):
    g = random_relabel(wheel(k), random.Random(seed))
    rot = embed(g)
    assert validate_rotation(rot) is None
    assert genus_check(rot) == 2
    assert len(faces(rot)) == k + 1
