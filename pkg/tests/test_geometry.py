import itertools
import random

import pytest

from planarcanon.corpus import antiprism, corpus, platonic, prism, stacked_triangulation
from planarcanon.embedding import embed
from planarcanon.errors import (
    GeometryInvariantViolation,
    InvalidConfiguration,
    NoIntersection,
    NoStrongIntersection,
)
from planarcanon.geometry import (
    Configuration,
    GeodesicSystem,
    boundaries,
    classify_configuration,
    configurations,
    d0_all_pairs,
    entrances,
    essential_decomposition,
    external_chain,
    nearest_common,
    segment,
    special_vertices,
)
from planarcanon.graph import INF

from conftest import plain, plain_succ
from oracles import avoiding_geodesics, cutpoints as oracle_cutpoints, face_sides

ROTATIONS = [(inst.name, embed(inst.graph)) for inst in corpus(9, seed=0, stacked_seeds=2)]


def shaped(rot, shape, kinds="XH"):
    for kind in kinds:
        for c in configurations(rot.graph, kind):
            if classify_configuration(rot, c) == shape:
                yield c


def sample(seq, k, seed=0):
    seq = list(seq)
    random.Random(seed).shuffle(seq)
    return seq[:k]


# -- classification ------------------------------------------------------------


def test_octahedron_classification():
    rot = embed(platonic("octa"))
    c0, c1, c2, c3 = rot.cycle(0)
    assert classify_configuration(rot, Configuration.X(0, c1, c2, c0, c3)) == "collocated"
    assert classify_configuration(rot, Configuration.X(0, c2, c1, c0, c3)) == "twisted"
    assert classify_configuration(rot, Configuration.X(0, c1, c3, c0, c2)) == "neither"


def test_h_configuration_on_the_prism():
    rot = embed(prism(4))
    assert classify_configuration(rot, Configuration.H(0, 1, 3, 4, 5, 2)) == "twisted"
    assert classify_configuration(rot, Configuration.H(0, 1, 4, 3, 5, 2)) == "collocated"


def test_configuration_validation():
    g = platonic("octa")
    with pytest.raises(InvalidConfiguration):
        Configuration.X(0, 1, 1, 2, 4).validate(g)
    with pytest.raises(InvalidConfiguration):
        Configuration.X(0, 1, 2, 3, 4).validate(g)  # 3 is opposite 0
    with pytest.raises(InvalidConfiguration):
        Configuration.H(0, 3, 1, 2, 4, 5).validate(g)


def test_every_configuration_kind_is_enumerated():
    rot = embed(platonic("cube"))
    assert not list(configurations(rot.graph, "X"))  # cube degree is 3
    hs = list(configurations(rot.graph, "H"))
    assert len(hs) == 12 * 2 * 2 * 2
    shapes = {classify_configuration(rot, c) for c in hs}
    assert shapes == {"collocated", "twisted"}


# -- the avoidance metric ----------------------------------------------------------


def test_octahedron_adjacent_pair():
    rot = embed(platonic("octa"))
    c0, c1, c2, c3 = rot.cycle(0)
    gs = d0_all_pairs(rot, Configuration.X(0, c1, c2, c0, c3))
    assert gs.d0(c1, c0) == 1
    assert gs.S0(c1, c0) == {c1, c0}
    assert all(gs.d0(a, a) == 0 for a in range(rot.n))


def test_icosahedron_collocated_pairs_are_finite():
    rot = embed(platonic("icosa"))
    for c in sample(shaped(rot, "collocated", "X"), 40):
        gs = d0_all_pairs(rot, c)
        assert gs.d0(c.x, c.u) < INF and gs.d0(c.y, c.v) < INF


@pytest.mark.parametrize("name, rot", ROTATIONS[::4])
def test_d0_and_S0_match_path_enumeration(name, rot):
    n, edges = plain(rot.graph)
    for c in sample(itertools.chain(shaped(rot, "collocated"), shaped(rot, "twisted")), 6):
        gs = d0_all_pairs(rot, c)
        for a, b in itertools.combinations(range(n), 2):
            paths = avoiding_geodesics(n, edges, c.vertices, a, b)
            expect = len(paths[0]) - 1 if paths else INF
            assert gs.d0(a, b) == gs.d0(b, a) == expect
            assert gs.S0(a, b) == frozenset(v for p in paths for v in p)
            assert gs.geodesics(a, b) == paths


# -- lemmas checked over the corpus ----------------------------------------------------


@pytest.mark.parametrize("name, rot", ROTATIONS)
def test_collocated_systems_are_nonempty(name, rot):
    for c in shaped(rot, "collocated"):
        gs = GeodesicSystem(rot, c)
        assert gs.d0(c.x, c.u) < INF and gs.d0(c.y, c.v) < INF, str(c)


@pytest.mark.parametrize("name, rot", ROTATIONS[::2])
def test_twisted_geodesics_cross_in_an_inner_point(name, rot):
    n, edges = plain(rot.graph)
    for c in sample(shaped(rot, "twisted"), 60):
        ps = avoiding_geodesics(n, edges, c.vertices, c.x, c.u)
        qs = avoiding_geodesics(n, edges, c.vertices, c.y, c.v)
        if ps and qs:
            assert all(set(p[1:-1]) & set(q[1:-1]) for p in ps for q in qs), str(c)
            assert GeodesicSystem(rot, c).has_strong_intersection_property()


def closing(c, path):
    return list(path) + ([c.w] if c.z == c.w else [c.w, c.z])


@pytest.mark.parametrize("name, rot", ROTATIONS[::2])
def test_exactly_two_boundaries_with_the_reference_convention(name, rot):
    n, edges = plain(rot.graph)
    succ = plain_succ(rot)
    seen = 0
    for c in itertools.chain(shaped(rot, "collocated"), shaped(rot, "twisted")):
        for s, t, ref in ((c.x, c.u, c.y), (c.y, c.v, c.x)):
            paths = avoiding_geodesics(n, edges, c.vertices, s, t)
            support = {v for p in paths for v in p}
            if len(paths) < 2:
                if paths:
                    bp = boundaries(rot, c, s, t)
                    assert bp.singleton and bp.b1 == paths[0]
                continue
            seen += 1
            found = {}
            for p in paths:
                side = face_sides(n, edges, succ, closing(c, p))
                held = {side[v] for v in support if v in side}
                if len(held) <= 1:
                    found[p] = side[ref] in held
            assert len(found) == 2
            bp = boundaries(rot, c, s, t)
            assert {bp.b1, bp.b2} == set(found)
            assert found[bp.b1] and not found[bp.b2]
            if seen > 40:
                return


def test_icosahedron_geodesics_are_unique():
    # every X-configuration of the icosahedron has a single geodesic per pair,
    # so its boundaries are singletons
    rot = embed(platonic("icosa"))
    for c in shaped(rot, "collocated", "X"):
        bp = boundaries(rot, c, c.x, c.u)
        assert bp.singleton


def test_stacked_triangulation_boundary_fixture():
    rot = embed(stacked_triangulation(3, 30))
    c = Configuration.X(0, 2, 6, 5, 1)
    assert classify_configuration(rot, c) == "collocated"
    bp = boundaries(rot, c, c.x, c.u)
    assert (bp.b1, bp.b2) == ((2, 4, 5), (2, 3, 5))
    n, edges = plain(rot.graph)
    side = face_sides(n, edges, plain_succ(rot), closing(c, bp.b1))
    assert side[c.y] == side[3]


@pytest.mark.parametrize("name, rot", ROTATIONS[::3])
def test_block_tree_of_a_support_is_a_path(name, rot):
    for c in sample(itertools.chain(shaped(rot, "collocated"), shaped(rot, "twisted")), 20):
        gs = GeodesicSystem(rot, c)
        if gs.d0(c.x, c.u) == INF:
            continue
        path = gs.one_geodesic(c.x, c.u)
        for s, t in itertools.combinations(path, 2):
            assert gs.block_tree_is_path(s, t)
            sub, old = rot.graph.induced(gs.S0(s, t))
            assert gs.cutpoints(s, t) == {old[v] for v in oracle_cutpoints(*plain(sub))}


@pytest.mark.parametrize("name, rot", ROTATIONS[::2])
def test_cutpoints_of_a_support_are_where_its_boundaries_meet(name, rot):
    for c in sample(itertools.chain(shaped(rot, "collocated"), shaped(rot, "twisted")), 30):
        gs = GeodesicSystem(rot, c)
        for s, t in ((c.x, c.u), (c.y, c.v)):
            if gs.d0(s, t) == INF:
                continue
            bp = gs.boundaries(s, t)
            assert gs.cutpoints(s, t) == set(bp.b1[1:-1]) & set(bp.b2[1:-1])


# -- special vertices and entrances -----------------------------------------------------


def with_special_vertices(rot, shape):
    for c in shaped(rot, shape):
        gs = GeodesicSystem(rot, c)
        try:
            yield c, gs, gs.special_vertices()
        except NoIntersection:
            continue


def first_common(path, other, end):
    seq = path if path[0] == end else path[::-1]
    return next(v for v in seq[1:-1] if v in set(other))


def test_special_vertices_follow_their_definitions():
    checked = 0
    for _, rot in ROTATIONS:
        for shape in ("collocated", "twisted"):
            for c, gs, sv in with_special_vertices(rot, shape):
                bxu, byv = gs.boundaries(c.x, c.u), gs.boundaries(c.y, c.v)
                assert sv.z1 == first_common(bxu.b2, byv.b2, c.x)
                assert sv.x1 == first_common(bxu.b1, byv.b2, c.x)
                assert sv.y1 == first_common(byv.b1, bxu.b2, c.y)
                if shape == "collocated":
                    assert sv.w1 == first_common(bxu.b2, byv.b2, c.u)
                else:
                    assert sv.w1 == first_common(bxu.b1, byv.b1, c.u)
                assert sv.twisted == (shape == "twisted")
                assert special_vertices(rot, c) == sv
                checked += 1
    assert checked > 100


def test_collocated_special_vertices_bound_the_middle_support():
    checked = 0
    for inst in corpus(12, seed=0, stacked_seeds=2):
        rot = embed(inst.graph)
        for c, gs, sv in with_special_vertices(rot, "collocated"):
            if sv.z1 == sv.w1:
                continue
            bxu, byv = gs.boundaries(c.x, c.u), gs.boundaries(c.y, c.v)
            bzw = gs.boundaries(sv.z1, sv.w1)
            assert bzw.b1 == segment(byv.b2, sv.z1, sv.w1)
            assert bzw.b2 == segment(bxu.b2, sv.z1, sv.w1)
            assert {sv.x1, sv.u1} <= set(bzw.b1) and {sv.y1, sv.v1} <= set(bzw.b2)
            checked += 1
    assert checked > 0


def test_entrances_lie_on_the_opposite_boundary_and_contain_the_extremes():
    checked = 0
    for name, rot in ROTATIONS:
        n, edges = plain(rot.graph)
        for shape in ("collocated", "twisted"):
            for c, gs, sv in with_special_vertices(rot, shape):
                ents = entrances(rot, c, "x")
                assert ents <= set(gs.boundaries(c.y, c.v).b2)
                assert {sv.z1, sv.x1} <= ents
                # direct reading of the definition with enumerated paths
                wall = gs.S0(c.y, c.v)
                both = gs.S0(c.x, c.u) & wall
                direct = set()
                for e in both:
                    d = gs.d0(c.x, e)
                    free = avoiding_geodesics(n, edges, set(c.vertices) | (wall - {e}), c.x, e)
                    if free and len(free[0]) - 1 == d:
                        direct.add(e)
                assert ents == direct
                checked += 1
    assert checked > 50


def test_entrances_need_the_intersection_property():
    rot = embed(platonic("octa"))
    c = next(c for c in shaped(rot, "collocated", "X"))
    with pytest.raises(NoIntersection):
        entrances(rot, c, "x")


# -- essential cutpoints and the external chain ---------------------------------------


PRISM_CONFIG = Configuration.H(0, 1, 3, 4, 5, 2)


def test_prism_has_two_essential_cutpoints():
    rot = embed(prism(4))
    gs = GeodesicSystem(rot, PRISM_CONFIG)
    sv = gs.special_vertices()
    dec = essential_decomposition(rot, PRISM_CONFIG)
    assert len(dec.cutpoints) == 2
    assert [gs.d0(sv.z1, e) for e in dec.cutpoints] == sorted(gs.d0(sv.z1, e) for e in dec.cutpoints)
    # each essential cutpoint separates the support between z1 and w1
    sub, old = rot.graph.induced(gs.S0(sv.z1, sv.w1))
    zw_cuts = {old[v] for v in oracle_cutpoints(*plain(sub))}
    degenerate = {e for e in dec.cutpoints if e in (sv.x1, sv.u1) and (e == sv.y1 or e == sv.v1)}
    assert set(dec.cutpoints) - degenerate <= zw_cuts
    # segments: H0 ends at e1, H1 joins e1 to e2, H2 starts at e2
    e1, e2 = dec.cutpoints
    h0, h1, h2 = dec.segments
    assert e1 in h0 and e1 in h1 and e2 in h1 and e2 in h2
    assert h0 & h2 == set()
    assert h0 | h1 | h2 == gs.H


def test_external_chain_fixture():
    rot = embed(prism(4))
    gs = GeodesicSystem(rot, PRISM_CONFIG)
    chain = external_chain(rot, PRISM_CONFIG)
    dec = gs.essential_decomposition()
    assert chain.m == 1
    link = chain.links[0]
    assert link.c == dec.cutpoints[0]
    fence = gs.H | {PRISM_CONFIG.z, PRISM_CONFIG.w}
    assert not set(link.path[1:-1]) & fence
    assert link.path[0] == link.a and link.path[-1] == link.b


def test_chain_invariants_over_the_corpus():
    checked = 0
    for inst in corpus(10, seed=0, stacked_seeds=2):
        rot = embed(inst.graph)
        for c in itertools.chain(shaped(rot, "collocated"), shaped(rot, "twisted")):
            gs = GeodesicSystem(rot, c)
            try:
                chain = gs.external_chain()
            except (NoIntersection, NoStrongIntersection, GeometryInvariantViolation):
                continue
            dec = gs.essential_decomposition()
            sv = gs.special_vertices()
            level = gs.segment_levels(dec)
            fence = gs.H | {c.z, c.w}
            assert chain.m <= len(dec.cutpoints) <= gs.d0(sv.z1, sv.w1) + 1
            for link in chain.links:
                assert not set(link.path[1:-1]) & fence
                assert all(rot.graph.has_edge(a, b) for a, b in zip(link.path, link.path[1:]))
                assert level[link.a] < level[link.c] < level[link.b]
            assert level[chain.links[-1].b] == 2 * len(dec.cutpoints)
            checked += 1
    assert checked > 100


def test_collocated_without_strong_intersection():
    rot = embed(stacked_triangulation(7, 70))
    c = Configuration.X(2, 4, 10, 7, 6)
    assert classify_configuration(rot, c) == "collocated"
    gs = GeodesicSystem(rot, c)
    gs.special_vertices()
    assert not gs.has_strong_intersection_property()
    with pytest.raises(NoStrongIntersection):
        gs.essential_decomposition()


def test_twisted_configuration_without_essential_cutpoint_is_reported():
    # Strong intersection holds, yet no cutpoint of H separates the support
    # between z1 and w1; the decomposition refuses rather than returning an
    # empty chain.
    rot = embed(antiprism(4))
    c = Configuration.X(0, 1, 3, 7, 4)
    gs = GeodesicSystem(rot, c)
    assert gs.has_strong_intersection_property()
    sv = gs.special_vertices()
    assert gs.H_cutpoints() and not gs.H_cutpoints() & gs.cutpoints(sv.z1, sv.w1)
    with pytest.raises(GeometryInvariantViolation):
        gs.essential_decomposition()


def test_path_helpers():
    p = (1, 2, 3, 4, 5)
    assert segment(p, 2, 4) == (2, 3, 4)
    assert segment(p, 4, 2) == (4, 3, 2)
    assert nearest_common(p, {3, 4}, 1) == 3
    assert nearest_common(p, {3, 4}, 5) == 4
    assert nearest_common(p, {1, 5}, 1) is None
