import pytest

from planarcanon.canon import iso_graphs
from planarcanon.corpus import (
    antiprism,
    corpus,
    generate,
    platonic,
    prism,
    stacked_triangulation,
    wheel,
)
from planarcanon.embedding import embed, faces
from planarcanon.errors import GraphError
from planarcanon.graph import is_k_connected


@pytest.mark.parametrize(
    "g, n, m",
    [(wheel(5), 6, 10), (prism(5), 10, 15), (antiprism(4), 8, 16), (platonic("tetra"), 4, 6),
     (platonic("cube"), 8, 12), (platonic("octa"), 6, 12), (platonic("dodeca"), 20, 30),
     (platonic("icosa"), 12, 30), (stacked_triangulation(5, 1), 9, 21)],
)
def test_family_sizes(g, n, m):
    assert (g.n, g.m) == (n, m)


def test_every_instance_is_a_3_connected_planar_graph():
    for inst in corpus(12, stacked_seeds=2):
        assert is_k_connected(inst.graph, 3), inst.name
        rot = embed(inst.graph)
        assert len(faces(rot)) == 2 - inst.graph.n + inst.graph.m


def test_small_family_members_collapse_onto_solids():
    assert iso_graphs(wheel(3), platonic("tetra"))
    assert iso_graphs(prism(4), platonic("cube"))
    assert iso_graphs(antiprism(3), platonic("octa"))


def test_stacked_triangulations_are_seeded():
    assert stacked_triangulation(6, 4) == stacked_triangulation(6, 4)
    assert generate("stacked-triangulation", 6, 4) == stacked_triangulation(6, 4)
    graphs = {stacked_triangulation(6, s).sorted_edges().__repr__() for s in range(10)}
    assert len(graphs) > 1


def test_corpus_is_deterministic_and_bounded():
    a, b = corpus(10, seed=2), corpus(10, seed=2)
    assert [i.manifest() for i in a] == [i.manifest() for i in b]
    assert all(i.graph.n <= 10 for i in a)
    names = [i.name for i in a]
    assert len(names) == len(set(names))
    assert {i.family for i in a} == {"wheel", "prism", "antiprism", "platonic", "stacked-triangulation"}


def test_generate_dispatch_and_errors():
    assert generate("cube") == platonic("cube")
    assert generate("platonic", "icosa") == platonic("icosa")
    assert generate("wheel", "7") == wheel(7)
    for fam, param in [("moebius", 3), ("platonic", "sphere"), ("stacked-triangulation", -1)]:
        with pytest.raises(GraphError):
            generate(fam, param)
