import random

import pytest

from planarcanon.corpus import corpus
from planarcanon.embedding import embed
from planarcanon.graph import Graph


def plain(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    return g.n, list(g.edges)


def plain_succ(rot) -> dict[int, dict[int, int]]:
    return {a: dict(rot.succ[a]) for a in range(rot.n)}


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(10, seed=0, stacked_seeds=2)


@pytest.fixture(scope="session")
def embedded_corpus(small_corpus):
    return [(inst, embed(inst.graph)) for inst in small_corpus]
