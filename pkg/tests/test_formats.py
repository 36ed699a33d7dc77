import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarcanon.corpus import corpus
from planarcanon.embedding import conjugate, embed, layout_of
from planarcanon.errors import InvalidRotation, ParseError
from planarcanon.formats import (
    parse_graph,
    parse_layout,
    parse_rotation,
    write_graph,
    write_layout,
    write_rotation,
)

GRAPHS = [inst.graph for inst in corpus(10, stacked_seeds=1)]


def test_graph_text_round_trip():
    for g in GRAPHS:
        assert parse_graph(write_graph(g)) == g


def test_graph_text_ignores_comments_and_blank_lines():
    g = parse_graph("# triangle\n\np 3 3\ne 0 1   # first\ne 1 2\n\ne 0 2\n")
    assert g.m == 3 and g.has_edge(0, 2)


@pytest.mark.parametrize(
    "text, line",
    [
        ("p 3 1\ne 0 3\n", 2),
        ("p 3 1\ne 1 1\n", 2),
        ("p 3 2\ne 0 1\ne 1 0\n", 3),
        ("e 0 1\n", 1),
        ("p 3 x\n", 1),
        ("p 3 1\nz 0 1\n", 2),
    ],
)
def test_graph_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_graph_edge_count_must_match_header():
    with pytest.raises(ParseError):
        parse_graph("p 3 2\ne 0 1\n")


def test_rotation_round_trip_and_smallest_neighbor_first():
    for g in GRAPHS:
        rot = embed(g)
        text = write_rotation(rot)
        for line in text.splitlines():
            v, rest = line.split(":")
            nbrs = [int(x) for x in rest.split()]
            assert nbrs[0] == min(nbrs)
        assert parse_rotation(text) == rot


def test_rotation_parser_rejects_non_permutations():
    with pytest.raises(InvalidRotation):
        parse_rotation("0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 1\n")
    with pytest.raises(ParseError):
        parse_rotation("0: 1 2 3\n2: 0 1 3\n")


def test_layout_round_trip():
    for g in GRAPHS[:12]:
        rot = embed(g)
        lay = layout_of(rot)
        text = write_layout(rot)
        assert parse_layout(text) == lay
        assert parse_layout(write_layout(lay)) == lay
        assert write_layout(conjugate(rot)).count("\nq ") == text.count("\nq ")


def test_layout_quadruple_lines_must_have_four_numbers():
    with pytest.raises(ParseError):
        parse_layout("0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\nq 1 0 2\n")


@given(st.text(alphabet="pe0123 :#q\n", max_size=60))
@settings(max_examples=200, deadline=None)
def test_parsers_fail_only_with_library_errors(text):
    from planarcanon.errors import PlanarCanonError

    for parse in (parse_graph, parse_rotation, parse_layout):
        try:
            parse(text)
        except PlanarCanonError:
            pass
