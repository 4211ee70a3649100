import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glmy.digraph import (
    CycleError,
    Digraph,
    EmptyGraphError,
    ParseError,
    SelfLoopError,
    check_acyclic,
    max_allowed_path_length,
    parse_digraph,
    parse_edge_list,
    parse_json,
    to_edge_list,
    to_json,
)

from conftest import EXAMPLE_1, EXAMPLE_2


def test_parse_example_1(ex1):
    assert ex1.n == 4
    assert len(ex1.edges) == 6
    assert ex1.labels == (1, 2, 3, 4)


def test_parse_example_2(ex2):
    assert ex2.n == 6
    assert len(ex2.edges) == 8
    assert ex2.labels == (0, 1, 2, 3, 4, 5)


def test_self_edge_rejected():
    with pytest.raises(SelfLoopError):
        parse_edge_list("1->1")


def test_two_cycle_witness():
    with pytest.raises(CycleError) as info:
        parse_edge_list("a->b\nb->a")
    assert info.value.witness == ("a", "b", "a")


def test_longer_cycle_witness_is_a_real_cycle():
    with pytest.raises(CycleError) as info:
        parse_edge_list("x->a\na->b\nb->c\nc->a")
    w = info.value.witness
    assert w[0] == w[-1] and len(w) == 4
    edges = {("a", "b"), ("b", "c"), ("c", "a")}
    assert all((w[i], w[i + 1]) in edges for i in range(len(w) - 1))


def test_comments_blank_lines_and_duplicates():
    g = parse_edge_list("# header\n\na->b   # trailing\na->b\n  \nb->c\n")
    assert g.n == 3 and len(g.edges) == 2
    assert g.duplicate_edges == 1


@pytest.mark.parametrize(
    "text, line, column",
    [("a->b\nc-d->e->f", 2, 7), ("->b", 1, 1), ("a b->c", 1, 1), ("a->", 1, 4)],
)
def test_syntax_errors_report_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_empty_input():
    with pytest.raises(EmptyGraphError, match="empty graph"):
        parse_edge_list("# nothing\n\n")


def test_isolated_vertex_lines():
    g = parse_edge_list("a\nb->c\nd")
    assert g.labels == ("a", "b", "c", "d")
    assert g.weak_components() == 3


def test_check_acyclic_example_1(ex1):
    order = check_acyclic(ex1)
    assert [ex1.labels[i] for i in order] == [1, 2, 3, 4]


def test_check_acyclic_forward_edges(ex2):
    pos = {v: i for i, v in enumerate(check_acyclic(ex2))}
    assert all(pos[u] < pos[v] for u, v in ex2.edges)


def test_single_vertex():
    g = parse_edge_list("v")
    assert check_acyclic(g) == (0,)
    assert max_allowed_path_length(g) == 0


def test_max_allowed_path_length(ex1, ex2):
    assert max_allowed_path_length(ex1) == 3
    assert max_allowed_path_length(ex2) == 2
    assert max_allowed_path_length(parse_edge_list("\n".join("abcde"))) == 0


def test_json_input_matches_edge_list(ex2):
    g = parse_json('{"vertices":[0,1,2,3,4,5],"edges":[[0,1],[0,2],[1,3],[1,4],[2,3],[2,4],[5,3],[5,4]]}')
    assert g == ex2
    assert parse_digraph(to_json(ex2)) == ex2


def test_json_errors():
    with pytest.raises(ParseError):
        parse_json("{not json")
    with pytest.raises(SelfLoopError):
        parse_json('{"edges": [[1, 1]]}')
    with pytest.raises(EmptyGraphError):
        parse_json('{"vertices": [], "edges": []}')


def test_round_trip_examples():
    for text in (EXAMPLE_1, EXAMPLE_2):
        g = parse_edge_list(text)
        assert parse_edge_list(to_edge_list(g)) == g


@st.composite
def digraphs(draw):
    n = draw(st.integers(1, 7))
    pool = st.one_of(st.integers(-50, 500), st.text("abcxyz_", min_size=1, max_size=4))
    labels = draw(st.lists(pool, min_size=n, max_size=n, unique_by=str))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    perm = draw(st.permutations(range(n)))
    edges = frozenset((perm[i], perm[j]) for i, j in chosen)
    return Digraph(tuple(labels), edges)


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_round_trip_property(g):
    assert parse_edge_list(to_edge_list(g)) == g
    assert parse_digraph(to_json(g)) == g


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_longest_path_bound(g):
    d = max_allowed_path_length(g)
    assert 0 <= d <= g.n - 1
