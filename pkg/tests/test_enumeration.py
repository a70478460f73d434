from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EDGE_ISO, path_matrix, sym_matrices
from psets.core import is_pset
from psets.enumeration import (
    PairGraph,
    is_pset_fast,
    maximal_cliques,
    maximal_psets,
    p_vertices,
    pair_graph,
)
from psets.exactla import identity, zeros
from psets.oracle import brute_force_psets, maximal_elements

P5 = path_matrix(5)
I3 = identity(3)


@pytest.mark.parametrize("a, expected", [(P5, (2, 4)), (I3, ()), (EDGE_ISO, (1, 2))])
def test_p_vertices(a, expected):
    assert p_vertices(a) == expected


def test_pair_graph_examples():
    assert pair_graph(P5) == PairGraph((2, 4), frozenset({(2, 4)}))
    assert pair_graph(EDGE_ISO) == PairGraph((1, 2), frozenset())
    assert pair_graph(zeros(4)) == PairGraph((), frozenset())


def test_bad_edge_rejected():
    with pytest.raises(ValueError):
        PairGraph((1,), frozenset({(1, 2)}))


@pytest.mark.parametrize("g, expected", [
    (PairGraph((2, 4), frozenset({(2, 4)})), [(2, 4)]),
    (PairGraph((1, 2), frozenset()), [(1,), (2,)]),
    (PairGraph((), frozenset()), []),
])
def test_maximal_cliques_examples(g, expected):
    assert maximal_cliques(g) == expected


def test_maximal_cliques_two_triangles():
    edges = frozenset({(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)})
    g = PairGraph(tuple(range(1, 7)), edges)
    assert maximal_cliques(g) == [(1, 2, 3), (3, 4, 5), (5, 6)]


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 8))
    verts = tuple(range(1, n + 1))
    pairs = list(combinations(verts, 2))
    edges = frozenset(p for p in pairs if draw(st.booleans()))
    return PairGraph(verts, edges)


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_maximal_cliques_against_subset_scan(g):
    cliques = [s for k in range(1, len(g.vertices) + 1) for s in combinations(g.vertices, k) if g.is_clique(s)]
    assert maximal_cliques(g) == maximal_elements(cliques)


@pytest.mark.parametrize("a, expected", [(P5, [(2, 4)]), (EDGE_ISO, [(1,), (2,)]), (I3, [])])
def test_maximal_psets_examples(a, expected):
    assert maximal_psets(a) == expected


@pytest.mark.parametrize("alpha, expected", [({2, 4}, True), ({2, 3}, False), ((), True), ({4}, True), ({1}, False)])
def test_is_pset_fast_examples(alpha, expected):
    assert is_pset_fast(P5, alpha) is expected


@given(sym_matrices(min_n=1))
@settings(max_examples=150, deadline=None)
def test_enumeration_matches_brute_force(a):
    brute = brute_force_psets(a)
    g = pair_graph(a)
    assert g == pair_graph(a, use_weak_test=True)
    cliques = [s for k in range(1, a.n + 1) for s in combinations(g.vertices, k) if g.is_clique(s)]
    assert sorted(cliques) == sorted(brute)
    maxi = maximal_psets(a)
    assert maxi == maximal_elements(brute)
    for sigma in maxi:
        assert is_pset(a, sigma)
        for j in set(range(1, a.n + 1)) - set(sigma):
            assert not is_pset(a, set(sigma) | {j})
    for s in brute:
        assert any(set(s) <= set(m) for m in maxi)
    for k in range(a.n + 1):
        for s in combinations(range(1, a.n + 1), k):
            assert is_pset_fast(a, s) == is_pset(a, s)


def test_output_is_deterministic():
    a = path_matrix(9)
    assert maximal_psets(a) == maximal_psets(path_matrix(9))
    assert maximal_psets(a) == sorted(maximal_psets(a))
