import math

import pytest
from hypothesis import given, settings

import oracles
from seymour import (
    Digraph,
    diamond_base_targets,
    diamond_witnesses,
    has_directed_cycle,
    has_transitive_triangle,
    is_strongly_connected,
    min_outdegree_vertex,
    triangle_base_count,
    underlying_girth,
)
from seymour.errors import NoSuchEdge
from strategies import digraphs, digraphs_with_edge

C3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
C5 = Digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
TT = Digraph(3, [(0, 1), (0, 2), (1, 2)])
DIAMOND = Digraph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])  # t=0, u=1, v=2, w=3


def test_strong_connectivity():
    assert is_strongly_connected(C3)
    assert not is_strongly_connected(TT)  # nothing reaches the source
    assert is_strongly_connected(Digraph(1))


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_strong_connectivity_matches_oracle(g):
    assert is_strongly_connected(g) == oracles.strongly_connected(g.n, g.edges)


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_strong_connectivity_equals_total_walkability(g):
    full = set(range(g.n))
    walkable_everywhere = all(g.walkable_neighborhood(u) == full for u in range(g.n))
    assert is_strongly_connected(g) == walkable_everywhere


def test_directed_cycle():
    assert has_directed_cycle(C3)
    assert not has_directed_cycle(TT)
    assert not has_directed_cycle(Digraph(1))


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_directed_cycle_matches_oracle(g):
    assert has_directed_cycle(g) == oracles.has_cycle(g.n, g.edges)


def test_girth_examples():
    assert underlying_girth(TT) == 3
    assert underlying_girth(C5) == 5
    assert underlying_girth(Digraph(4, [(0, 1), (1, 2), (2, 3)])) == math.inf
    assert underlying_girth(Digraph(1)) == math.inf


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_girth_matches_edge_removal_oracle(g):
    assert underlying_girth(g) == oracles.girth(g.n, g.edges)


def test_transitive_triangle_detection():
    assert has_transitive_triangle(TT)
    assert not has_transitive_triangle(C3)
    assert not has_transitive_triangle(C5)


def test_triangle_base_count():
    assert triangle_base_count(TT, (0, 1)) == 1
    assert all(triangle_base_count(C3, e) == 0 for e in C3.edges)
    # two shared out-neighbors of 0 and 1 (frozen from the set oracle)
    g = Digraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert triangle_base_count(g, (0, 1)) == 2
    assert triangle_base_count(g, (0, 1)) == len(
        oracles.triangle_bases(g.n, g.edges, (0, 1))
    )


def test_triangle_base_missing_edge():
    with pytest.raises(NoSuchEdge):
        triangle_base_count(C3, (1, 0))


def test_diamond_base_targets():
    assert diamond_base_targets(DIAMOND, (0, 1)) == {3}
    assert all(diamond_base_targets(C3, e) == set() for e in C3.edges)
    assert diamond_base_targets(TT, (0, 1)) == set()  # no fourth vertex


@settings(max_examples=120, deadline=None)
@given(digraphs_with_edge(max_n=7))
def test_diamond_targets_match_quadruple_enumeration(ge):
    g, e = ge
    assert diamond_base_targets(g, e) == oracles.diamond_apexes(g.n, g.edges, e)


@settings(max_examples=80, deadline=None)
@given(digraphs_with_edge(max_n=7))
def test_diamond_witnesses_are_real_and_cover_targets(ge):
    g, e = ge
    witnesses = diamond_witnesses(g, e)
    for w in witnesses:
        assert len({w.t, w.u, w.v, w.w}) == 4
        assert (w.t, w.u) == e
        assert g.has_edge(w.u, w.w) and g.has_edge(w.t, w.v) and g.has_edge(w.v, w.w)
    assert {w.w for w in witnesses} == diamond_base_targets(g, e)


def test_min_outdegree_vertex():
    assert min_outdegree_vertex(TT) == 2  # the sink
    assert min_outdegree_vertex(C3) == 0  # tie broken by id


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_min_outdegree_satisfactory_when_triangle_free(g):
    # without transitive triangles the minimum-out-degree vertex cannot be
    # beaten: its second neighborhood swallows a whole first neighborhood
    if not has_transitive_triangle(g):
        assert g.profile(min_outdegree_vertex(g)).satisfactory


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_counterexamples_would_need_cycles(g):
    if not g.satisfactory_vertices():
        assert has_directed_cycle(g)


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_some_triangle_base_iff_triangle_exists(g):
    any_base = any(triangle_base_count(g, e) >= 1 for e in g.edges)
    assert any_base == has_transitive_triangle(g)
