"""Structural predicates over digon-free digraphs.

Cycle and connectivity tests, underlying girth, and the two local patterns
the counterexample filter counts per edge: transitive triangles (an edge
whose endpoints share an out-neighbor) and 2-directed diamonds (two
internally disjoint 2-paths from a common tail to a common apex).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .digraph import Digraph, Edge, _bits
from .errors import NoSuchEdge

#: Girth of the undirected shadow: an int >= 3, or math.inf when acyclic.
GirthValue = float

INFINITE_GIRTH: GirthValue = math.inf


@dataclass(frozen=True)
class DiamondWitness:
    """Four distinct vertices carrying edges (t,u), (u,w), (t,v), (v,w).

    (t,u) and (t,v) are the bases of the diamond, w its apex.
    """

    t: int
    u: int
    v: int
    w: int


def _closure(rows: tuple[int, ...], start: int) -> int:
    """Bitset of everything reachable from start (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    """True iff every ordered vertex pair is joined by a directed path."""
    full = (1 << g.n) - 1
    return _closure(g._out, 0) == full and _closure(g._in, 0) == full


def has_directed_cycle(g: Digraph) -> bool:
    """True iff g contains a directed cycle (necessarily of length >= 3)."""
    indeg = [g._in[u].bit_count() for u in range(g.n)]
    queue = deque(u for u in range(g.n) if indeg[u] == 0)
    peeled = 0
    while queue:
        u = queue.popleft()
        peeled += 1
        for v in _bits(g._out[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return peeled < g.n


def underlying_girth(g: Digraph) -> GirthValue:
    """Shortest cycle length after forgetting edge directions, or infinity.

    BFS from every vertex on the undirected shadow; a non-tree edge closing
    two BFS branches bounds the girth, and starting inside a shortest cycle
    attains it exactly.
    """
    shadow = [g._out[u] | g._in[u] for u in range(g.n)]
    best = INFINITE_GIRTH
    for start in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in _bits(shadow[x]):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x] and x != parent[y]:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def has_transitive_triangle(g: Digraph) -> bool:
    """True iff some edge (a,b) has a shared out-neighbor of a and b."""
    return any(g._out[u] & g._out[v] for u, v in g.edges)


def _require_edge(g: Digraph, edge: Edge) -> Edge:
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g._out[u] >> v & 1:
        raise NoSuchEdge(u, v)
    return u, v


def triangle_base_count(g: Digraph, edge: Edge) -> int:
    """Number of transitive triangles having ``edge`` as base: |N1(u) ∩ N1(v)|."""
    u, v = _require_edge(g, edge)
    return (g._out[u] & g._out[v]).bit_count()


def diamond_base_targets(g: Digraph, edge: Edge) -> set[int]:
    """Apexes w of 2-directed diamonds having ``edge`` = (t,u) as a base.

    w qualifies when (u,w) is an edge and some v outside {t,u,w} carries
    (t,v) and (v,w).  A diamond's count per base is the number of distinct
    apexes; use :func:`diamond_witnesses` to recover the (v,w) pairs.
    """
    t, u = _require_edge(g, edge)
    excluded = (1 << t) | (1 << u)
    targets = set()
    for w in _bits(g._out[u]):
        mids = g._out[t] & g._in[w] & ~excluded & ~(1 << w)
        if mids:
            targets.add(w)
    return targets


def diamond_witnesses(g: Digraph, edge: Edge) -> list[DiamondWitness]:
    """All 2-directed diamonds with ``edge`` as a base, as full 4-tuples."""
    t, u = _require_edge(g, edge)
    excluded = (1 << t) | (1 << u)
    found = []
    for w in _bits(g._out[u]):
        for v in _bits(g._out[t] & g._in[w] & ~excluded & ~(1 << w)):
            found.append(DiamondWitness(t=t, u=u, v=v, w=w))
    return found


def min_outdegree_vertex(g: Digraph) -> int:
    """A vertex of minimum out-degree; ties broken by smallest id."""
    return min(range(g.n), key=lambda u: (g._out[u].bit_count(), u))
