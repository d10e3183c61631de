"""Immutable digon-free digraph with exact BFS-layer neighborhoods.

Vertices are dense integers in [0, n).  Adjacency is stored as one Python
int per vertex used as a bitset, so all neighborhood queries are a few
bit operations regardless of n (arbitrary-precision ints remove any
64-vertex limit at identical semantics).

Distance follows the shortest-directed-path convention with
dist(u, u) = 0, so u is never inside a layer k >= 1 and u always belongs
to its own walkable neighborhood.  Unreachable distance is infinity, never
a large finite stand-in.

All derivation operations (edge/vertex deletion, induced subgraphs) return
new graphs; values are safe to share between concurrent workers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DigonPair,
    DuplicateEdge,
    EmptySubset,
    EmptyVertexSet,
    LoopEdge,
    NonPositiveK,
    NoSuchEdge,
    VertexOutOfRange,
    WouldBeEmpty,
)

Edge = tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


@dataclass(frozen=True)
class NeighborhoodProfile:
    """Sizes of the first and second out-neighborhood of one vertex.

    anti_satisfaction is n1 - n2; the vertex is satisfactory when that
    difference is <= 0 (a sink, n1 = 0, is trivially satisfactory).
    """

    vertex: int
    n1: int
    n2: int

    @property
    def anti_satisfaction(self) -> int:
        return self.n1 - self.n2

    @property
    def satisfactory(self) -> bool:
        return self.n1 <= self.n2


class Digraph:
    """A loop-free, digon-free directed graph on vertices 0..n-1.

    Construction validates the edge list; the first offending edge in
    canonical (sorted) order is reported.  Instances are immutable:
    ``edges`` is a sorted tuple and is the canonical iteration order.
    """

    __slots__ = ("n", "edges", "_out", "_in")

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 1:
            raise EmptyVertexSet()
        ordered = sorted(tuple(e) for e in edges)
        out_masks = [0] * n
        in_masks = [0] * n
        for u, v in ordered:
            if not 0 <= u < n:
                raise VertexOutOfRange(u, n)
            if not 0 <= v < n:
                raise VertexOutOfRange(v, n)
            if u == v:
                raise LoopEdge(u)
            if out_masks[u] >> v & 1:
                raise DuplicateEdge(u, v)
            if out_masks[v] >> u & 1:
                raise DigonPair(u, v)
            out_masks[u] |= 1 << v
            in_masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(ordered))
        object.__setattr__(self, "_out", tuple(out_masks))
        object.__setattr__(self, "_in", tuple(in_masks))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Digraph is immutable")

    def __reduce__(self):
        # immutability blocks slot-based unpickling; rebuild through the
        # validating constructor instead
        return (Digraph, (self.n, self.edges))

    # -- basic accessors ----------------------------------------------------

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={list(self.edges)!r})"

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise VertexOutOfRange(u, self.n)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._out[u] >> v & 1)

    def out_mask(self, u: int) -> int:
        """Out-neighbors of u as a bitset (bit v set iff (u,v) is an edge)."""
        self._check_vertex(u)
        return self._out[u]

    def in_mask(self, u: int) -> int:
        self._check_vertex(u)
        return self._in[u]

    def out_neighbors(self, u: int) -> set[int]:
        return set(_bits(self.out_mask(u)))

    def in_neighbors(self, u: int) -> set[int]:
        return set(_bits(self.in_mask(u)))

    def out_degree(self, u: int) -> int:
        return self.out_mask(u).bit_count()

    def in_degree(self, u: int) -> int:
        return self.in_mask(u).bit_count()

    def vertices(self) -> range:
        return range(self.n)

    # -- BFS layers ----------------------------------------------------------

    def _layers(self, u: int, rows: tuple[int, ...]) -> list[int]:
        """Bitsets of the exact-distance-k layers from u, k = 1, 2, ...."""
        seen = 1 << u
        frontier = 1 << u
        layers: list[int] = []
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            nxt &= ~seen
            if not nxt:
                break
            layers.append(nxt)
            seen |= nxt
            frontier = nxt
        return layers

    def kth_neighborhood(self, u: int, k: int, direction: str = "out") -> set[int]:
        """Vertices at directed distance exactly k from u (or to u, for "in")."""
        self._check_vertex(u)
        if k < 1:
            raise NonPositiveK(k)
        if direction not in ("out", "in"):
            raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")
        rows = self._out if direction == "out" else self._in
        layers = self._layers(u, rows)
        if k > len(layers):
            return set()
        return set(_bits(layers[k - 1]))

    def walkable_neighborhood(self, u: int) -> set[int]:
        """All vertices at finite directed distance from u, including u itself."""
        self._check_vertex(u)
        mask = 1 << u
        for layer in self._layers(u, self._out):
            mask |= layer
        return set(_bits(mask))

    def _second_mask(self, u: int) -> int:
        first = self._out[u]
        second = 0
        for v in _bits(first):
            second |= self._out[v]
        return second & ~first & ~(1 << u)

    def profile(self, u: int) -> NeighborhoodProfile:
        """|N1|, |N2| and the derived anti-satisfaction of u."""
        self._check_vertex(u)
        return NeighborhoodProfile(
            vertex=u,
            n1=self._out[u].bit_count(),
            n2=self._second_mask(u).bit_count(),
        )

    def profiles(self) -> list[NeighborhoodProfile]:
        return [self.profile(u) for u in range(self.n)]

    def satisfactory_vertices(self) -> set[int]:
        """Vertices with |N1| <= |N2|; empty exactly for a conjecture counterexample."""
        return {u for u in range(self.n) if self.profile(u).satisfactory}

    def first_satisfactory_vertex(self) -> int | None:
        """Smallest satisfactory vertex, or None if the graph has none."""
        for u in range(self.n):
            if self._out[u].bit_count() <= self._second_mask(u).bit_count():
                return u
        return None

    # -- derivations ----------------------------------------------------------

    def induced_subgraph(self, subset: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
        """Subgraph on ``subset`` with vertices relabeled densely.

        Relative order is preserved; returns (graph, old-id -> new-id map)
        so witnesses found in the subgraph can be translated back.
        """
        keep = sorted(set(subset))
        if not keep:
            raise EmptySubset()
        for u in keep:
            self._check_vertex(u)
        relabel = {old: new for new, old in enumerate(keep)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in self.edges
            if u in relabel and v in relabel
        ]
        return Digraph(len(keep), edges), relabel

    def delete_edge(self, edge: Edge) -> Digraph:
        """Same vertex set, one edge fewer."""
        u, v = edge
        if not (0 <= u < self.n and 0 <= v < self.n) or not self._out[u] >> v & 1:
            raise NoSuchEdge(u, v)
        return Digraph(self.n, [e for e in self.edges if e != (u, v)])

    def delete_vertex(self, u: int) -> tuple[Digraph, dict[int, int]]:
        """Drop u and all incident edges; survivors are relabeled densely."""
        self._check_vertex(u)
        if self.n < 2:
            raise WouldBeEmpty()
        relabel = {old: (old if old < u else old - 1) for old in range(self.n) if old != u}
        edges = [(relabel[a], relabel[b]) for a, b in self.edges if a != u and b != u]
        return Digraph(self.n - 1, edges), relabel


def from_edges(n: int, edges: Iterable[Edge]) -> Digraph:
    """Build a validated Digraph from a vertex count and an edge list."""
    return Digraph(n, edges)
