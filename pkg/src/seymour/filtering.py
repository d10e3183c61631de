"""Necessary-condition filter for minimal conjecture counterexamples.

A minimal counterexample (fewest edges, then fewest vertices, among all
digraphs with no satisfactory vertex) must pass every check below.  The
checks are necessary conditions only: a verdict never certifies
membership, it can only rule graphs out.  Each failure carries a concrete
witness that can be replayed against the graph.

Condition indices:

  0  no satisfactory vertex (the counterexample prerequisite)
  1  strongly connected
  2  every vertex has anti-satisfaction 1 or 2
  3  every edge (u,v): paths of length 1 or 2 from u avoiding the edge
     cover all but at most one of {v} ∪ N1(v)
  4  every edge is the base of a transitive triangle or a 2-directed diamond
  5  every edge (u,v) with |N1(u)| <= |N1(v)| is the base of at least
     |N1(v)| - |N1(u)| + 1 transitive triangles and as many diamond apexes
  6  every vertex has an in-neighbor with anti-satisfaction exactly 1
  7  the vertices with anti-satisfaction exactly 1 induce a directed cycle

Evaluation order is fixed (cheap per-vertex scans first, per-edge path
checks last) so reports are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .digraph import Digraph, Edge, _bits
from .errors import ConditionOutOfRange, NoSuchEdge
from .structure import (
    diamond_base_targets,
    has_directed_cycle,
    is_strongly_connected,
    triangle_base_count,
)

#: Fixed evaluation order used by run_filter and the search engine.
EVALUATION_ORDER: tuple[int, ...] = (0, 2, 1, 6, 7, 4, 3, 5)

CONDITION_COUNT = 8

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of one condition: pass, fail (with witness), or not-applicable.

    not-applicable marks an empty quantification domain (e.g. condition 5
    on a graph with no applicable edge) and counts as a pass.
    """

    condition: int
    status: str
    witness: dict[str, Any] | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict[str, Any]:
        return {
            "condition": self.condition,
            "status": self.status,
            "witness": self.witness,
        }


@dataclass
class FilterReport:
    """Verdicts in evaluation order plus the aggregate survival flag."""

    verdicts: list[ConditionVerdict]
    survived: bool
    evaluation_order: list[int] = field(default_factory=list)

    @property
    def first_failure(self) -> ConditionVerdict | None:
        for v in self.verdicts:
            if v.status == FAIL:
                return v
        return None

    def as_dict(self) -> dict[str, Any]:
        return {
            "verdicts": [v.as_dict() for v in self.verdicts],
            "survived": self.survived,
            "evaluation_order": self.evaluation_order,
        }


def avoiding_reach(g: Digraph, edge: Edge) -> tuple[set[int], set[int]]:
    """Split {v} ∪ N1(v) by reachability from u without traversing (u,v).

    Walks of length 1 or 2 are allowed; only the edge (u,v) itself is
    barred, intermediate vertices are unrestricted.  Returns
    (covered, missing); the two sets partition {v} ∪ N1(v).
    """
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g._out[u] >> v & 1:
        raise NoSuchEdge(u, v)
    targets = g._out[v] | (1 << v)
    step1 = g._out[u] & ~(1 << v)
    reach = step1
    for a in _bits(step1):
        # (a, b) can never equal (u, v): a != u since loops are forbidden.
        reach |= g._out[a]
    covered = targets & reach
    missing = targets & ~reach
    return set(_bits(covered)), set(_bits(missing))


def _check_no_satisfactory(g: Digraph) -> ConditionVerdict:
    for u in range(g.n):
        p = g.profile(u)
        if p.satisfactory:
            witness = {"vertex": u, "anti_satisfaction": p.anti_satisfaction}
            return ConditionVerdict(0, FAIL, witness)
    return ConditionVerdict(0, PASS)


def _check_strongly_connected(g: Digraph) -> ConditionVerdict:
    if is_strongly_connected(g):
        return ConditionVerdict(1, PASS)
    # Find the lexicographically first unreachable ordered pair as witness.
    for u in range(g.n):
        reach = g.walkable_neighborhood(u)
        for v in range(g.n):
            if v not in reach:
                return ConditionVerdict(1, FAIL, {"source": u, "target": v})
    raise AssertionError("unreachable: connectivity check disagreed with itself")


def _check_anti_satisfaction_band(g: Digraph) -> ConditionVerdict:
    for u in range(g.n):
        a = g.profile(u).anti_satisfaction
        if a not in (1, 2):
            return ConditionVerdict(2, FAIL, {"vertex": u, "anti_satisfaction": a})
    return ConditionVerdict(2, PASS)


def _check_avoiding_paths(g: Digraph) -> ConditionVerdict:
    if not g.edges:
        return ConditionVerdict(3, NOT_APPLICABLE)
    for e in g.edges:
        _, missing = avoiding_reach(g, e)
        if len(missing) > 1:
            witness = {"edge": list(e), "missing": sorted(missing)}
            return ConditionVerdict(3, FAIL, witness)
    return ConditionVerdict(3, PASS)


def _check_every_edge_is_base(g: Digraph) -> ConditionVerdict:
    if not g.edges:
        return ConditionVerdict(4, NOT_APPLICABLE)
    for e in g.edges:
        if triangle_base_count(g, e) == 0 and not diamond_base_targets(g, e):
            return ConditionVerdict(4, FAIL, {"edge": list(e)})
    return ConditionVerdict(4, PASS)


def _check_base_multiplicity(g: Digraph) -> ConditionVerdict:
    applicable = False
    for u, v in g.edges:
        d_u = g._out[u].bit_count()
        d_v = g._out[v].bit_count()
        if d_u > d_v:
            continue
        applicable = True
        required = d_v - d_u + 1
        triangles = triangle_base_count(g, (u, v))
        apexes = len(diamond_base_targets(g, (u, v)))
        if triangles < required or apexes < required:
            witness = {
                "edge": [u, v],
                "required": required,
                "triangle_bases": triangles,
                "diamond_apexes": apexes,
            }
            return ConditionVerdict(5, FAIL, witness)
    if not applicable:
        return ConditionVerdict(5, NOT_APPLICABLE)
    return ConditionVerdict(5, PASS)


def _check_in_neighbor_band(g: Digraph) -> ConditionVerdict:
    anti = [g.profile(u).anti_satisfaction for u in range(g.n)]
    for u in range(g.n):
        if not any(anti[w] == 1 for w in _bits(g._in[u])):
            return ConditionVerdict(6, FAIL, {"vertex": u})
    return ConditionVerdict(6, PASS)


def _check_band_cycle(g: Digraph) -> ConditionVerdict:
    ones = [u for u in range(g.n) if g.profile(u).anti_satisfaction == 1]
    if not ones:
        return ConditionVerdict(7, FAIL, {"vertices": []})
    sub, _ = g.induced_subgraph(ones)
    if has_directed_cycle(sub):
        return ConditionVerdict(7, PASS)
    return ConditionVerdict(7, FAIL, {"vertices": ones})


_CHECKS = {
    0: _check_no_satisfactory,
    1: _check_strongly_connected,
    2: _check_anti_satisfaction_band,
    3: _check_avoiding_paths,
    4: _check_every_edge_is_base,
    5: _check_base_multiplicity,
    6: _check_in_neighbor_band,
    7: _check_band_cycle,
}


def check_condition(g: Digraph, k: int) -> ConditionVerdict:
    """Evaluate one condition; the verdict's witness explains any failure."""
    if k not in _CHECKS:
        raise ConditionOutOfRange(k)
    return _CHECKS[k](g)


def run_filter(g: Digraph, short_circuit: bool = True) -> FilterReport:
    """Run all conditions in the fixed order, optionally stopping early.

    A graph that survives all eight checks is a candidate minimal
    counterexample, nothing more.  With short_circuit the verdict list is
    truncated at the first failure; the survived flag is the same either
    way.
    """
    verdicts: list[ConditionVerdict] = []
    survived = True
    for k in EVALUATION_ORDER:
        verdict = check_condition(g, k)
        verdicts.append(verdict)
        if verdict.status == FAIL:
            survived = False
            if short_circuit:
                break
    return FilterReport(
        verdicts=verdicts,
        survived=survived,
        evaluation_order=[v.condition for v in verdicts],
    )
