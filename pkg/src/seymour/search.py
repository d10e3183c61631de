"""Exhaustive and randomized search over digon-free digraphs.

The exhaustive universe on n vertices assigns each unordered vertex pair
one of three states (absent / forward / backward), giving 3^(n(n-1)/2)
labeled graphs.  Graphs are totally ordered by the base-3 state vector
(pairs ordered (0,1), (0,2), ..., (n-2,n-1), earlier pairs most
significant), and the index -> graph mapping is a pure function, so index
ranges partition cleanly across workers.

The hot loop asks one question per graph, "is there a satisfactory
vertex?", and answers it for whole index ranges at once with vectorized
batch adjacency math; only the (expected zero) graphs with no such vertex
are materialized and pushed through the full condition filter.

Randomness is implementation-pinned: PCG64 seeded through SeedSequence,
with the sample at position i drawing from entropy (seed, i), so serial
and parallel runs agree sample by sample.
"""
from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Iterator, Sequence

import numpy as np

from .digraph import Digraph
from .errors import (
    CeilingExceeded,
    EmptyVertexSet,
    InvalidProbability,
    RetriesExhausted,
)
from .filtering import (
    CONDITION_COUNT,
    PASS,
    ConditionVerdict,
    FilterReport,
    run_filter,
)
from .structure import has_transitive_triangle
from .textio import write_digraph

DEFAULT_CEILING = 6

RANDOM_MODELS = ("tournament", "digon_free", "acyclic", "triangle_free")

_EXHAUSTIVE_CHUNK = 3**10
_RANDOM_CHUNK = 128

SeedLike = int | tuple[int, ...]


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def space_size(n: int) -> int:
    """Number of labeled digon-free digraphs on n vertices: 3^(n(n-1)/2)."""
    return 3 ** pair_count(n)


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def graph_at_index(n: int, index: int) -> Digraph:
    """Decode one enumeration index into its digraph (pure function)."""
    if n < 1:
        raise EmptyVertexSet()
    total = space_size(n)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside [0, {total})")
    states = []
    rem = index
    for _ in range(pair_count(n)):
        rem, s = divmod(rem, 3)
        states.append(s)
    states.reverse()
    edges = []
    for (u, v), state in zip(_pairs(n), states):
        if state == 1:
            edges.append((u, v))
        elif state == 2:
            edges.append((v, u))
    return Digraph(n, edges)


def enumerate_digon_free(n: int, ceiling: int = DEFAULT_CEILING) -> Iterator[Digraph]:
    """Yield every labeled digon-free digraph on n vertices in index order."""
    if n < 1:
        raise EmptyVertexSet()
    if n > ceiling:
        raise CeilingExceeded(n, ceiling)
    for index in range(space_size(n)):
        yield graph_at_index(n, index)


# -- seeded random models -----------------------------------------------------


def _rng(seed: SeedLike) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise InvalidProbability(p)


def random_tournament(n: int, seed: SeedLike) -> Digraph:
    """Every unordered pair gets exactly one orientation, coin-flipped."""
    if n < 1:
        raise EmptyVertexSet()
    rng = _rng(seed)
    pairs = _pairs(n)
    flips = rng.random(len(pairs))
    edges = [(u, v) if f < 0.5 else (v, u) for (u, v), f in zip(pairs, flips)]
    return Digraph(n, edges)


def _digon_free_draw(n: int, p: float, rng: np.random.Generator) -> Digraph:
    pairs = _pairs(n)
    present = rng.random(len(pairs)) < p
    forward = rng.random(len(pairs)) < 0.5
    edges = [
        (u, v) if fwd else (v, u)
        for (u, v), keep, fwd in zip(pairs, present, forward)
        if keep
    ]
    return Digraph(n, edges)


def random_digon_free(n: int, p: float, seed: SeedLike) -> Digraph:
    """Each unordered pair is oriented (fair coin) with probability p, else absent."""
    if n < 1:
        raise EmptyVertexSet()
    _check_probability(p)
    return _digon_free_draw(n, p, _rng(seed))


def random_acyclic(n: int, p: float, seed: SeedLike) -> Digraph:
    """A random topological order with each forward pair kept with probability p."""
    if n < 1:
        raise EmptyVertexSet()
    _check_probability(p)
    rng = _rng(seed)
    order = np.argsort(rng.random(n), kind="stable")
    pairs = _pairs(n)
    present = rng.random(len(pairs)) < p
    edges = [
        (int(order[i]), int(order[j]))
        for (i, j), keep in zip(pairs, present)
        if keep
    ]
    return Digraph(n, edges)


def random_triangle_free(
    n: int, p: float, seed: SeedLike, max_retries: int = 1000
) -> Digraph:
    """Rejection-sample digon-free graphs until none has a transitive triangle."""
    if n < 1:
        raise EmptyVertexSet()
    _check_probability(p)
    if max_retries < 1:
        raise ValueError(f"max_retries must be >= 1, got {max_retries}")
    rng = _rng(seed)
    for _ in range(max_retries):
        g = _digon_free_draw(n, p, rng)
        if not has_transitive_triangle(g):
            return g
    raise RetriesExhausted(max_retries)


# -- search specification and report ------------------------------------------


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one search run; equal specs give equal reports (mod timing)."""

    mode: str  # "exhaustive" | "random"
    n: int
    model: str | None = None
    p: float | None = None
    count: int | None = None
    seed: int = 0
    workers: int = 1
    filter_enabled: bool = True
    ceiling: int = DEFAULT_CEILING
    max_retries: int = 1000

    def validate(self) -> None:
        if self.n < 1:
            raise EmptyVertexSet()
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.mode == "exhaustive":
            if self.n > self.ceiling:
                raise CeilingExceeded(self.n, self.ceiling)
        elif self.mode == "random":
            if self.model not in RANDOM_MODELS:
                raise ValueError(f"unknown random model {self.model!r}")
            if self.count is None or self.count < 1:
                raise ValueError("random mode needs count >= 1")
            if self.model != "tournament":
                if self.p is None:
                    raise ValueError(f"model {self.model!r} needs an edge probability p")
                _check_probability(self.p)
        else:
            raise ValueError(f"unknown search mode {self.mode!r}")


@dataclass(frozen=True)
class SurvivorRecord:
    """A graph that passed every evaluated condition, with its evidence."""

    index: int
    graph_text: str
    report: FilterReport

    def as_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "graph": self.graph_text,
            "filter": self.report.as_dict(),
        }


@dataclass
class SearchReport:
    spec: SearchSpec
    graphs_examined: int
    counterexamples_found: int
    per_condition_rejections: list[int]
    filter_survivors: list[SurvivorRecord]
    elapsed_seconds: float

    def as_dict(self) -> dict[str, Any]:
        return {
            "spec": asdict(self.spec),
            "graphs_examined": self.graphs_examined,
            "counterexamples_found": self.counterexamples_found,
            "per_condition_rejections": list(self.per_condition_rejections),
            "filter_survivors": [s.as_dict() for s in self.filter_survivors],
            "elapsed_ms": int(self.elapsed_seconds * 1000),
        }


@dataclass
class _ChunkResult:
    examined: int = 0
    counterexamples: int = 0
    rejections: list[int] = field(default_factory=lambda: [0] * CONDITION_COUNT)
    survivors: list[SurvivorRecord] = field(default_factory=list)

    def merge(self, other: "_ChunkResult") -> None:
        self.examined += other.examined
        self.counterexamples += other.counterexamples
        self.rejections = [a + b for a, b in zip(self.rejections, other.rejections)]
        self.survivors.extend(other.survivors)


def _record_counterexample(
    g: Digraph, index: int, filter_enabled: bool, result: _ChunkResult
) -> None:
    """Handle a graph already known to have no satisfactory vertex."""
    result.counterexamples += 1
    if filter_enabled:
        report = run_filter(g, short_circuit=True)
        if report.survived:
            result.survivors.append(SurvivorRecord(index, write_digraph(g), report))
        else:
            first = report.first_failure
            assert first is not None
            result.rejections[first.condition] += 1
    else:
        report = FilterReport([ConditionVerdict(0, PASS)], True, [0])
        result.survivors.append(SurvivorRecord(index, write_digraph(g), report))


def _counterexample_mask(n: int, start: int, stop: int) -> np.ndarray:
    """True at offset i iff the graph at index start+i has no satisfactory vertex.

    Builds the whole index range as a stacked boolean adjacency batch and
    measures |N1| and |N2| per vertex with two-step reachability.  Must
    agree with Digraph.profile on every graph; tests enforce that.
    """
    pairs = _pairs(n)
    P = len(pairs)
    weights = np.array([3 ** (P - 1 - j) for j in range(P)], dtype=np.int64)
    idx = np.arange(start, stop, dtype=np.int64)
    digits = (idx[:, None] // weights) % 3 if P else np.zeros((len(idx), 0), np.int64)
    adj = np.zeros((len(idx), n, n), dtype=bool)
    for j, (u, v) in enumerate(pairs):
        col = digits[:, j]
        adj[:, u, v] = col == 1
        adj[:, v, u] = col == 2
    reach2 = np.zeros_like(adj)
    for mid in range(n):
        reach2 |= adj[:, :, mid, None] & adj[:, None, mid, :]
    second = reach2 & ~adj & ~np.eye(n, dtype=bool)
    n1 = adj.sum(axis=2)
    n2 = second.sum(axis=2)
    return ~(n1 <= n2).any(axis=1)


def _exhaustive_chunk(spec: SearchSpec, start: int, stop: int) -> _ChunkResult:
    result = _ChunkResult(examined=stop - start)
    if space_size(spec.n) < 2**62:
        mask = _counterexample_mask(spec.n, start, stop)
        candidates = (np.nonzero(mask)[0] + start).tolist()
    else:  # beyond int64 indexing; same semantics, object path
        candidates = []
        for index in range(start, stop):
            if graph_at_index(spec.n, index).first_satisfactory_vertex() is None:
                candidates.append(index)
    result.rejections[0] += result.examined - len(candidates)
    for index in candidates:
        g = graph_at_index(spec.n, int(index))
        _record_counterexample(g, int(index), spec.filter_enabled, result)
    return result


def _sample_graph(spec: SearchSpec, index: int) -> Digraph:
    entropy = (spec.seed, index)
    if spec.model == "tournament":
        return random_tournament(spec.n, entropy)
    if spec.model == "digon_free":
        return random_digon_free(spec.n, spec.p, entropy)
    if spec.model == "acyclic":
        return random_acyclic(spec.n, spec.p, entropy)
    if spec.model == "triangle_free":
        return random_triangle_free(spec.n, spec.p, entropy, spec.max_retries)
    raise ValueError(f"unknown random model {spec.model!r}")


def _random_chunk(spec: SearchSpec, start: int, stop: int) -> _ChunkResult:
    result = _ChunkResult(examined=stop - start)
    for index in range(start, stop):
        g = _sample_graph(spec, index)
        if g.first_satisfactory_vertex() is None:
            _record_counterexample(g, index, spec.filter_enabled, result)
        else:
            result.rejections[0] += 1
    return result


def _search_chunk(task: tuple[SearchSpec, int, int]) -> _ChunkResult:
    spec, start, stop = task
    if spec.mode == "exhaustive":
        return _exhaustive_chunk(spec, start, stop)
    return _random_chunk(spec, start, stop)


def _chunk_tasks(spec: SearchSpec) -> list[tuple[SearchSpec, int, int]]:
    if spec.mode == "exhaustive":
        total = space_size(spec.n)
        chunk = _EXHAUSTIVE_CHUNK
    else:
        total = spec.count or 0
        chunk = _RANDOM_CHUNK
    return [
        (spec, start, min(start + chunk, total)) for start in range(0, total, chunk)
    ]


def run_search(spec: SearchSpec) -> SearchReport:
    """Run the search described by spec and aggregate a deterministic report.

    Work is split into fixed index ranges merged back in range order, so
    the report is identical (apart from elapsed time) for any worker
    count.
    """
    spec.validate()
    started = time.perf_counter()
    tasks = _chunk_tasks(spec)
    if spec.workers == 1 or len(tasks) <= 1:
        parts: Sequence[_ChunkResult] = [_search_chunk(t) for t in tasks]
    else:
        with multiprocessing.Pool(spec.workers) as pool:
            parts = pool.map(_search_chunk, tasks)
    total = _ChunkResult()
    for part in parts:
        total.merge(part)
    return SearchReport(
        spec=spec,
        graphs_examined=total.examined,
        counterexamples_found=total.counterexamples,
        per_condition_rejections=total.rejections,
        filter_survivors=total.survivors,
        elapsed_seconds=time.perf_counter() - started,
    )
