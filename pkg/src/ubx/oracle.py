"""Brute-force ground truth.

Everything in this module works from distance vectors alone, with no
knowledge of cycles, threads or any of the structure the fast paths
exploit.  Exhaustive search is capped (default 16 vertices, override via
the UBX_ORACLE_CAP environment variable) so a typo can't wedge a test
run for an hour.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapExceededError
from .graph import Graph
from .reports import ForcedReport

DEFAULT_CAP = 16


def oracle_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("UBX_ORACLE_CAP")
    return int(env) if env else DEFAULT_CAP


def _guard(what: str, n: int, cap: int | None) -> None:
    limit = oracle_cap(cap)
    if n > limit:
        raise CapExceededError(what, n, limit)


def is_resolving_set_oracle(graph: Graph, S: Iterable[int]) -> bool:
    """Distance vectors to S, pairwise distinct.  No cap: this is cheap."""
    pts = sorted(set(S))
    if not pts:
        return graph.n <= 1
    dist = graph.distances()
    rows = [dist[s] for s in pts]
    seen = set()
    for v in range(graph.n):
        vec = tuple(row[v] for row in rows)
        if vec in seen:
            return False
        seen.add(vec)
    return True


def metric_dimension_oracle(graph: Graph, cap: int | None = None) -> int:
    _guard("metric_dimension_oracle", graph.n, cap)
    n = graph.n
    if n == 1:
        return 0
    verts = range(n)
    for size in range(1, n + 1):
        for S in combinations(verts, size):
            if is_resolving_set_oracle(graph, S):
                return size
    raise AssertionError("V(G) always resolves G")


def enumerate_metric_bases_oracle(graph: Graph, cap: int | None = None) -> list[tuple[int, ...]]:
    """All minimum resolving sets, in lexicographic order."""
    _guard("enumerate_metric_bases_oracle", graph.n, cap)
    dim = metric_dimension_oracle(graph, cap)
    return [S for S in combinations(range(graph.n), dim) if is_resolving_set_oracle(graph, S)]


def basis_forced_oracle(graph: Graph, cap: int | None = None, keep_bases: bool = True) -> ForcedReport:
    bases = enumerate_metric_bases_oracle(graph, cap)
    forced = set(bases[0])
    for B in bases[1:]:
        forced &= set(B)
        if not forced:
            break
    return ForcedReport(
        dim=len(bases[0]),
        forced=tuple(sorted(forced)),
        method="oracle",
        bases=tuple(bases) if keep_bases else None,
    )


def _strongly_resolves(dist: Sequence[Sequence[int]], w: int, u: int, v: int) -> bool:
    duv = dist[u][v]
    return dist[w][u] == dist[w][v] + duv or dist[w][v] == dist[w][u] + duv


def is_strong_resolving_set_oracle(graph: Graph, S: Iterable[int]) -> bool:
    pts = sorted(set(S))
    dist = graph.distances()
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if not any(_strongly_resolves(dist, w, u, v) for w in pts):
                return False
    return True


def strong_metric_dimension_oracle(graph: Graph, cap: int | None = None) -> int:
    _guard("strong_metric_dimension_oracle", graph.n, cap)
    n = graph.n
    if n == 1:
        return 0
    dist = graph.distances()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    full = (1 << len(pairs)) - 1
    # One bit per vertex pair; a set strongly resolves the graph when the
    # union of its members' bits covers every pair.
    masks = []
    for w in range(n):
        m = 0
        for idx, (u, v) in enumerate(pairs):
            if _strongly_resolves(dist, w, u, v):
                m |= 1 << idx
        masks.append(m)
    for size in range(1, n + 1):
        for S in combinations(range(n), size):
            acc = 0
            for w in S:
                acc |= masks[w]
            if acc == full:
                return size
    raise AssertionError("V(G) always strongly resolves G")
