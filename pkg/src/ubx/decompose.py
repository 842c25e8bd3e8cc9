"""Unicyclic structure: cycle extraction, hanging trees, threads.

The cycle is found by repeatedly deleting degree-1 vertices; what survives
is exactly the unique cycle C.  Base labelling is deterministic: v_0 is the
smallest id on C and the direction points toward its smaller-id cycle
neighbor, so reports and fixtures are stable under re-runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import NoActiveVertexError, NotUnicyclicError
from .graph import Graph


@dataclass(frozen=True)
class UnicyclicDecomposition:
    graph: Graph
    cycle: tuple[int, ...]  # v_0..v_{g-1} in base labelling
    components: tuple[tuple[int, ...], ...]  # T_{v_i} per cycle index, sorted ids
    comp_of: tuple[int, ...]  # vertex id -> cycle index of its component
    threads: tuple[tuple[tuple[int, ...], ...], ...]  # per vertex id, root-to-leaf
    ell: tuple[int, ...]  # threads attached per vertex
    L: int
    branching: frozenset[int]
    branch_active: frozenset[int]  # cycle indices whose T contains a branching vertex
    b: int

    @property
    def g(self) -> int:
        return len(self.cycle)

    def cycle_pos(self, v: int) -> int:
        """Base-labelling index of a cycle vertex."""
        return self._pos[v]

    @property
    def _pos(self) -> dict[int, int]:
        pos = getattr(self, "_pos_cache", None)
        if pos is None:
            pos = {v: i for i, v in enumerate(self.cycle)}
            object.__setattr__(self, "_pos_cache", pos)
        return pos

    def is_reduced(self) -> bool:
        """True when every hanging tree is a star of pendants at its cycle vertex."""
        for i, comp in enumerate(self.components):
            root = self.cycle[i]
            for v in comp:
                if v != root and self.graph.degree(v) != 1:
                    return False
        return True


@dataclass(frozen=True)
class CanonicalLabelling:
    offset: int  # base-labelling index chosen as new v_0
    direction: int  # +1 or -1
    k: int  # largest S-active index under this labelling
    order: tuple[int, ...]  # original vertex ids in canonical order v_0..v_{g-1}
    active: tuple[int, ...]  # sorted S-active canonical indices
    a: int  # a(S)

    @property
    def g(self) -> int:
        return len(self.order)


def decompose_unicyclic(graph: Graph) -> UnicyclicDecomposition:
    n = graph.n
    if graph.m != n:
        raise NotUnicyclicError(f"need |E| = |V| for a unicyclic graph, got {graph.m} != {n}")

    # Peel leaves until only the cycle remains.
    deg = [graph.degree(v) for v in range(n)]
    on_cycle = [True] * n
    queue = deque(v for v in range(n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        on_cycle[v] = False
        for w in graph.neighbors(v):
            if on_cycle[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    cycle_set = {v for v in range(n) if on_cycle[v]}

    # Base labelling: start at the smallest cycle id, walk toward the
    # smaller of its two cycle neighbors.
    v0 = min(cycle_set)
    cyc_nbrs = sorted(w for w in graph.neighbors(v0) if w in cycle_set)
    cycle = [v0, cyc_nbrs[0]]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = next(w for w in graph.neighbors(cur) if w in cycle_set and w != prev)
        if nxt == v0:
            break
        cycle.append(nxt)
    g = len(cycle)

    # Components of G - E(C): BFS from each cycle vertex into its tree.
    comp_of = [-1] * n
    components: list[list[int]] = []
    for i, root in enumerate(cycle):
        comp = [root]
        comp_of[root] = i
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in graph.neighbors(u):
                if w not in cycle_set and comp_of[w] < 0:
                    comp_of[w] = i
                    comp.append(w)
                    queue.append(w)
        components.append(sorted(comp))

    # Threads: from v, walk away through a non-cycle edge while interior
    # degrees stay 2; a walk ending in a leaf is a thread at v.
    threads: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for v in range(n):
        for u in graph.neighbors(v):
            if v in cycle_set and u in cycle_set:
                continue  # cycle edge, not a tree direction
            path = [u]
            prev, cur = v, u
            while graph.degree(cur) == 2:
                nxt = next(w for w in graph.neighbors(cur) if w != prev)
                path.append(nxt)
                prev, cur = cur, nxt
            if graph.degree(cur) == 1:
                threads[v].append(tuple(path))
    ell = [len(ts) for ts in threads]
    big_l = sum(e - 1 for e in ell if e > 1)

    branching = frozenset(
        v
        for v in range(n)
        if (graph.degree(v) >= 4 if v in cycle_set else graph.degree(v) >= 3)
    )
    branch_active = frozenset(
        i for i, comp in enumerate(components) if any(v in branching for v in comp)
    )

    return UnicyclicDecomposition(
        graph=graph,
        cycle=tuple(cycle),
        components=tuple(tuple(c) for c in components),
        comp_of=tuple(comp_of),
        threads=tuple(tuple(ts) for ts in threads),
        ell=tuple(ell),
        L=big_l,
        branching=branching,
        branch_active=branch_active,
        b=len(branch_active),
    )


def active_cycle_indices(dec: UnicyclicDecomposition, S: Iterable[int]) -> set[int]:
    """Base-labelling indices i with S ∩ T_{v_i} nonempty."""
    return {dec.comp_of[x] for x in S}


def canonical_labelling(dec: UnicyclicDecomposition, S: Iterable[int]) -> CanonicalLabelling:
    """Relabel C so v_0 is S-active and the largest S-active index k is
    minimal; ties go to the smallest base offset, then direction +1."""
    active = sorted(active_cycle_indices(dec, S))
    if not active:
        raise NoActiveVertexError("S does not touch any cycle component")
    g = dec.g
    best: tuple[int, int, int] | None = None
    for off in active:
        for direction in (1, -1):
            k = max(((i - off) * direction) % g for i in active)
            key = (k, off, 0 if direction == 1 else 1)
            if best is None or key < best:
                best = key
    k, offset, diridx = best
    direction = 1 if diridx == 0 else -1
    order = tuple(dec.cycle[(offset + direction * t) % g] for t in range(g))
    canon_active = tuple(sorted(((i - offset) * direction) % g for i in active))
    return CanonicalLabelling(
        offset=offset,
        direction=direction,
        k=k,
        order=order,
        active=canon_active,
        a=len(canon_active),
    )
