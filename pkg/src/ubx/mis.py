"""Exact maximum independent sets on small graphs.

Branch and bound over vertex bitmasks with two safe reductions (isolated
and degree-1 vertices always join the set) and memoization.  Strong
resolving graphs of unicyclic graphs are cliques plus paths plus isolated
vertices, which this handles instantly; the cap exists for the arbitrary
graphs the verifier throws at it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError

DEFAULT_MIS_CAP = 64


@dataclass(frozen=True)
class MISResult:
    alpha: int
    witness: tuple[int, ...]  # one maximum independent set, sorted
    corona: frozenset[int]  # vertices in some maximum independent set
    core: frozenset[int]  # vertices in every maximum independent set
    vc: frozenset[int]  # complement of the corona


class _Solver:
    def __init__(self, closed: Sequence[int]):
        self.closed = closed
        self.memo: dict[int, tuple[int, int]] = {0: (0, 0)}

    def solve(self, live: int) -> tuple[int, int]:
        """(alpha, one witness mask) restricted to the `live` vertex set."""
        hit = self.memo.get(live)
        if hit is not None:
            return hit
        closed = self.closed
        rest = live
        result = None
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            nbrs = closed[v] & live & ~low
            if nbrs == 0 or nbrs & (nbrs - 1) == 0:
                # v has at most one live neighbor: taking it is always safe.
                size, mask = self.solve(live & ~closed[v])
                result = (size + 1, mask | low)
                break
        if result is None:
            best_v, best_deg = -1, -1
            rest = live
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                d = (closed[v] & live).bit_count() - 1
                if d > best_deg:
                    best_v, best_deg = v, d
            with_v = self.solve(live & ~closed[best_v])
            without_v = self.solve(live & ~(1 << best_v))
            if with_v[0] + 1 >= without_v[0]:
                result = (with_v[0] + 1, with_v[1] | (1 << best_v))
            else:
                result = without_v
        self.memo[live] = result
        return result


def max_independent_set(
    n: int, edges: Sequence[tuple[int, int]], cap: int = DEFAULT_MIS_CAP
) -> MISResult:
    if n > cap:
        raise CapExceededError("max_independent_set", n, cap)
    closed = [1 << v for v in range(n)]
    for u, v in edges:
        closed[u] |= 1 << v
        closed[v] |= 1 << u

    solver = _Solver(closed)
    full = (1 << n) - 1
    alpha, witness_mask = solver.solve(full)

    corona = set()
    core = set()
    for v in range(n):
        if solver.solve(full & ~closed[v])[0] + 1 == alpha:
            corona.add(v)
        if solver.solve(full & ~(1 << v))[0] < alpha:
            core.add(v)

    witness = tuple(v for v in range(n) if witness_mask >> v & 1)
    return MISResult(
        alpha=alpha,
        witness=witness,
        corona=frozenset(corona),
        core=frozenset(core),
        vc=frozenset(range(n)) - frozenset(corona),
    )
