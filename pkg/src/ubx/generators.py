"""Worked-example fixtures and seeded corpus generation.

The fixture catalog pins down the small graphs the regression tests in
tests/ assert against; ids follow the convention cycle-first (0..g-1 in
base labelling), then tree vertices in cycle-index order, root to leaf.
The fig1 graphs are the only non-unicyclic entries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from typing import Iterator

from .errors import BoundsInfeasibleError
from .graph import Graph


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    notes: dict


def _cycle_edges(g: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % g) for i in range(g)]


def decorated_cycle(g: int, decoration: tuple[tuple[int, ...], ...]) -> Graph:
    """C_g with decoration[i] giving the thread lengths hanging at v_i."""
    edges = _cycle_edges(g)
    n = g
    for pos in range(g):
        for length in decoration[pos]:
            prev = pos
            for _ in range(length):
                edges.append((prev, n))
                prev = n
                n += 1
    return Graph(n, edges)


def fixtures() -> dict[str, Fixture]:
    fig1_edges = [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3),
        (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
    ]
    fig1_labels = {0: "v1", 1: "r1", 2: "c", 3: "w1", 4: "x", 5: "y"}
    fig1_g = Graph(6, fig1_edges, labels=fig1_labels)
    fig1_h1 = Graph(7, fig1_edges + [(0, 6)], labels={**fig1_labels, 6: "u1"})
    fig1_h2 = Graph(8, fig1_edges + [(0, 6), (1, 7)], labels={**fig1_labels, 6: "u1", 7: "u2"})
    cut = [e for e in fig1_edges if e != (0, 1)]
    fig1_gp = Graph(6, cut, labels=fig1_labels)
    fig1_h1p = Graph(7, cut + [(0, 6)], labels={**fig1_labels, 6: "u1"})

    c6 = _cycle_edges(6)
    fig2a = Graph(11, c6 + [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)])
    fig2b = Graph(11, c6 + [(1, 6), (6, 7), (2, 8), (3, 9), (5, 10)])
    fig2c = Graph(12, c6 + [(2, 6), (6, 7), (6, 8), (6, 9), (3, 10), (4, 11)])

    fig3_g = Graph(
        15,
        c6
        + [(1, 6)]
        + [(3, 7), (7, 8)]
        + [(3, 9), (9, 10), (9, 11)]
        + [(4, 12), (12, 13), (13, 14)],
    )
    fig3_gp = Graph(11, c6 + [(1, 6), (3, 7), (3, 8), (3, 9), (4, 10)])

    catalog = {
        "fig1-G": Fixture("fig1-G", fig1_g, {"dim": 2, "forced": (0, 1), "uniqueBasis": (0, 1)}),
        "fig1-H1": Fixture("fig1-H1", fig1_h1, {"dim": 2, "forced": (1, 6), "pendant": 6}),
        "fig1-H2": Fixture("fig1-H2", fig1_h2, {"dim": 2, "forced": (6, 7), "pendant": 7}),
        "fig1-Gp": Fixture("fig1-Gp", fig1_gp, {"dim": 2, "forced": (0, 1), "uniqueBasis": (0, 1)}),
        "fig1-H1p": Fixture("fig1-H1p", fig1_h1p, {"dim": 2, "pendantNotForced": 6}),
        "fig2a": Fixture("fig2a", fig2a, {"dim": 2, "forced": (6, 10), "uniqueBasis": (6, 10)}),
        "fig2b": Fixture("fig2b", fig2b, {"dim": 2, "forced": (10,), "gray": (6, 7, 9)}),
        "fig2c": Fixture("fig2c", fig2c, {"dim": 3, "forced": (0,), "gray": (7, 8, 9)}),
        "fig3-G": Fixture("fig3-G", fig3_g, {"dimS": 5, "strongForced": (8, 10, 11)}),
        "fig3-Gp": Fixture("fig3-Gp", fig3_gp, {"dimS": 5, "strongForced": (7, 8, 9)}),
    }
    return catalog


def gen_gn(n: int) -> Graph:
    """Even-cycle family: C_{2n+2} with a pendant on each of v_0..v_{n+1}."""
    if n < 2:
        raise BoundsInfeasibleError("family parameter must be at least 2")
    g = 2 * n + 2
    return decorated_cycle(g, tuple((1,) if i <= n + 1 else () for i in range(g)))


def gen_gtq(t: int, q: int) -> Graph:
    """Odd-cycle family: C_{2t+1} with q pendants on each of v_0, v_t, v_{t+1}, v_{2t}."""
    if t < 2 or q < 2:
        raise BoundsInfeasibleError("family parameters must be at least 2")
    g = 2 * t + 1
    tufts = {0, t, t + 1, 2 * t}
    return decorated_cycle(g, tuple((1,) * q if i in tufts else () for i in range(g)))


@dataclass(frozen=True)
class GenSpec:
    g: int
    decoration: tuple[tuple[int, ...], ...] | None = None
    seed: int = 0
    max_n: int = 14
    max_threads: int = 2
    max_thread_len: int = 3
    branch_prob: float = 0.0

    def validate(self) -> None:
        if self.g < 3:
            raise BoundsInfeasibleError(f"girth {self.g} below 3")
        if self.g > self.max_n:
            raise BoundsInfeasibleError(f"girth {self.g} exceeds max_n {self.max_n}")
        if self.max_threads < 0 or self.max_thread_len < 1:
            raise BoundsInfeasibleError("bounds must be positive")
        if self.decoration is not None:
            if len(self.decoration) != self.g:
                raise BoundsInfeasibleError("decoration must list one entry per cycle vertex")
            if self.g + sum(map(sum, self.decoration)) > self.max_n:
                raise BoundsInfeasibleError("decoration exceeds max_n")


def gen_random_unicyclic(spec: GenSpec) -> Graph:
    """Deterministic per seed.  Thread counts fall off geometrically, lengths
    are uniform within bounds; branch_prob occasionally reroots a multi-thread
    tuft through a fresh hub vertex so the trees are not always spiders."""
    spec.validate()
    if spec.decoration is not None:
        return decorated_cycle(spec.g, spec.decoration)

    rng = random.Random(spec.seed)
    g = spec.g
    edges = _cycle_edges(g)
    n = g
    budget = spec.max_n - g
    for pos in range(g):
        lengths = []
        while len(lengths) < spec.max_threads and budget > 0 and rng.random() < 0.45:
            length = rng.randint(1, min(spec.max_thread_len, budget))
            lengths.append(length)
            budget -= length
        if not lengths:
            continue
        root = pos
        if len(lengths) >= 2 and budget > 0 and rng.random() < spec.branch_prob:
            edges.append((pos, n))
            root = n
            n += 1
            budget -= 1
        for length in lengths:
            prev = root
            for _ in range(length):
                edges.append((prev, n))
                prev = n
                n += 1
    return Graph(n, edges)


def gen_random_reduced(g: int, seed: int = 0, max_n: int = 24, max_pendants: int = 3) -> Graph:
    """Star form only: every cycle vertex carries pendants, nothing deeper."""
    rng = random.Random(seed)
    budget = max_n - g
    decoration = []
    for _ in range(g):
        c = 0
        while c < max_pendants and budget > 0 and rng.random() < 0.45:
            c += 1
            budget -= 1
        decoration.append((1,) * c)
    return decorated_cycle(g, tuple(decoration))


def random_corpus(
    count: int,
    seed: int = 0,
    max_n: int = 14,
    girths: tuple[int, ...] = (3, 4, 5, 6, 7, 8, 9),
    branch_prob: float = 0.25,
) -> list[Graph]:
    out = []
    for i in range(count):
        spec = GenSpec(
            g=girths[i % len(girths)],
            seed=seed * 1_000_003 + i,
            max_n=max_n,
            branch_prob=branch_prob,
        )
        out.append(gen_random_unicyclic(spec))
    return out


def forced_instances(count: int, seed: int = 0, max_n: int = 14) -> list[Graph]:
    """Seeded graphs that each contain at least one basis forced vertex.

    Forcedness is rare under uniform decoration, so this samples
    pendant-heavy even cycles and keeps the hits; the acceptance rate is
    roughly one in three, which keeps rejection cheap.
    """
    from .decompose import decompose_unicyclic
    from .resolve import basis_forced_fast

    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        g = rng.choice((6, 8))
        budget = max_n - g
        decoration: list[tuple[int, ...]] = []
        for _ in range(g):
            lens: list[int] = []
            if budget > 0 and rng.random() < 0.75:
                ln = min(rng.choice((1, 1, 2)), budget)
                lens.append(ln)
                budget -= ln
            decoration.append(tuple(lens))
        graph = gen_random_unicyclic(
            GenSpec(g=g, seed=rng.randrange(1 << 30), decoration=tuple(decoration), max_n=max_n)
        )
        if basis_forced_fast(decompose_unicyclic(graph)).forced:
            out.append(graph)
    return out


@cache
def _partitions(s: int) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing positive tuples summing to s; ( ) for s = 0."""
    if s == 0:
        return ((),)
    out = []
    for first in range(s, 0, -1):
        for rest in _partitions(s - first):
            if not rest or rest[0] <= first:
                out.append((first,) + rest)
    return tuple(out)


def _canonical_decoration(dec: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    g = len(dec)
    best = None
    for r in range(g):
        for step in (1, -1):
            cand = tuple(dec[(r + step * t) % g] for t in range(g))
            if best is None or cand < best:
                best = cand
    return best


def _weight_splits(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weight_splits(total - first, slots - 1):
            yield (first,) + rest


def exhaustive_corpus(max_n: int) -> list[Graph]:
    """Every decorated cycle with at most max_n vertices, one per symmetry
    class of the decoration.  Spider trees only; the random corpus covers
    deeper branching."""
    graphs = []
    for g in range(3, max_n + 1):
        seen: set[tuple] = set()
        for extra in range(max_n - g + 1):
            for split in _weight_splits(extra, g):
                pools = [_partitions(w) for w in split]
                idx = [0] * g
                while True:
                    dec = tuple(pools[i][idx[i]] for i in range(g))
                    key = _canonical_decoration(dec)
                    if key not in seen:
                        seen.add(key)
                        graphs.append(decorated_cycle(g, key))
                    pos = g - 1
                    while pos >= 0:
                        idx[pos] += 1
                        if idx[pos] < len(pools[pos]):
                            break
                        idx[pos] = 0
                        pos -= 1
                    if pos < 0:
                        break
    return graphs
