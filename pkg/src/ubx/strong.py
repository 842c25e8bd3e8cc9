"""Strong resolving sets via the mutually-maximally-distant graph.

A set strongly resolves iff it covers every edge of that graph, so the
strong dimension is its vertex cover number and the vertices no minimum
cover can skip are exactly the complement of the union of maximum
independent sets.  For unicyclic graphs in star form the edge set follows
a short recipe (big clique on leaves plus an antipodal pattern on the
cycle), and the forced set falls out of how leaves sit against runs of
bare cycle vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decompose import UnicyclicDecomposition, decompose_unicyclic
from .errors import NotReducedError, WrongParityError
from .graph import Graph
from .mis import DEFAULT_MIS_CAP, MISResult, max_independent_set
from .reports import StrongReport


@dataclass(frozen=True)
class StrongResolvingGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def boundary(self) -> tuple[int, ...]:
        seen = set()
        for u, v in self.edges:
            seen.add(u)
            seen.add(v)
        return tuple(sorted(seen))

    def isolated(self) -> tuple[int, ...]:
        seen = set(self.boundary())
        return tuple(v for v in range(self.n) if v not in seen)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "boundary": list(self.boundary()),
            "isolated": list(self.isolated()),
        }


def is_maximally_distant(graph: Graph, u: int, v: int) -> bool:
    """No neighbor of u is farther from v than u is."""
    dist = graph.distances()
    du = dist[v][u]
    return all(dist[v][w] <= du for w in graph.neighbors(u))


def build_srg_definition(graph: Graph) -> StrongResolvingGraph:
    """Edge per mutually maximally distant pair, straight from distances."""
    dist = graph.distances()
    edges = []
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            duv = dist[u][v]
            if all(dist[v][w] <= duv for w in graph.neighbors(u)) and all(
                dist[u][w] <= duv for w in graph.neighbors(v)
            ):
                edges.append((u, v))
    return StrongResolvingGraph(n=graph.n, edges=tuple(edges))


def reduce_to_star_form(graph: Graph) -> tuple[Graph, dict[int, int]]:
    """Collapse every hanging tree to one pendant per leaf.

    Returns the reduced graph (cycle first, then pendants in cycle order)
    and a map from new ids to the original ids they stand for.
    """
    dec = decompose_unicyclic(graph)
    g = dec.g
    mapping: dict[int, int] = {}
    for i, v in enumerate(dec.cycle):
        mapping[i] = v
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for i in range(g):
        root = dec.cycle[i]
        for leaf in dec.components[i]:
            if leaf != root and graph.degree(leaf) == 1:
                mapping[nxt] = leaf
                edges.append((i, nxt))
                nxt += 1
    return Graph(nxt, edges), mapping


def _pendants_of(dec: UnicyclicDecomposition, i: int) -> list[int]:
    root = dec.cycle[i]
    return [v for v in dec.components[i] if v != root]


def build_srg_unicyclic(dec: UnicyclicDecomposition) -> StrongResolvingGraph:
    """The recipe form; requires star form so threads don't hide leaves."""
    if not dec.is_reduced():
        raise NotReducedError("recipe needs the star-form graph; reduce first")
    g = dec.g
    graph = dec.graph
    leaves = [_pendants_of(dec, i) for i in range(g)]
    all_leaves = sorted(x for ls in leaves for x in ls)

    edges = set()
    for a in range(len(all_leaves)):
        for b in range(a + 1, len(all_leaves)):
            edges.add((all_leaves[a], all_leaves[b]))

    if g % 2 == 0:
        half = g // 2
        for i in range(half):
            x, y = dec.cycle[i], dec.cycle[i + half]
            bare_x, bare_y = graph.degree(x) == 2, graph.degree(y) == 2
            if bare_x and bare_y:
                edges.add((min(x, y), max(x, y)))
            elif bare_x:
                edges.update((min(x, p), max(x, p)) for p in leaves[i + half])
            elif bare_y:
                edges.update((min(y, p), max(y, p)) for p in leaves[i])
    else:
        step = (g - 1) // 2
        for i in range(g):
            j = (i + step) % g
            x, y = dec.cycle[i], dec.cycle[j]
            bare_x, bare_y = graph.degree(x) == 2, graph.degree(y) == 2
            if bare_x and bare_y:
                edges.add((min(x, y), max(x, y)))
            elif bare_x:
                edges.update((min(x, p), max(x, p)) for p in leaves[j])
            elif bare_y:
                edges.update((min(y, p), max(y, p)) for p in leaves[i])

    return StrongResolvingGraph(n=graph.n, edges=tuple(sorted(edges)))


def strong_metric_dimension(graph: Graph, mis_cap: int = DEFAULT_MIS_CAP) -> int:
    srg = build_srg_definition(graph)
    res = max_independent_set(srg.n, srg.edges, cap=mis_cap)
    return graph.n - res.alpha


def strong_basis_forced_oracle(graph: Graph, mis_cap: int = DEFAULT_MIS_CAP) -> tuple[int, ...]:
    """Vertices in every minimum strong resolving set: the complement of
    the union of maximum independent sets of the distance graph."""
    srg = build_srg_definition(graph)
    res = max_independent_set(srg.n, srg.edges, cap=mis_cap)
    return tuple(sorted(res.vc))


def strong_report(graph: Graph, mis_cap: int = DEFAULT_MIS_CAP, method: str = "oracle") -> StrongReport:
    srg = build_srg_definition(graph)
    res = max_independent_set(srg.n, srg.edges, cap=mis_cap)
    if method == "characterization":
        dec = decompose_unicyclic(graph)
        forced = (
            strong_basis_forced_even(graph) if dec.g % 2 == 0 else strong_basis_forced_odd(graph)
        )
    else:
        forced = tuple(sorted(res.vc))
    return StrongReport(
        alpha=res.alpha,
        dim_s=graph.n - res.alpha,
        forced_strong=forced,
        boundary=srg.boundary(),
        method=method,
    )


@dataclass(frozen=True)
class OddCycleAnalysis:
    """Runs of bare cycle vertices, as paths of the distance graph.

    Sequences hold vertex ids ordered along each path, each starting from
    its smaller-position end.  untouched lists decorated cycle vertices
    whose leaves reach no end of an odd-length run.
    """

    sequences: tuple[tuple[int, ...], ...]
    untouched: tuple[int, ...]
    degenerate: bool  # fewer than two decorated cycle vertices


def _bare_positions(dec: UnicyclicDecomposition) -> list[int]:
    return [i for i in range(dec.g) if dec.graph.degree(dec.cycle[i]) == 2]


def maximal_sequences(dec: UnicyclicDecomposition) -> OddCycleAnalysis:
    g = dec.g
    if g % 2 == 0:
        raise WrongParityError("bare-run analysis applies to odd cycles")
    if not dec.is_reduced():
        raise NotReducedError("bare-run analysis needs the star-form graph")
    step = (g - 1) // 2
    bare = set(_bare_positions(dec))
    decorated = [i for i in range(g) if i not in bare]
    degenerate = len(decorated) <= 1

    nbrs = {
        p: [q for q in ((p + step) % g, (p - step) % g) if q in bare] for p in bare
    }
    sequences: list[tuple[int, ...]] = []
    seen: set[int] = set()
    if decorated:
        endpoints = sorted(p for p in bare if len(nbrs[p]) <= 1)
        for start in endpoints:
            if start in seen:
                continue
            run = [start]
            seen.add(start)
            while True:
                ext = [q for q in nbrs[run[-1]] if q not in seen]
                if not ext:
                    break
                run.append(ext[0])
                seen.add(ext[0])
            if len(run) > 1 and run[0] > run[-1]:
                run.reverse()
            sequences.append(tuple(dec.cycle[p] for p in run))
        sequences.sort(key=lambda q: dec.cycle.index(q[0]))

    pos_of = {dec.cycle[i]: i for i in range(g)}
    seq_len_of: dict[int, int] = {}
    for q in sequences:
        for v in q:
            seq_len_of[pos_of[v]] = len(q)

    untouched = []
    for w in decorated:
        hits_odd = any(
            ((w + d) % g) in bare and seq_len_of[(w + d) % g] % 2 == 1
            for d in (step, -step)
        )
        if not hits_odd:
            untouched.append(dec.cycle[w])
    return OddCycleAnalysis(
        sequences=tuple(sequences),
        untouched=tuple(sorted(untouched)),
        degenerate=degenerate,
    )


def _reduce_and_pull(graph: Graph, inner) -> tuple[int, ...]:
    reduced, mapping = reduce_to_star_form(graph)
    out = inner(decompose_unicyclic(reduced))
    return tuple(sorted(mapping[v] for v in out))


def strong_basis_forced_even(graph: Graph) -> tuple[int, ...]:
    """Leaves antipodal to bare cycle vertices, provided some antipodal
    pair is decorated on both sides; otherwise nothing is forced."""
    dec = decompose_unicyclic(graph)
    if dec.g % 2 != 0:
        raise WrongParityError("even-cycle rule on an odd cycle")
    if not dec.is_reduced():
        return _reduce_and_pull(graph, _even_forced_reduced)
    return _even_forced_reduced(dec)


def _even_forced_reduced(dec: UnicyclicDecomposition) -> tuple[int, ...]:
    g = dec.g
    half = g // 2
    deg = dec.graph.degree
    both_decorated = any(
        deg(dec.cycle[i]) > 2 and deg(dec.cycle[i + half]) > 2 for i in range(half)
    )
    if not both_decorated:
        return ()
    forced: list[int] = []
    for i in range(g):
        anti = (i + half) % g
        if deg(dec.cycle[i]) == 2 and deg(dec.cycle[anti]) > 2:
            forced.extend(_pendants_of(dec, anti))
    return tuple(sorted(set(forced)))


def strong_basis_forced_odd(graph: Graph) -> tuple[int, ...]:
    dec = decompose_unicyclic(graph)
    if dec.g % 2 != 1:
        raise WrongParityError("odd-cycle rule on an even cycle")
    if not dec.is_reduced():
        return _reduce_and_pull(graph, _odd_forced_reduced)
    return _odd_forced_reduced(dec)


def _odd_forced_reduced(dec: UnicyclicDecomposition) -> tuple[int, ...]:
    g = dec.g
    step = (g - 1) // 2
    analysis = maximal_sequences(dec)
    if analysis.degenerate:
        return ()

    bare = set(_bare_positions(dec))
    pos_of = {dec.cycle[i]: i for i in range(g)}
    seq_of: dict[int, tuple[int, ...]] = {}
    for q in analysis.sequences:
        for v in q:
            seq_of[pos_of[v]] = q

    def adjacent_runs(w: int) -> list[tuple[int, ...]]:
        out = []
        for d in (step, -step):
            p = (w + d) % g
            if p in bare:
                out.append(seq_of[p])
        return out

    decorated = [i for i in range(g) if i not in bare]
    untouched = analysis.untouched
    forced: set[int] = set()

    def alt_class(q: tuple[int, ...], start_parity: int) -> tuple[int, ...]:
        return q[start_parity::2]

    if len(untouched) >= 2 or (
        len(untouched) == 1 and not adjacent_runs(pos_of[untouched[0]])
    ):
        for q in analysis.sequences:
            if len(q) % 2 == 1:
                forced.update(alt_class(q, 1))
        for w in decorated:
            if any(len(q) % 2 == 1 for q in adjacent_runs(w)):
                forced.update(_pendants_of(dec, w))
    elif len(untouched) == 1:
        for q in analysis.sequences:
            if len(q) % 2 == 1:
                forced.update(alt_class(q, 1))
        for w in decorated:
            if any(len(q) % 2 == 1 for q in adjacent_runs(w)):
                forced.update(_pendants_of(dec, w))
        u_pos = pos_of[untouched[0]]
        for d in (step, -step):
            p = (u_pos + d) % g
            if p in bare:
                q = seq_of[p]
                idx = q.index(dec.cycle[p])
                forced.update(alt_class(q, idx % 2))
    else:
        crossing: set[int] = set()  # decorated positions bridging two distinct odd runs
        for w in decorated:
            runs = adjacent_runs(w)
            if (
                len(runs) == 2
                and runs[0] is not runs[1]
                and len(runs[0]) % 2 == 1
                and len(runs[1]) % 2 == 1
            ):
                crossing.add(w)
                forced.update(_pendants_of(dec, w))
        for q in analysis.sequences:
            if len(q) % 2 == 0 or len(q) < 3:
                continue
            ends_covered = True
            for e in (q[0], q[-1]):
                e_pos = pos_of[e]
                sources = [
                    (e_pos + d) % g for d in (step, -step) if ((e_pos + d) % g) not in bare
                ]
                if any(w not in crossing for w in sources):
                    ends_covered = False
                    break
            if ends_covered:
                forced.update(alt_class(q, 1))

    return tuple(sorted(forced))
