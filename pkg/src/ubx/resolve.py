"""Fast resolving-set decisions on unicyclic graphs.

A biactive branch-resolving landmark set fails to resolve the graph only
through one of three cycle-window obstructions, so the checks here never
look at distance vectors.  The obstruction scan drives the dimension and
the forced-vertex pipeline; brute force lives in oracle.py and is used by
the test suite to arbitrate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .decompose import (
    CanonicalLabelling,
    UnicyclicDecomposition,
    active_cycle_indices,
    canonical_labelling,
)
from .errors import PreconditionError
from .reports import ForcedReport


@dataclass(frozen=True)
class ConfigurationWitness:
    kind: str  # "A", "B" or "C"
    labelling: CanonicalLabelling
    index: int | None = None  # canonical index of the offending cycle vertex
    thread: tuple[int, ...] | None = None  # the landmark-free thread, root side first
    required_length: int | None = None  # minimum length that triggers kind C

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.labelling.k,
            "index": self.index,
            "thread": list(self.thread) if self.thread else None,
            "requiredLength": self.required_length,
        }


@dataclass(frozen=True)
class PendantCharReport:
    candidate: int
    variant: str  # "pendant" or "cycle"
    j: int  # position of the candidate's cycle root, anchor at 0
    m: int | None  # distance to the first decorated antipodal pair
    conditions: dict[str, bool]
    verdict: bool

    def to_json(self) -> dict:
        return {
            "candidate": self.candidate,
            "variant": self.variant,
            "j": self.j,
            "m": self.m,
            "conditions": dict(self.conditions),
            "verdict": self.verdict,
        }


def check_biactive_branch_resolving(dec: UnicyclicDecomposition, S: Iterable[int]) -> bool:
    """At least two cycle components hold landmarks, and at every vertex
    with two or more threads all but at most one thread is hit."""
    pts = frozenset(S)
    if len({dec.comp_of[x] for x in pts}) < 2:
        return False
    for v in range(dec.graph.n):
        ts = dec.threads[v]
        if len(ts) > 1:
            hit = sum(1 for t in ts if not pts.isdisjoint(t))
            if hit < len(ts) - 1:
                return False
    return True


def find_configuration(
    dec: UnicyclicDecomposition, S: Iterable[int]
) -> ConfigurationWitness | None:
    """First obstruction (kind A, then B, then C in ascending window order)
    that stops S from resolving, or None when S resolves the graph.

    S must be biactive and branch-resolving; anything else is a caller bug.
    """
    pts = frozenset(S)
    if not check_biactive_branch_resolving(dec, pts):
        raise PreconditionError("find_configuration needs a biactive branch-resolving set")
    lab = canonical_labelling(dec, pts)
    g, k, half = lab.g, lab.k, lab.g // 2

    if lab.a == 2 and g % 2 == 0 and k == half:
        return ConfigurationWitness(kind="A", labelling=lab)

    def free_threads(idx: int):
        for t in dec.threads[lab.order[idx % g]]:
            if pts.isdisjoint(t):
                yield t

    if k <= half - 1:
        window = sorted({0} | set(range(k, half)) | set(range((g + 1) // 2 + k + 1, g)))
        for i in window:
            for t in free_threads(i):
                return ConfigurationWitness(kind="B", labelling=lab, index=i, thread=t)

    if lab.a == 2 and g % 2 == 0 and k <= half:
        need = half - k
        for i in range(k + 1):
            for t in free_threads(i):
                if len(t) >= need:
                    return ConfigurationWitness(
                        kind="C", labelling=lab, index=i, thread=t, required_length=need
                    )
    return None


def is_resolving_set_fast(dec: UnicyclicDecomposition, S: Iterable[int]) -> bool:
    pts = frozenset(S)
    if not check_biactive_branch_resolving(dec, pts):
        return False
    return find_configuration(dec, pts) is None


def _ordered_threads(dec: UnicyclicDecomposition, v: int) -> list[tuple[int, ...]]:
    return sorted(dec.threads[v], key=lambda t: (len(t), t))


def _rstar(dec: UnicyclicDecomposition) -> list[int]:
    """Thread ends hitting all but the shortest thread at every vertex that
    carries several.  Any resolving set of the base size can be replaced by
    a completion of this one, so only these need testing."""
    out = []
    for v in range(dec.graph.n):
        ts = _ordered_threads(dec, v)
        if len(ts) > 1:
            out.extend(t[-1] for t in ts[1:])
    return out


def component_landmark(dec: UnicyclicDecomposition, i: int) -> int:
    """Best single landmark inside T_{v_i}: the end of the shortest thread
    at the root if there is one, else the root itself."""
    v = dec.cycle[i]
    ts = _ordered_threads(dec, v)
    return ts[0][-1] if ts else v


def _base_achievable(dec: UnicyclicDecomposition) -> bool:
    rstar = _rstar(dec)
    if dec.b >= 2:
        return find_configuration(dec, rstar) is None
    if dec.b == 1:
        anchor = next(iter(dec.branch_active))
        for beta in range(dec.g):
            if beta == anchor:
                continue
            if find_configuration(dec, rstar + [component_landmark(dec, beta)]) is None:
                return True
        return False
    for i in range(dec.g):
        for j in range(i + 1, dec.g):
            if find_configuration(dec, [component_landmark(dec, i), component_landmark(dec, j)]) is None:
                return True
    return False


def metric_dimension(dec: UnicyclicDecomposition) -> int:
    base = dec.L + max(2 - dec.b, 0)
    return base if _base_achievable(dec) else base + 1


def _char_frame(dec: UnicyclicDecomposition, root_pos: int) -> tuple[tuple[int, ...], int]:
    """Cycle order anchored at the branch-active vertex, directed so the
    candidate root lands in [2, g//2 - 1] when either direction manages it."""
    g = dec.g
    anchor = next(iter(dec.branch_active))
    j_fwd = (root_pos - anchor) % g
    j_bwd = (anchor - root_pos) % g
    fwd = tuple(dec.cycle[(anchor + t) % g] for t in range(g))
    bwd = tuple(dec.cycle[(anchor - t) % g] for t in range(g))
    if 2 <= j_fwd <= g // 2 - 1:
        return fwd, j_fwd
    if 2 <= j_bwd <= g // 2 - 1:
        return bwd, j_bwd
    return (fwd, j_fwd) if j_fwd <= j_bwd else (bwd, j_bwd)


def _char_conditions(
    dec: UnicyclicDecomposition, order: Sequence[int], j: int, variant: str
) -> tuple[dict[str, bool], int | None]:
    g = dec.g
    gr = dec.graph
    half = g // 2

    def threads_at(idx: int) -> tuple[tuple[int, ...], ...]:
        return dec.threads[order[idx % g]]

    conds: dict[str, bool] = {}
    conds["even-girth"] = g % 2 == 0
    conds["no-thread-at-anchor"] = not threads_at(0)
    conds["root-in-window"] = 2 <= j <= half - 1
    conds["bare-far-arcs"] = all(
        gr.degree(order[i]) == 2 for i in range(j + 1, half)
    ) and all(gr.degree(order[i % g]) == 2 for i in range(half + j + 1, g))
    maxlen = half - j - 1
    conds["near-threads-short"] = all(
        len(t) <= maxlen for i in range(1, j) for t in threads_at(i)
    )
    m: int | None = None
    for step in range(1, half + 1):
        if gr.degree(order[step % g]) >= 3 or gr.degree(order[(half + step) % g]) >= 3:
            m = step
            break
    conds["far-thread-reaches"] = (
        m is not None
        and m < j
        and any(len(t) >= m for i in range(half + m + 1, half + j + 1) for t in threads_at(i))
    )
    exact = maxlen == 0 or any(
        len(t) == maxlen for i in range(1, j) for t in threads_at(i)
    )
    if variant == "pendant":
        conds["near-exact-or-deep"] = j == half - 2 or exact
    else:
        conds["near-exact-thread"] = exact
        conds["antipodal-thread"] = bool(threads_at(half + j))
    return conds, m


def check_pendant_char(dec: UnicyclicDecomposition, v: int) -> PendantCharReport:
    """Decide whether the lone pendant v sits in every metric basis, by the
    arc-and-thread conditions alone."""
    if dec.b != 1:
        raise PreconditionError("pendant characterization applies only when b(G) = 1")
    i = dec.comp_of[v]
    comp = dec.components[i]
    if dec.graph.degree(v) != 1 or len(comp) != 2:
        raise PreconditionError(f"vertex {v} is not a lone pendant of its cycle vertex")
    order, j = _char_frame(dec, i)
    conds, m = _char_conditions(dec, order, j, "pendant")
    return PendantCharReport(
        candidate=v,
        variant="pendant",
        j=j,
        m=m,
        conditions=conds,
        verdict=all(conds.values()),
    )


def check_cycle_char(dec: UnicyclicDecomposition, v: int) -> PendantCharReport:
    """Same decision for a bare degree-2 cycle vertex."""
    if dec.b != 1:
        raise PreconditionError("cycle-vertex characterization applies only when b(G) = 1")
    i = dec.comp_of[v]
    if dec.cycle[i] != v or len(dec.components[i]) != 1:
        raise PreconditionError(f"vertex {v} is not a bare cycle vertex")
    order, j = _char_frame(dec, i)
    conds, m = _char_conditions(dec, order, j, "cycle")
    return PendantCharReport(
        candidate=v,
        variant="cycle",
        j=j,
        m=m,
        conditions=conds,
        verdict=all(conds.values()),
    )


def _forced_candidates(dec: UnicyclicDecomposition) -> list[int]:
    """Only bare cycle vertices and lone pendants can be forced."""
    out = []
    for i in range(dec.g):
        comp = dec.components[i]
        if len(comp) == 1:
            out.append(dec.cycle[i])
        elif len(comp) == 2:
            root = dec.cycle[i]
            out.append(comp[0] if comp[1] == root else comp[1])
    return out


def _pair_avoids(dec: UnicyclicDecomposition, x: int) -> bool:
    """Is there a resolving pair that leaves x out?  Only root-or-thread-end
    representatives need checking."""
    pools: list[list[int]] = []
    for i in range(dec.g):
        opts = {dec.cycle[i], component_landmark(dec, i)}
        opts.discard(x)
        pools.append(sorted(opts))
    for i in range(dec.g):
        for jj in range(i + 1, dec.g):
            for p in pools[i]:
                for q in pools[jj]:
                    if find_configuration(dec, (p, q)) is None:
                        return True
    return False


def basis_forced_fast(dec: UnicyclicDecomposition) -> ForcedReport:
    dim = metric_dimension(dec)
    base = dec.L + max(2 - dec.b, 0)

    forced: list[int] = []
    if dec.g % 2 == 0 and dec.b <= 1 and dim == base:
        candidates = _forced_candidates(dec)
        if dec.b == 1:
            for x in candidates:
                i = dec.comp_of[x]
                rep = (
                    check_cycle_char(dec, x)
                    if dec.cycle[i] == x
                    else check_pendant_char(dec, x)
                )
                if rep.verdict:
                    forced.append(x)
        else:
            forced = [x for x in candidates if not _pair_avoids(dec, x)]

    return ForcedReport(dim=dim, forced=tuple(sorted(forced)), method="characterization")
