"""Surgeries that move forced vertices around.

Each operation returns the rebuilt graph together with a claim about what
the surgery preserved.  Claims are checked against the brute-force oracle
whenever the result is small enough; past the cap they are reported as
unverified rather than silently trusted.
"""

from __future__ import annotations

from .decompose import decompose_unicyclic
from .errors import CapExceededError, NotForcedError, NotUnicyclicError, PreconditionError
from .graph import Graph, add_path, add_pendant, remove_vertex
from .oracle import basis_forced_oracle, enumerate_metric_bases_oracle, oracle_cap
from .reports import ForcedReport, TransformResult
from .resolve import basis_forced_fast, component_landmark, find_configuration


def _forced_report(graph: Graph, cap: int | None) -> ForcedReport:
    try:
        return basis_forced_fast(decompose_unicyclic(graph))
    except NotUnicyclicError:
        return basis_forced_oracle(graph, cap)


def extend_with_path(graph: Graph, m: int, cap: int | None = None) -> TransformResult:
    """Attach a path of m vertices to a vertex farthest from a forced one;
    this keeps both the dimension and the forced set."""
    if m < 1:
        raise PreconditionError("path must have at least one vertex")
    before = _forced_report(graph, cap)
    if not before.forced:
        raise NotForcedError("graph has no basis forced vertex to extend from")
    b = min(before.forced)
    dist = graph.distances()[b]
    outside = [u for u in range(graph.n) if u not in set(before.forced)]
    if not outside:
        raise PreconditionError("every vertex is forced, nowhere to attach")
    v = max(outside, key=lambda u: (dist[u], -u))

    H = add_path(graph, v, m)
    mapping = {i: i for i in range(graph.n)}
    details: dict = {
        "attachedAt": v,
        "pathLength": m,
        "dimBefore": before.dim,
        "forcedBefore": list(before.forced),
    }
    claim: bool | None = None
    if H.n <= oracle_cap(cap):
        after = basis_forced_oracle(H, cap, keep_bases=False)
        claim = after.dim == before.dim and after.forced == before.forced
        details["dimAfter"] = after.dim
        details["forcedAfter"] = list(after.forced)
    return TransformResult(graph=H, claim_preserved=claim, mapping=mapping, details=details)


def attach_pendant_forced_check(graph: Graph, v: int, cap: int | None = None) -> TransformResult:
    """Hang a pendant u on the forced vertex v and test the basis criterion:
    u stays forced iff every basis of G sees some neighbor of v exactly as
    it sees u.  The criterion verdict is cross-checked against the oracle."""
    bases = enumerate_metric_bases_oracle(graph, cap)
    forced = set(bases[0]).intersection(*map(set, bases[1:])) if len(bases) > 1 else set(bases[0])
    if v not in forced:
        raise NotForcedError(f"vertex {v} is not in every metric basis")

    H, u = add_pendant(graph, v)
    dh = H.distances()
    criterion = all(
        any(all(dh[r][w] == dh[r][u] for r in R) for w in graph.neighbors(v)) for R in bases
    )
    after = basis_forced_oracle(H, cap, keep_bases=False)
    direct = u in after.forced
    details = {
        "pendant": u,
        "criterion": criterion,
        "pendantForced": direct,
        "dimBefore": len(bases[0]),
        "dimAfter": after.dim,
    }
    return TransformResult(
        graph=H,
        claim_preserved=criterion == direct,
        mapping={i: i for i in range(graph.n)},
        details=details,
    )


def cycle_to_pendant(graph: Graph, v: int, cap: int | None = None) -> TransformResult:
    """A forced cycle vertex keeps its status delegated to a new pendant."""
    dec = decompose_unicyclic(graph)
    rep = basis_forced_fast(dec)
    if v not in rep.forced or v not in dec.cycle:
        raise NotForcedError(f"vertex {v} is not a forced cycle vertex")
    H, u = add_pendant(graph, v)
    details: dict = {"pendant": u, "dimBefore": rep.dim}
    claim: bool | None = None
    if H.n <= oracle_cap(cap):
        after = basis_forced_oracle(H, cap, keep_bases=False)
        claim = u in after.forced
        details["pendantForced"] = claim
        details["dimAfter"] = after.dim
    else:
        fast_after = basis_forced_fast(decompose_unicyclic(H))
        details["pendantForced"] = u in fast_after.forced
        details["dimAfter"] = fast_after.dim
    return TransformResult(
        graph=H, claim_preserved=claim, mapping={i: i for i in range(graph.n)}, details=details
    )


def pendant_to_cycle_check(graph: Graph, v: int, cap: int | None = None) -> TransformResult:
    """Remove the forced pendant v and decide whether its cycle vertex
    inherits the forced status.

    Near-antipodal placements never inherit; otherwise an antipodal thread
    decides it when one branching component exists, and the oracle settles
    what the shortcut rules leave open.
    """
    dec = decompose_unicyclic(graph)
    rep = basis_forced_fast(dec)
    if v not in rep.forced or graph.degree(v) != 1:
        raise NotForcedError(f"vertex {v} is not a forced pendant")
    g = dec.g
    half = g // 2
    root_pos = dec.comp_of[v]
    root = dec.cycle[root_pos]

    fast_verdict: bool | None = None
    rule = None
    if dec.b == 1:
        anchor = next(iter(dec.branch_active))
        k = min((root_pos - anchor) % g, (anchor - root_pos) % g)
        direction = 1 if (root_pos - anchor) % g == k else -1
        order = tuple(dec.cycle[(anchor + direction * t) % g] for t in range(g))
        hyp_len = half - k - 1
        hyp = hyp_len == 0 or any(
            len(t) == hyp_len for i in range(1, k) for t in dec.threads[order[i]]
        )
        if hyp:
            fast_verdict = bool(dec.threads[order[(half + k) % g]])
            rule = "antipodal-thread"
        else:
            fast_verdict = False
            rule = "bare-near-arc"
    else:
        ks: dict[int, int] = {}
        for j in range(g):
            if j == root_pos:
                continue
            if find_configuration(dec, (v, component_landmark(dec, j))) is None:
                ks[j] = min((j - root_pos) % g, (root_pos - j) % g)
        if half - 1 in ks.values():
            fast_verdict = False
            rule = "near-antipodal-basis"
        else:
            for j, k in ks.items():
                if k != half - 2:
                    continue
                direction = 1 if (root_pos - j) % g == k else -1
                interior = [dec.cycle[(j + direction * t) % g] for t in range(1, k)]
                if all(not dec.threads[w] for w in interior):
                    fast_verdict = False
                    rule = "bare-near-arc"
                    break

    H, mapping = remove_vertex(graph, v)
    target = mapping[root]
    details: dict = {"removed": v, "target": target, "rule": rule, "dimBefore": rep.dim}
    if H.n <= oracle_cap(cap):
        after = basis_forced_oracle(H, cap, keep_bases=False)
        direct = target in after.forced
        details["targetForced"] = direct
        details["dimAfter"] = after.dim
        claim: bool | None = True if fast_verdict is None else fast_verdict == direct
    elif fast_verdict is not None:
        details["targetForced"] = fast_verdict
        claim = None
    else:
        raise CapExceededError("pendant_to_cycle_check", H.n, oracle_cap(cap))
    return TransformResult(graph=H, claim_preserved=claim, mapping=mapping, details=details)
