"""Randomized cross-validation harness.

Every check pits a structural fast path against the matching brute-force
oracle on freshly generated instances.  A failure carries the serialized
graph so the instance can be replayed through the CLI.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .decompose import decompose_unicyclic
from .generators import GenSpec, gen_random_unicyclic
from .graph import Graph, serialize_graph
from .oracle import (
    basis_forced_oracle,
    is_resolving_set_oracle,
    metric_dimension_oracle,
    oracle_cap,
    strong_metric_dimension_oracle,
)
from .resolve import basis_forced_fast, is_resolving_set_fast, metric_dimension
from .strong import (
    build_srg_definition,
    build_srg_unicyclic,
    reduce_to_star_form,
    strong_basis_forced_even,
    strong_basis_forced_odd,
    strong_basis_forced_oracle,
    strong_metric_dimension,
)
from .transforms import attach_pendant_forced_check, extend_with_path

ALL_CHECKS = ("resolving", "dim", "forced", "srg", "strong-forced", "strong-dim", "transforms")


@dataclass(frozen=True)
class VerifyConfig:
    count: int = 100
    max_n: int = 14
    girths: tuple[int, ...] = (3, 4, 5, 6, 7, 8, 9)
    seed: int = 0
    jobs: int = 1
    checks: tuple[str, ...] = ALL_CHECKS
    subsets: int = 60  # random S per instance for the resolving check
    cap: int | None = None


@dataclass(frozen=True)
class Failure:
    check: str
    graph_json: str
    detail: str


@dataclass
class VerifyOutcome:
    ran: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerifyOutcome") -> None:
        for k, v in other.ran.items():
            self.ran[k] = self.ran.get(k, 0) + v
        self.failures.extend(other.failures)


def _check_graph(graph: Graph, config: VerifyConfig, index: int) -> VerifyOutcome:
    out = VerifyOutcome()
    cap = oracle_cap(config.cap)
    dec = decompose_unicyclic(graph)
    gj = serialize_graph(graph)
    rng = random.Random(config.seed * 7_777_777 + index)

    def note(check: str) -> None:
        out.ran[check] = out.ran.get(check, 0) + 1

    def fail(check: str, detail: str) -> None:
        out.failures.append(Failure(check, gj, detail))

    if "resolving" in config.checks:
        note("resolving")
        for _ in range(config.subsets):
            S = rng.sample(range(graph.n), rng.randint(0, graph.n))
            fast = is_resolving_set_fast(dec, S)
            want = is_resolving_set_oracle(graph, S)
            if fast != want:
                fail("resolving", f"S={sorted(S)} fast={fast} oracle={want}")
                break

    if "dim" in config.checks and graph.n <= cap:
        note("dim")
        got, want = metric_dimension(dec), metric_dimension_oracle(graph, cap)
        if got != want:
            fail("dim", f"fast={got} oracle={want}")

    forced_fast = basis_forced_fast(dec)
    if "forced" in config.checks and graph.n <= cap:
        note("forced")
        want_rep = basis_forced_oracle(graph, cap, keep_bases=False)
        if forced_fast.forced != want_rep.forced:
            fail("forced", f"fast={forced_fast.forced} oracle={want_rep.forced}")

    if "srg" in config.checks:
        note("srg")
        red, mapping = reduce_to_star_form(graph)
        srg_red = build_srg_unicyclic(decompose_unicyclic(red))
        pulled = {tuple(sorted((mapping[a], mapping[b]))) for a, b in srg_red.edges}
        direct = {tuple(sorted(e)) for e in build_srg_definition(graph).edges}
        if pulled != direct:
            fail("srg", f"recipe-pullback != definition ({len(pulled)} vs {len(direct)} edges)")

    if "strong-forced" in config.checks:
        note("strong-forced")
        char = (
            strong_basis_forced_even(graph)
            if dec.g % 2 == 0
            else strong_basis_forced_odd(graph)
        )
        want = strong_basis_forced_oracle(graph)
        if tuple(char) != tuple(want):
            fail("strong-forced", f"char={char} oracle={want}")

    if "strong-dim" in config.checks and graph.n <= cap:
        note("strong-dim")
        got, want = strong_metric_dimension(graph), strong_metric_dimension_oracle(graph, cap)
        if got != want:
            fail("strong-dim", f"fast={got} oracle={want}")

    if "transforms" in config.checks and forced_fast.forced and graph.n + 2 <= cap:
        note("transforms")
        ext = extend_with_path(graph, 1 + index % 2, cap)
        if ext.claim_preserved is False:
            fail("transforms", f"extend_with_path broke: {ext.details}")
        for v in forced_fast.forced:
            got = attach_pendant_forced_check(graph, v, cap)
            if got.claim_preserved is False:
                fail("transforms", f"pendant criterion vs oracle at v={v}: {got.details}")

    return out


def _worker(args: tuple[VerifyConfig, int]) -> VerifyOutcome:
    config, index = args
    spec = GenSpec(
        g=config.girths[index % len(config.girths)],
        seed=config.seed * 1_000_003 + index,
        max_n=config.max_n,
        branch_prob=0.25,
    )
    return _check_graph(gen_random_unicyclic(spec), config, index)


def run_verify(config: VerifyConfig) -> VerifyOutcome:
    total = VerifyOutcome()
    jobs = [(config, i) for i in range(config.count)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for outcome in pool.map(_worker, jobs, chunksize=8):
                total.merge(outcome)
    else:
        for job in jobs:
            total.merge(_worker(job))
    return total
