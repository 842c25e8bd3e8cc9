"""Result records shared by the fast characterizations and the oracles."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ForcedReport:
    dim: int
    forced: tuple[int, ...]  # sorted vertex ids present in every metric basis
    method: str  # "oracle" or "characterization"
    bases: tuple[tuple[int, ...], ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"dim": self.dim, "forced": list(self.forced), "method": self.method}
        if self.bases is not None:
            out["bases"] = [list(b) for b in self.bases]
        return out


@dataclass(frozen=True)
class StrongReport:
    alpha: int  # independence number of the strong resolving graph
    dim_s: int
    forced_strong: tuple[int, ...]
    boundary: tuple[int, ...]
    method: str

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "dim_s": self.dim_s,
            "forced_strong": list(self.forced_strong),
            "boundary": list(self.boundary),
        }


@dataclass(frozen=True)
class TransformResult:
    graph: "object"  # Graph; typed loosely to avoid an import cycle
    claim_preserved: bool | None  # None = could not be verified under the cap
    mapping: dict[int, int]
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        from .graph import serialize_graph
        import json

        claim = "unverified" if self.claim_preserved is None else self.claim_preserved
        return {
            "graph": json.loads(serialize_graph(self.graph)),
            "claimPreserved": claim,
            "mapping": {str(k): v for k, v in sorted(self.mapping.items())},
            **self.details,
        }
