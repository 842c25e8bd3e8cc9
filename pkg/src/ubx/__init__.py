"""Metric dimension, basis forced vertices and strong resolving structure
of unicyclic graphs, with brute-force oracles to keep the fast paths honest."""

from .decompose import CanonicalLabelling, UnicyclicDecomposition, decompose_unicyclic
from .errors import (
    BoundsInfeasibleError,
    CapExceededError,
    DisconnectedError,
    DuplicateEdgeError,
    InputError,
    NoActiveVertexError,
    NotForcedError,
    NotReducedError,
    NotUnicyclicError,
    ParseError,
    PreconditionError,
    SelfLoopError,
    UbxError,
    WrongParityError,
)
from .generators import (
    Fixture,
    GenSpec,
    exhaustive_corpus,
    fixtures,
    forced_instances,
    gen_gn,
    gen_gtq,
    gen_random_reduced,
    gen_random_unicyclic,
    random_corpus,
)
from .graph import Graph, export_dot, parse_graph, serialize_graph
from .oracle import (
    basis_forced_oracle,
    enumerate_metric_bases_oracle,
    is_resolving_set_oracle,
    is_strong_resolving_set_oracle,
    metric_dimension_oracle,
    strong_metric_dimension_oracle,
)
from .reports import ForcedReport, StrongReport, TransformResult
from .resolve import (
    basis_forced_fast,
    check_cycle_char,
    check_pendant_char,
    find_configuration,
    is_resolving_set_fast,
    metric_dimension,
)
from .strong import (
    StrongResolvingGraph,
    build_srg_definition,
    build_srg_unicyclic,
    maximal_sequences,
    reduce_to_star_form,
    strong_basis_forced_even,
    strong_basis_forced_odd,
    strong_basis_forced_oracle,
    strong_metric_dimension,
    strong_report,
)
from .transforms import (
    attach_pendant_forced_check,
    cycle_to_pendant,
    extend_with_path,
    pendant_to_cycle_check,
)
from .verify import VerifyConfig, VerifyOutcome, run_verify

__version__ = "0.1.0"

__all__ = [
    "BoundsInfeasibleError",
    "CanonicalLabelling",
    "CapExceededError",
    "DisconnectedError",
    "DuplicateEdgeError",
    "Fixture",
    "ForcedReport",
    "GenSpec",
    "Graph",
    "InputError",
    "NoActiveVertexError",
    "NotForcedError",
    "NotReducedError",
    "NotUnicyclicError",
    "ParseError",
    "PreconditionError",
    "SelfLoopError",
    "StrongReport",
    "StrongResolvingGraph",
    "TransformResult",
    "UbxError",
    "UnicyclicDecomposition",
    "VerifyConfig",
    "VerifyOutcome",
    "WrongParityError",
    "attach_pendant_forced_check",
    "basis_forced_fast",
    "basis_forced_oracle",
    "build_srg_definition",
    "build_srg_unicyclic",
    "check_cycle_char",
    "check_pendant_char",
    "cycle_to_pendant",
    "decompose_unicyclic",
    "enumerate_metric_bases_oracle",
    "export_dot",
    "extend_with_path",
    "find_configuration",
    "exhaustive_corpus",
    "fixtures",
    "forced_instances",
    "gen_gn",
    "gen_gtq",
    "gen_random_reduced",
    "gen_random_unicyclic",
    "random_corpus",
    "is_resolving_set_fast",
    "is_resolving_set_oracle",
    "is_strong_resolving_set_oracle",
    "maximal_sequences",
    "metric_dimension",
    "metric_dimension_oracle",
    "parse_graph",
    "pendant_to_cycle_check",
    "reduce_to_star_form",
    "run_verify",
    "serialize_graph",
    "strong_basis_forced_even",
    "strong_basis_forced_odd",
    "strong_basis_forced_oracle",
    "strong_metric_dimension",
    "strong_metric_dimension_oracle",
    "strong_report",
]
