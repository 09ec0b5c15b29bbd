"""HF+ of negative-definite plumbed 3-manifolds with at most one bad vertex."""

from .basic import Outcome, PushDownOutcome, enumerate_basic_vectors, push_down
from .graph import GraphReport, PlumbingGraph, brieskorn_family_graph, e8_graph, validate
from .lattice import (
    IntersectionForm,
    SpincClass,
    level,
    move_target,
    spinc_classify,
    spinc_count,
    square,
)
from .module import (
    CyclicSummand,
    HFPlusModule,
    assemble,
    family_expected_module,
    rank_at_degree,
    reduced_rank,
)
from .pipeline import compute
from .root import (
    GradedRoot,
    MergeEvent,
    build_graded_root,
    equivalent_at_level,
    minimal_relationship,
)

__all__ = [
    "CyclicSummand",
    "GradedRoot",
    "GraphReport",
    "HFPlusModule",
    "IntersectionForm",
    "MergeEvent",
    "Outcome",
    "PlumbingGraph",
    "PushDownOutcome",
    "SpincClass",
    "assemble",
    "brieskorn_family_graph",
    "build_graded_root",
    "compute",
    "e8_graph",
    "enumerate_basic_vectors",
    "equivalent_at_level",
    "family_expected_module",
    "level",
    "minimal_relationship",
    "move_target",
    "push_down",
    "rank_at_degree",
    "reduced_rank",
    "spinc_classify",
    "spinc_count",
    "square",
    "validate",
]
