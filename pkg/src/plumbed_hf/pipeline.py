"""End-to-end computation of HF+(-Y(G)) for every Spin^c structure."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .basic import DEFAULT_BOX_BUDGET, OrderPolicy, enumerate_basic_vectors
from .errors import NotNegativeDefinite, TooManyBadVertices
from .graph import GraphReport, PlumbingGraph, validate
from .lattice import CharVector, IntersectionForm, SpincClass, spinc_classify, spinc_count
from .module import HFPlusModule, assemble
from .root import DEFAULT_STATE_BUDGET, GradedRoot, build_graded_root

THREADS_ENV = "PLUMBED_HF_THREADS"


@dataclass
class SpincResult:
    spinc: SpincClass
    basics: list[CharVector]
    root: GradedRoot
    module: HFPlusModule


@dataclass
class Computation:
    graph: PlumbingGraph
    report: GraphReport
    form: IntersectionForm
    basics: list[CharVector]
    spinc: list[SpincResult] = field(default_factory=list)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def compute(
    graph: PlumbingGraph,
    box_budget: int = DEFAULT_BOX_BUDGET,
    floor_depth: Optional[int] = None,
    state_budget: int = DEFAULT_STATE_BUDGET,
    workers: Optional[int] = None,
    order_policy: OrderPolicy = "first",
) -> Computation:
    report = validate(graph)
    if not report.negative_definite:
        raise NotNegativeDefinite("intersection form is not negative-definite")
    if len(report.bad_vertices) > 1:
        raise TooManyBadVertices(f"bad vertices {report.bad_vertices}; at most one is allowed")
    form = IntersectionForm.from_graph(graph)
    basics = enumerate_basic_vectors(form, box_budget=box_budget, order_policy=order_policy)
    groups = spinc_classify(form, basics, box_budget=min(box_budget, 10**6))
    # every Spin^c structure carries a tower, hence at least one basic vector
    assert len(groups) == spinc_count(form), "some Spin^c structure has no basic vector"

    def one(item):
        cls, members = item
        root = build_graded_root(form, members, cls, floor_depth, state_budget)
        return SpincResult(cls, members, root, assemble(root))

    n = workers or _workers()
    if n > 1 and len(groups) > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(one, groups))
    else:
        results = [one(g) for g in groups]
    return Computation(graph, report, form, basics, results)
