"""Weighted plumbing forests: representation, validation and generators."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable

from . import linalg
from .errors import InvalidParameter, MalformedGraph, NotAForest, ZeroWeight
from .unionfind import DisjointSet


@dataclass(frozen=True)
class PlumbingGraph:
    """A weighted forest on vertices ``0..len(weights)-1``.

    ``edges`` keeps every pair as given (normalised to ``(small, large)``) so
    that duplicated edges survive until :func:`validate` rejects them.
    """

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        n = len(self.weights)
        if n == 0:
            raise MalformedGraph("a plumbing graph needs at least one vertex")
        norm = []
        for edge in self.edges:
            a, b = (int(x) for x in edge)
            if not (0 <= a < n and 0 <= b < n):
                raise MalformedGraph(f"edge {edge} references a missing vertex")
            norm.append((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def vertices(self) -> range:
        return range(self.size)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            adj[a].append(b)
            if a != b:
                adj[b].append(a)
        return tuple(tuple(sorted(x)) for x in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Intersection matrix: weights on the diagonal, 1 for each edge."""
        n = self.size
        m = [[0] * n for _ in range(n)]
        for v, w in enumerate(self.weights):
            m[v][v] = w
        for a, b in set(self.edges):
            if a != b:
                m[a][b] = m[b][a] = 1
        return tuple(tuple(row) for row in m)

    def bad_vertices(self) -> list[int]:
        return [v for v in self.vertices if self.weights[v] > -self.degree(v)]

    # -- serialisation -------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "vertices": [{"id": v, "weight": w} for v, w in enumerate(self.weights)],
            "edges": [[a, b] for a, b in self.edges],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PlumbingGraph":
        try:
            verts = sorted(data["vertices"], key=lambda d: d["id"])
            ids = [int(d["id"]) for d in verts]
            weights = [int(d["weight"]) for d in verts]
            edges = [tuple(e) for e in data.get("edges", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedGraph(f"bad graph document: {exc}") from exc
        if ids != list(range(len(ids))):
            raise MalformedGraph("vertex ids must be 0-based and contiguous")
        if any(len(e) != 2 for e in edges):
            raise MalformedGraph("edges must be pairs")
        return cls(tuple(weights), tuple(edges))

    @classmethod
    def from_json(cls, text: str) -> "PlumbingGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedGraph(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


@dataclass(frozen=True)
class GraphReport:
    negative_definite: bool
    bad_vertices: list[int] = field(default_factory=list)
    determinant: int = 0


def check_forest(graph: PlumbingGraph) -> None:
    seen = set()
    ds = DisjointSet(graph.vertices)
    for a, b in graph.edges:
        if a == b:
            raise NotAForest(f"self-loop at vertex {a}")
        if (a, b) in seen:
            raise NotAForest(f"repeated edge {a}-{b}")
        seen.add((a, b))
        if not ds.union(a, b):
            raise NotAForest(f"edge {a}-{b} closes a cycle")


def validate(graph: PlumbingGraph) -> GraphReport:
    """Check the forest conditions and certify definiteness exactly."""
    check_forest(graph)
    zero = [v for v, w in enumerate(graph.weights) if w == 0]
    if zero:
        raise ZeroWeight(f"vertices with zero weight: {zero}")
    m = graph.matrix
    return GraphReport(
        negative_definite=linalg.is_negative_definite(m),
        bad_vertices=graph.bad_vertices(),
        determinant=linalg.determinant(m),
    )


def brieskorn_family_graph(n: int) -> PlumbingGraph:
    """Plumbing of Σ(2, 2n+1, 4n+3).

    Vertex order: center (-1), leaf (-2), first strand vertex (-3), leaf
    (-4n-3), then the n-1 strand vertices of weight -2 moving away from the
    center.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"n must be a positive integer, got {n!r}")
    weights = [-1, -2, -3, -4 * n - 3] + [-2] * (n - 1)
    edges = [(0, 1), (0, 2), (0, 3)]
    prev = 2
    for v in range(4, 4 + n - 1):
        edges.append((prev, v))
        prev = v
    return PlumbingGraph(tuple(weights), tuple(edges))


def e8_graph() -> PlumbingGraph:
    """The negative E8 tree: arms of length 1, 2 and 4 around vertex 2."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
    return PlumbingGraph((-2,) * 8, tuple(edges))


def star_graph(center: int, arms: Iterable[Iterable[int]]) -> PlumbingGraph:
    """Star-shaped tree: ``center`` weight plus chains of weights."""
    weights = [center]
    edges = []
    for arm in arms:
        prev = 0
        for w in arm:
            weights.append(w)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    return PlumbingGraph(tuple(weights), tuple(edges))
