"""Characteristic vectors of the intersection lattice.

A characteristic vector ``K`` is stored as its tuple of pairings
``(<K, v_0>, ..., <K, v_{s-1}>)``.  The Poincaré dual of vertex ``v`` is row
``v`` of the intersection matrix, so ``K + 2 PD[v]`` adds twice that row.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import BoxTooLarge, NotCharacteristic, SingularForm
from .graph import PlumbingGraph

CharVector = tuple[int, ...]


class IntersectionForm:
    """Intersection matrix of a plumbing with cached exact factorizations.

    Instances are treated as immutable once built.
    """

    def __init__(self, matrix: Sequence[Sequence[int]]):
        self.matrix: tuple[tuple[int, ...], ...] = tuple(tuple(int(x) for x in r) for r in matrix)
        self.size = len(self.matrix)
        if any(len(r) != self.size for r in self.matrix):
            raise ValueError("intersection matrix must be square")
        if any(self.matrix[i][j] != self.matrix[j][i] for i in range(self.size) for j in range(i)):
            raise ValueError("intersection matrix must be symmetric")
        self.weights: tuple[int, ...] = tuple(self.matrix[i][i] for i in range(self.size))
        # nonzero entries of each row, used for fast moves
        self.sparse_rows: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple((j, x) for j, x in enumerate(row) if x) for row in self.matrix
        )

    @classmethod
    def from_graph(cls, graph: PlumbingGraph) -> "IntersectionForm":
        return cls(graph.matrix)

    @cached_property
    def det(self) -> int:
        return linalg.determinant(self.matrix)

    @cached_property
    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        if self.det == 0:
            raise SingularForm("intersection form is degenerate")
        cols = []
        for i in range(self.size):
            e = [0] * self.size
            e[i] = 1
            cols.append(linalg.solve(self.matrix, e))
        # symmetric, so columns are rows
        return tuple(tuple(c) for c in cols)

    @cached_property
    def _smith(self):
        doubled = [[2 * x for x in row] for row in self.matrix]
        return linalg.smith_form(doubled)

    def is_characteristic(self, k: Sequence[int]) -> bool:
        return len(k) == self.size and all((a - w) % 2 == 0 for a, w in zip(k, self.weights))

    def check_characteristic(self, k: Sequence[int]) -> CharVector:
        k = tuple(int(x) for x in k)
        if not self.is_characteristic(k):
            raise NotCharacteristic(f"{k} is not characteristic for weights {self.weights}")
        return k

    def box(self) -> Iterator[CharVector]:
        """Vectors with ``m(v)+2 <= <K,v> <= -m(v)`` in lexicographic order."""
        return itertools.product(*(range(w + 2, -w + 1, 2) for w in self.weights))

    def box_size(self) -> int:
        size = 1
        for w in self.weights:
            size *= max(0, -w)
        return size


def solve_pairing(form: IntersectionForm, k: Sequence[int]) -> list[Fraction]:
    """Return ``x = M^{-1} K^T`` exactly."""
    return [sum((a * b for a, b in zip(row, k)), Fraction(0)) for row in form.inverse]


def square(form: IntersectionForm, k: Sequence[int]) -> Fraction:
    """``K^2 = K M^{-1} K^T`` as an exact rational."""
    k = form.check_characteristic(k)
    return sum((a * b for a, b in zip(k, solve_pairing(form, k))), Fraction(0))


def level(form: IntersectionForm, k: Sequence[int], upower: int = 0) -> Fraction:
    """Level ``(K^2 + |G|)/4 - 2m`` of ``U^m ⊗ K``; preserved by moves."""
    if upower < 0:
        raise ValueError("U-power must be nonnegative")
    return (square(form, k) + form.size) / 4 - 2 * upower


def move_target(form: IntersectionForm, k: Sequence[int], v: int) -> tuple[CharVector, int]:
    """Return ``(K + 2 PD[v], n)`` with ``2n = <K,v> + v.v``.

    ``U^{a+n} ⊗ (K + 2PD[v])`` is equivalent to ``U^a ⊗ K`` whenever both
    powers are nonnegative.
    """
    k = list(k)
    twice_n = k[v] + form.weights[v]
    if twice_n % 2:
        raise NotCharacteristic(f"pairing at vertex {v} has the wrong parity")
    for j, x in form.sparse_rows[v]:
        k[j] += 2 * x
    return tuple(k), twice_n // 2


def move_back(form: IntersectionForm, k: Sequence[int], v: int) -> tuple[CharVector, int]:
    """Inverse move: ``(K - 2 PD[v], n)`` where ``U^a ⊗ K ~ U^{a-n} ⊗ (K - 2PD[v])``."""
    k = list(k)
    for j, x in form.sparse_rows[v]:
        k[j] -= 2 * x
    return tuple(k), (k[v] + form.weights[v]) // 2


@dataclass(frozen=True)
class SpincClass:
    representative: CharVector
    index: int


def spinc_count(form: IntersectionForm) -> int:
    if form.det == 0:
        raise SingularForm("intersection form is degenerate")
    return abs(form.det)


def spinc_index(form: IntersectionForm, k: Sequence[int]) -> int:
    """Index in ``0..|det M|-1`` of the coset ``K + 2 M Z^s``.

    With ``U (2M) V = D`` in Smith form, ``K - K'`` lies in ``2 M Z^s`` iff
    every entry of ``U (K - K')`` is divisible by the matching diagonal entry.
    The base point is the characteristic vector ``(m(v))_v``.
    """
    k = form.check_characteristic(k)
    diag, u, _ = form._smith
    if 0 in diag:
        raise SingularForm("intersection form is degenerate")
    diff = [a - w for a, w in zip(k, form.weights)]
    y = linalg.mat_vec(u, diff)
    index = 0
    radix = 1
    for yi, di in zip(y, diag):
        half = di // 2
        if half > 1:
            index += ((yi % di) // 2) * radix
            radix *= half
    return index


def same_spinc(form: IntersectionForm, k1: Sequence[int], k2: Sequence[int]) -> bool:
    return spinc_index(form, k1) == spinc_index(form, k2)


def spinc_classify(
    form: IntersectionForm,
    vectors: Iterable[Sequence[int]],
    box_budget: int = 10**6,
) -> list[tuple[SpincClass, list[CharVector]]]:
    """Group characteristic vectors by Spin^c structure, sorted by index.

    Each class is represented by its lexicographically least member of the
    box ``m(v)+2 <= <K,v> <= -m(v)``; when the box is too large to scan or
    misses the class, the least input vector stands in.
    """
    groups: dict[int, list[CharVector]] = {}
    for k in vectors:
        k = form.check_characteristic(k)
        groups.setdefault(spinc_index(form, k), []).append(k)
    reps: dict[int, CharVector] = {}
    if form.box_size() <= box_budget:
        wanted = set(groups)
        for k in form.box():
            if not wanted:
                break
            idx = spinc_index(form, k)
            if idx in wanted:
                reps[idx] = k
                wanted.discard(idx)
    out = []
    for idx in sorted(groups):
        members = sorted(groups[idx])
        out.append((SpincClass(reps.get(idx, members[0]), idx), members))
    return out


def class_representatives(form: IntersectionForm, box_budget: int = 10**8) -> dict[int, CharVector]:
    """Lexicographically least box vector of every Spin^c class."""
    if form.box_size() > box_budget:
        raise BoxTooLarge(f"box has {form.box_size()} vectors, budget {box_budget}")
    reps: dict[int, CharVector] = {}
    total = spinc_count(form)
    for k in form.box():
        idx = spinc_index(form, k)
        reps.setdefault(idx, k)
        if len(reps) == total:
            break
    return reps
