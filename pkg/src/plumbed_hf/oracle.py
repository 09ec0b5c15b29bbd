"""Brute-force reference computations for small graphs.

Everything here deliberately avoids the main code paths: squares come from
a cofactor adjugate instead of a linear solve, and equivalence classes come
from labelling every characteristic vector of a coordinate box instead of a
goal-directed search.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import BudgetExceeded, InvalidParameter, Unstable
from .lattice import CharVector, IntersectionForm

DEFAULT_ORACLE_BUDGET = 2 * 10**6


def laplace_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by cofactor expansion along rows, memoised on columns."""
    n = len(matrix)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> int:
        if row == n:
            return 1
        total = 0
        for pos, c in enumerate(sorted(cols)):
            entry = matrix[row][c]
            if entry:
                term = entry * minor(row + 1, cols - {c})
                total += -term if pos % 2 else term
        return total

    return minor(0, frozenset(range(n)))


def adjugate(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(matrix)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[matrix[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            adj[j][i] = (-1) ** (i + j) * laplace_det(sub)
    return adj


def brute_force_squares(form: IntersectionForm, vectors: Iterable[Sequence[int]]) -> dict[CharVector, Fraction]:
    """``K^2 = K adj(M) K^T / det M`` for each vector."""
    adj = adjugate(form.matrix)
    det = laplace_det(form.matrix)
    out = {}
    for k in vectors:
        k = tuple(k)
        num = sum(k[i] * adj[i][j] * k[j] for i in range(len(k)) for j in range(len(k)))
        out[k] = Fraction(num, det)
    return out


@dataclass
class OracleClasses:
    level: Fraction
    labels: dict[CharVector, int]
    powers: dict[CharVector, int]

    def same(self, k1: Sequence[int], k2: Sequence[int]) -> bool:
        return self.labels[tuple(k1)] == self.labels[tuple(k2)]

    def classes(self) -> list[list[CharVector]]:
        out: dict[int, list[CharVector]] = {}
        for k, lab in self.labels.items():
            out.setdefault(lab, []).append(k)
        return sorted(sorted(c) for c in out.values())


def _coordinate_limits(form: IntersectionForm, lvl: Fraction, bound: int) -> list[int]:
    # |<K,v>|^2 <= (-K^2)(-v.v) and -K^2 <= |G| - 4 lvl on the level set
    slack = form.size - 4 * lvl
    if slack < 0:
        return []
    return [min(bound, math.isqrt(math.floor(slack * -w))) for w in form.weights]


def _label_box(form: IntersectionForm, lvl: Fraction, limits: list[int], budget: int) -> OracleClasses:
    s = form.size
    axes = []
    for lim, w in zip(limits, form.weights):
        lo = -lim if (lim + w) % 2 == 0 else -lim + 1
        axes.append(np.arange(lo, lim + 1, 2, dtype=np.int64))
    shape = tuple(len(a) for a in axes)
    count = math.prod(shape)
    if count > budget:
        raise BudgetExceeded(f"oracle box holds {count} vectors, budget {budget}")
    if count == 0:
        return OracleClasses(lvl, {}, {})
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, s)

    adj = np.array(adjugate(form.matrix), dtype=object)
    det = laplace_det(form.matrix)
    # exact integer quadratic form; object dtype keeps big values safe
    quad = np.einsum("ni,ij,nj->n", grid.astype(object), adj, grid.astype(object))
    # K^2 = quad/det must equal 4 lvl - |G| + 8a with a a nonnegative integer
    p, q = lvl.numerator, lvl.denominator
    excess = quad * q - (4 * p - s * q) * det
    denom = 8 * q * det
    if denom < 0:
        excess, denom = -excess, -denom
    ok = np.array([(x % denom == 0) and x >= 0 for x in excess], dtype=bool)
    power = np.array([x // denom for x in excess], dtype=object)

    index = -np.ones(count, dtype=np.int64)
    present = np.flatnonzero(ok)
    index[present] = np.arange(len(present))
    lows = np.array([a[0] for a in axes], dtype=np.int64)
    dims = np.array(shape, dtype=np.int64)
    pos = (grid - lows) // 2
    rows, cols = [], []
    for v in range(s):
        step = np.array(form.matrix[v], dtype=np.int64)  # K + 2 PD[v] moves grid index by M[v]
        target = pos[present] + step
        inside = np.all((target >= 0) & (target < dims), axis=1)
        flat = np.ravel_multi_index(target[inside].T, shape) if inside.any() else np.array([], dtype=np.int64)
        dest = index[flat]
        keep = dest >= 0
        rows.append(index[present[inside]][keep])
        cols.append(dest[keep])
    rows = np.concatenate(rows) if rows else np.array([], dtype=np.int64)
    cols = np.concatenate(cols) if cols else np.array([], dtype=np.int64)
    n = len(present)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, comp = connected_components(graph, directed=False)

    vecs = [tuple(int(x) for x in grid[i]) for i in present]
    labels = {k: int(c) for k, c in zip(vecs, comp)}
    powers = {k: int(power[i]) for k, i in zip(vecs, present)}
    return OracleClasses(lvl, labels, powers)


def brute_force_equivalence(
    form: IntersectionForm,
    lvl,
    bound: int,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> OracleClasses:
    """Classes of all states ``U^a ⊗ K`` at level ``lvl`` with every ``|<K,v>| <= bound``.

    Moves are kept only when both endpoints lie in the box.  The result is
    recomputed with ``bound + 2`` and must induce the same partition on the
    smaller box, otherwise :class:`Unstable` is raised.  Coordinates beyond
    the Cauchy-Schwarz limit of the level set carry no states, so the box is
    clipped there without changing the answer.
    """
    if bound < max(-w for w in form.weights):
        raise InvalidParameter("bound must be at least max |m(v)|")
    lvl = Fraction(lvl)
    limits = _coordinate_limits(form, lvl, bound)
    if not limits:
        return OracleClasses(lvl, {}, {})
    small = _label_box(form, lvl, limits, budget)
    wider = _coordinate_limits(form, lvl, bound + 2)
    if wider == limits:
        return small
    large = _label_box(form, lvl, wider, budget)
    pairing: dict[int, int] = {}
    reverse: dict[int, int] = {}
    for k, lab in small.labels.items():
        other = large.labels[k]
        if pairing.setdefault(lab, other) != other or reverse.setdefault(other, lab) != lab:
            raise Unstable(f"classes at level {lvl} change when the box grows past {bound}")
    return small


def level_set_bound(form: IntersectionForm, lvl) -> int:
    """Smallest box bound that contains every state at ``lvl``."""
    limits = _coordinate_limits(form, Fraction(lvl), 10**9)
    return max(limits + [max(-w for w in form.weights)])
