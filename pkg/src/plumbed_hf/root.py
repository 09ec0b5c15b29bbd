"""Equivalence of U-decorated vectors, minimal relationships, graded roots.

At a fixed level ``l`` the U-power of ``U^a ⊗ K`` is determined by ``K``,
so a search state is the vector alone.  Two states are joined by a move
``(K, a) <-> (K + 2PD[v], a + n)`` when both powers are nonnegative.  The
set of states at a level is finite because ``K^2 >= 4l - |G|``.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .basic import Outcome, in_initial_box, push_down
from .errors import (
    DifferentSpinc,
    LevelMismatch,
    NotBasic,
    SearchBudgetExceeded,
)
from .lattice import CharVector, IntersectionForm, SpincClass, level, same_spinc
from .unionfind import DisjointSet

DEFAULT_STATE_BUDGET = 5 * 10**6


def _move_table(form: IntersectionForm):
    weights = form.weights
    return [
        (v, weights[v], tuple((j, 2 * x) for j, x in row))
        for v, row in enumerate(form.sparse_rows)
    ]


def _expand(moves, k: CharVector, a: int):
    """Neighbouring states ``(K', a')`` with ``a' >= 0``."""
    for v, w, delta in moves:
        kv = k[v]
        b = a + (kv + w) // 2
        if b >= 0:
            nxt = list(k)
            for j, x in delta:
                nxt[j] += x
            yield tuple(nxt), b
        b = a - (kv - w) // 2
        if b >= 0:
            nxt = list(k)
            for j, x in delta:
                nxt[j] -= x
            yield tuple(nxt), b


def ascend(form: IntersectionForm, k: CharVector, a: int, moves=None, cache=None) -> CharVector:
    """Climb from ``U^a ⊗ K`` to a peak plateau and name it.

    Every step raises or keeps the U-power, so the whole climb stays at the
    starting level and witnesses equivalence.  A plateau is the set of
    equal-power states joined by moves; it is a peak when no member has a
    neighbour of higher power, and it is named by its least member.
    """
    moves = moves or _move_table(form)
    cache = {} if cache is None else cache
    path = []
    while True:
        if k in cache:
            name = cache[k]
            break
        best = max(_expand(moves, k, a), key=lambda s: s[1], default=None)
        if best is not None and best[1] > a:
            path.append(k)
            k, a = best
            continue
        plateau = [k]
        members = {k}
        todo = [k]
        exit_state = None
        while todo and exit_state is None:
            cur = todo.pop()
            for nxt, b in _expand(moves, cur, a):
                if b > a or (b == a and nxt in cache):
                    exit_state = (nxt, b)
                    break
                if b == a and nxt not in members:
                    members.add(nxt)
                    plateau.append(nxt)
                    todo.append(nxt)
        path.extend(plateau)
        if exit_state is None:
            name = min(plateau)
            break
        k, a = exit_state
    for s in path:
        cache[s] = name
    return name


def partition_states(
    form: IntersectionForm,
    seeds: Sequence[tuple[CharVector, int]],
    budget: int = DEFAULT_STATE_BUDGET,
    linked: Sequence[tuple[int, int]] = (),
) -> list[int]:
    """Label each seed state by its equivalence class at their common level.

    One search runs per seed, always advancing the search that has visited
    the fewest states; within a search, states of highest U-power are
    expanded first.  Searches that meet are fused.  A search that finds a
    state of higher U-power than any of its seeds has left its own basin:
    climbing from that state to a peak shows which seed it joined.  Once at
    most one fused search still has a frontier, every other component has
    been exhausted, so the partition is final without enumerating the
    largest component.

    ``linked`` lists seed index pairs already known to be equivalent.

    Returns a list of labels; seeds share a label iff equivalent.
    """
    moves = _move_table(form)
    owner: dict[CharVector, int] = {}
    power: dict[CharVector, int] = {}
    ds = DisjointSet(range(len(seeds)))
    find = ds.find
    frontier: dict[int, list] = {}
    ceiling: dict[int, int] = {}
    visited: dict[int, int] = {}
    tick = itertools.count()
    peak_cache: dict[CharVector, CharVector] = {}
    peak_owner: dict[CharVector, int] = {}

    def fuse(i: int, j: int) -> int:
        ri, rj = find(i), find(j)
        if ri == rj:
            return ri
        ds.union(ri, rj)
        root = find(ri)
        other = rj if root == ri else ri
        if other in frontier:
            merged = frontier.get(root, []) + frontier.pop(other)
            heapq.heapify(merged)
            frontier[root] = merged
        visited[root] = visited.get(root, 0) + visited.pop(other, 0)
        ceiling[root] = max(ceiling.get(root, 0), ceiling.pop(other, 0))
        return root

    for i, (k, a) in enumerate(seeds):
        if k in owner:
            if power[k] != a:
                raise LevelMismatch(f"seed {k} given with two U-powers")
            fuse(owner[k], i)
            continue
        owner[k] = i
        power[k] = a
        frontier[i] = [(-a, next(tick), k)]
        visited[i] = 1
        ceiling[i] = a
    for i, j in linked:
        fuse(i, j)
    for i, (k, a) in enumerate(seeds):
        peak = ascend(form, k, a, moves, peak_cache)
        if peak in peak_owner:
            fuse(peak_owner[peak], i)
        else:
            peak_owner[peak] = i

    push, pop = heapq.heappush, heapq.heappop
    total = len(owner)
    while True:
        live = [r for r, q in frontier.items() if q]
        if len(live) <= 1:
            break
        label = min(live, key=visited.__getitem__)
        queue = frontier[label]
        for _ in range(512):
            if not queue:
                break
            k = pop(queue)[2]
            for nxt, b in _expand(moves, k, power[k]):
                seen = owner.get(nxt)
                if seen is None:
                    owner[nxt] = label
                    power[nxt] = b
                    push(queue, (-b, next(tick), nxt))
                    visited[label] += 1
                    total += 1
                    if b > ceiling[label]:
                        peak = ascend(form, nxt, b, moves, peak_cache)
                        if peak in peak_owner:
                            label = fuse(peak_owner[peak], label)
                            queue = frontier[label]
                        else:
                            peak_owner[peak] = label
                elif find(seen) != label:
                    label = fuse(seen, label)
                    queue = frontier[label]
            if total > budget:
                raise SearchBudgetExceeded(f"level search visited more than {budget} states")
    return [find(i) for i in range(len(seeds))]


def equivalent_at_level(
    form: IntersectionForm,
    k1: Sequence[int],
    m1: int,
    k2: Sequence[int],
    m2: int,
    budget: int = DEFAULT_STATE_BUDGET,
) -> bool:
    """Is ``U^m1 ⊗ K1`` equivalent to ``U^m2 ⊗ K2``?"""
    k1 = form.check_characteristic(k1)
    k2 = form.check_characteristic(k2)
    if m1 < 0 or m2 < 0:
        raise ValueError("U-powers must be nonnegative")
    l1, l2 = level(form, k1, m1), level(form, k2, m2)
    if l1 != l2:
        raise LevelMismatch(f"levels differ: {l1} vs {l2}")
    if (k1, m1) == (k2, m2):
        return True
    labels = partition_states(form, [(k1, m1), (k2, m2)], budget)
    return labels[0] == labels[1]


def is_basic(form: IntersectionForm, k: Sequence[int]) -> bool:
    return in_initial_box(form, k) and push_down(form, k).kind is Outcome.IN_BOX


def default_floor_depth(form: IntersectionForm) -> int:
    return 4 * form.size


def minimal_relationship(
    form: IntersectionForm,
    k1: Sequence[int],
    k2: Sequence[int],
    floor_depth: Optional[int] = None,
    budget: int = DEFAULT_STATE_BUDGET,
) -> tuple[int, int]:
    """Least ``(a, b)`` with ``U^a ⊗ K1 ~ U^b ⊗ K2`` for basic ``K1, K2``.

    Conservation forces ``level(K1) - 2a = level(K2) - 2b``, so only the
    common level has to be searched, descending in steps of two.
    ``floor_depth`` bounds how far (in level units) below the lower of the
    two basic levels the search may go.
    """
    k1 = form.check_characteristic(k1)
    k2 = form.check_characteristic(k2)
    for k in (k1, k2):
        if not is_basic(form, k):
            raise NotBasic(f"{k} is not a basic vector")
    if not same_spinc(form, k1, k2):
        raise DifferentSpinc(f"{k1} and {k2} lie in different Spin^c structures")
    t1, t2 = level(form, k1), level(form, k2)
    if (t1 - t2) % 2:
        raise AssertionError(f"basic levels {t1}, {t2} are not congruent mod 2")
    depth = default_floor_depth(form) if floor_depth is None else floor_depth
    start = min(t1, t2)
    lvl = start
    while lvl >= start - depth:
        a, b = int((t1 - lvl) / 2), int((t2 - lvl) / 2)
        if equivalent_at_level(form, k1, a, k2, b, budget):
            if lvl == start:
                raise NotBasic(f"{k1} and {k2} are equivalent already at level {start}")
            return a, b
        lvl -= 2
    raise SearchBudgetExceeded(f"no relationship found within {depth} levels below {start}")


@dataclass(frozen=True)
class MergeEvent:
    level: Fraction
    absorbed: tuple[int, ...]
    survivor: int


@dataclass
class GradedRoot:
    """Merge tree of basic-vector branches inside one Spin^c structure.

    Branch ``i`` is the ray ``U^a ⊗ K_i`` (``a = 0, 1, ...``) starting at
    level ``top_i``.  A cluster is named by its leader branch: the one with
    the highest top, ties broken by the lexicographically least vector.
    """

    branches: list[tuple[CharVector, Fraction]]
    merges: list[MergeEvent] = field(default_factory=list)
    stabilization_level: Optional[Fraction] = None
    spinc: Optional[SpincClass] = None

    @property
    def stabilized(self) -> bool:
        return self.stabilization_level is not None

    @property
    def top_level(self) -> Fraction:
        return max(t for _, t in self.branches)

    def class_count(self, lvl: Fraction) -> int:
        """Number of equivalence classes at level ``lvl``."""
        lvl = Fraction(lvl)
        if (self.top_level - lvl) % 2:
            return 0
        alive = sum(1 for _, t in self.branches if t >= lvl)
        absorbed = sum(len(e.absorbed) for e in self.merges if e.level >= lvl)
        return alive - absorbed


def build_graded_root(
    form: IntersectionForm,
    basics: Sequence[Sequence[int]],
    spinc: Optional[SpincClass] = None,
    floor_depth: Optional[int] = None,
    budget: int = DEFAULT_STATE_BUDGET,
) -> GradedRoot:
    """Descend from the highest basic level, fusing branches that meet.

    All ``basics`` must be basic vectors of one Spin^c structure.
    """
    if not basics:
        raise ValueError("need at least one basic vector")
    vecs = [form.check_characteristic(k) for k in basics]
    tops = [level(form, k) for k in vecs]
    for t in tops:
        if (t - tops[0]) % 2:
            raise AssertionError(f"basic levels {tops} are not congruent mod 2")
    order = sorted(range(len(vecs)), key=lambda i: (-tops[i], vecs[i]))
    vecs = [vecs[i] for i in order]
    tops = [tops[i] for i in order]
    root = GradedRoot(branches=list(zip(vecs, tops)), spinc=spinc)

    # leader of each cluster; sorted order makes the smallest index the leader
    ds = DisjointSet(range(len(vecs)))
    leader = {i: i for i in range(len(vecs))}
    depth = default_floor_depth(form) if floor_depth is None else floor_depth
    lowest = min(tops)
    lvl = tops[0]
    clusters = 1
    last_merge = tops[0]
    while True:
        active = [i for i in range(len(vecs)) if tops[i] >= lvl]
        roots = sorted({ds.find(i) for i in active}, key=lambda r: leader[r])
        clusters = len(roots)
        if clusters > 1:
            seeds = [(vecs[i], int((tops[i] - lvl) / 2)) for i in active]
            linked = [(p, q) for p, i in enumerate(active) for q, j in enumerate(active)
                      if p < q and ds.find(i) == ds.find(j)]
            labels = dict(zip(active, partition_states(form, seeds, budget, linked)))
            groups: dict[int, list[int]] = {}
            for r in roots:
                groups.setdefault(labels[r], []).append(r)
            for members in groups.values():
                if len(members) < 2:
                    continue
                leaders = sorted(leader[r] for r in members)
                survivor, absorbed = leaders[0], leaders[1:]
                for b in absorbed:
                    if tops[b] == lvl:
                        raise NotBasic(f"{vecs[b]} is equivalent to another basic vector")
                for r in members[1:]:
                    ds.union(members[0], r)
                leader[ds.find(members[0])] = survivor
                root.merges.append(MergeEvent(lvl, tuple(absorbed), survivor))
                clusters -= len(absorbed)
                last_merge = lvl
        if clusters == 1 and lvl <= lowest:
            break
        if lvl - 2 < lowest - depth:
            raise SearchBudgetExceeded(
                f"branches still separate {depth} levels below the lowest basic level"
            )
        lvl -= 2
    root.stabilization_level = last_merge
    return root
