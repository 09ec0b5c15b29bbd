"""Push-down algorithm and enumeration of basic vectors."""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from . import linalg
from .errors import (
    BoxTooLarge,
    CycleDetected,
    InvalidParameter,
    NotNegativeDefinite,
    StepLimit,
    TooManyBadVertices,
)
from .lattice import CharVector, IntersectionForm

DEFAULT_STEP_LIMIT = 10**6
DEFAULT_BOX_BUDGET = 10**8

OrderPolicy = Union[str, int, random.Random]


class Outcome(Enum):
    IN_BOX = "InBox"
    OVERSHOOT = "Overshoot"


@dataclass(frozen=True)
class PushDownOutcome:
    kind: Outcome
    terminal: CharVector
    trace: tuple[int, ...]


def in_initial_box(form: IntersectionForm, k: Sequence[int]) -> bool:
    return all(w + 2 <= a <= -w for a, w in zip(k, form.weights))


def in_terminal_box(form: IntersectionForm, k: Sequence[int]) -> bool:
    return all(w <= a <= -w - 2 for a, w in zip(k, form.weights))


def _chooser(policy: OrderPolicy):
    if policy == "first":
        return min
    if policy == "last":
        return max
    if isinstance(policy, random.Random):
        rng = policy
    elif isinstance(policy, int) and not isinstance(policy, bool):
        rng = random.Random(policy)
    else:
        raise InvalidParameter(f"unknown order policy {policy!r}")
    return lambda cands: rng.choice(sorted(cands))


def push_down(
    form: IntersectionForm,
    k: Sequence[int],
    order_policy: OrderPolicy = "first",
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> PushDownOutcome:
    """Run the push-down sequence from a vector of the initial box.

    While some vertex ``v`` has ``<K,v> = -m(v)``, replace ``K`` by
    ``K + 2 PD[v]``; every such move is an equivalence with U-power change
    zero.  ``order_policy`` is ``"first"``, ``"last"``, an integer seed or a
    :class:`random.Random` used to pick among qualifying vertices.
    """
    k = form.check_characteristic(k)
    if not in_initial_box(form, k):
        raise InvalidParameter(f"{k} is not in the initial box")
    choose = _chooser(order_policy)
    weights = form.weights
    cur = list(k)
    ready = {v for v, w in enumerate(weights) if cur[v] == -w}
    seen = {k}
    trace = []
    while ready:
        if len(trace) >= step_limit:
            raise StepLimit(f"push-down exceeded {step_limit} steps from {k}")
        v = choose(ready)
        trace.append(v)
        for j, x in form.sparse_rows[v]:
            cur[j] += 2 * x
            if cur[j] == -weights[j]:
                ready.add(j)
            else:
                ready.discard(j)
        state = tuple(cur)
        if state in seen:
            raise CycleDetected(f"push-down from {k} revisited {state}")
        seen.add(state)
    terminal = tuple(cur)
    return PushDownOutcome(_classify_terminal(form, terminal), terminal, tuple(trace))


def _classify_terminal(form: IntersectionForm, terminal: CharVector) -> Outcome:
    if in_terminal_box(form, terminal):
        return Outcome.IN_BOX
    if any(a > -w for a, w in zip(terminal, form.weights)):
        return Outcome.OVERSHOOT
    # pairings only drop at the pushed vertex, and only to m(v)
    raise AssertionError(f"terminal {terminal} fits neither stopping condition")


def _memo_kind(form: IntersectionForm, k: CharVector, memo: dict, step_limit: int) -> Outcome:
    """First-index push-down with outcomes shared across overlapping traces."""
    weights = form.weights
    path = []
    seen = set()
    cur = list(k)
    state = k
    kind = None
    while True:
        if state in memo:
            kind = memo[state]
            break
        if state in seen:
            raise CycleDetected(f"push-down from {k} revisited {state}")
        seen.add(state)
        path.append(state)
        v = next((i for i, w in enumerate(weights) if cur[i] == -w), None)
        if v is None:
            kind = _classify_terminal(form, state)
            break
        if len(path) > step_limit:
            raise StepLimit(f"push-down exceeded {step_limit} steps from {k}")
        for j, x in form.sparse_rows[v]:
            cur[j] += 2 * x
        state = tuple(cur)
    for s in path:
        memo[s] = kind
    return kind


def _bad_vertex_count(form: IntersectionForm) -> int:
    count = 0
    for v, row in enumerate(form.sparse_rows):
        degree = sum(1 for j, _ in row if j != v)
        if form.weights[v] > -degree:
            count += 1
    return count


def enumerate_basic_vectors(
    form: IntersectionForm,
    box_budget: int = DEFAULT_BOX_BUDGET,
    step_limit: int = DEFAULT_STEP_LIMIT,
    order_policy: OrderPolicy = "first",
) -> list[CharVector]:
    """All initial-box vectors whose push-down ends inside the terminal box.

    Returned in lexicographic order of pairing tuples.  With the default
    first-index policy, outcomes are memoised across overlapping traces;
    any other policy runs every push-down from scratch.
    """
    if not linalg.is_negative_definite(form.matrix):
        raise NotNegativeDefinite("intersection form is not negative-definite")
    if _bad_vertex_count(form) > 1:
        raise TooManyBadVertices("more than one bad vertex")
    if form.box_size() > box_budget:
        raise BoxTooLarge(f"box has {form.box_size()} vectors, budget {box_budget}")
    if order_policy != "first":
        return [
            k for k in form.box()
            if push_down(form, k, order_policy, step_limit).kind is Outcome.IN_BOX
        ]
    memo: dict[CharVector, Outcome] = {}
    return [k for k in form.box() if _memo_kind(form, k, memo, step_limit) is Outcome.IN_BOX]
