"""Graded Z[U]-modules T+ ⊕ ⊕ Z^r_(k) read off a graded root.

Degree convention: a class at level ``l`` sits in degree ``-l``.  The tower
starts at minus the highest basic level; a branch of top ``t`` absorbed at
level ``l`` contributes ``Z^{(t-l)/2}`` with bottom degree ``-t``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InvalidParameter, NotStabilized
from .lattice import SpincClass
from .root import GradedRoot


@dataclass(frozen=True, order=True)
class CyclicSummand:
    """``Z[U]/U^length`` whose lowest element sits in ``bottom_degree``."""

    bottom_degree: Fraction
    length: int
    multiplicity: int = 1

    def supports(self, degree: Fraction) -> bool:
        offset = Fraction(degree) - self.bottom_degree
        return offset.denominator == 1 and offset % 2 == 0 and 0 <= offset <= 2 * (self.length - 1)


def _canonical(summands) -> tuple[CyclicSummand, ...]:
    counts: Counter = Counter()
    for s in summands:
        counts[(Fraction(s.bottom_degree), s.length)] += s.multiplicity
    return tuple(CyclicSummand(k, r, m) for (k, r), m in sorted(counts.items()) if m)


@dataclass(frozen=True)
class HFPlusModule:
    d_invariant: Fraction
    summands: tuple[CyclicSummand, ...] = ()
    spinc: Optional[SpincClass] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "d_invariant", Fraction(self.d_invariant))
        object.__setattr__(self, "summands", _canonical(self.summands))

    def __str__(self) -> str:
        parts = [f"T+({_fmt(self.d_invariant)})"]
        for s in self.summands:
            term = f"Z[{s.length}]@{_fmt(s.bottom_degree)}"
            parts.append(term if s.multiplicity == 1 else f"{s.multiplicity}*{term}")
        return " + ".join(parts)


def _fmt(q: Fraction) -> str:
    return str(Fraction(q))


def assemble(root: GradedRoot) -> HFPlusModule:
    if not root.stabilized:
        raise NotStabilized("graded root has not been descended to a single class")
    tops = [t for _, t in root.branches]
    summands = []
    for event in root.merges:
        for b in event.absorbed:
            t = tops[b]
            length = (t - event.level) / 2
            if length.denominator != 1 or length < 1:
                raise AssertionError(f"branch {b} absorbed at level {event.level} above its top {t}")
            summands.append(CyclicSummand(-t, int(length)))
    return HFPlusModule(-max(tops), tuple(summands), root.spinc)


def rank_at_degree(module: HFPlusModule, degree) -> int:
    """Rank of the module in a single degree."""
    degree = Fraction(degree)
    offset = degree - module.d_invariant
    rank = 1 if offset.denominator == 1 and offset % 2 == 0 and offset >= 0 else 0
    for s in module.summands:
        if s.supports(degree):
            rank += s.multiplicity
    return rank


def reduced_rank(module: HFPlusModule) -> int:
    return sum(s.length * s.multiplicity for s in module.summands)


def family_lengths(i: int) -> int:
    """1, 1, 2, 2, 3, 3, ..."""
    return (i + 1) // 2


def family_degrees(i: int) -> int:
    return i * (i + 1)


def family_expected_module(n: int) -> HFPlusModule:
    """Closed-form module for -Σ(2, 2n+1, 4n+3)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"n must be a positive integer, got {n!r}")
    summands = [CyclicSummand(Fraction(0), family_lengths(n))]
    for i in range(1, n):
        summands.append(CyclicSummand(Fraction(family_degrees(n - i)), family_lengths(i), 2))
    return HFPlusModule(Fraction(0), tuple(summands))
