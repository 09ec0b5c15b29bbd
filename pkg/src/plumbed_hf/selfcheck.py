"""Cross-check a computation against the brute-force oracle."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .lattice import square
from .oracle import brute_force_equivalence, brute_force_squares, level_set_bound
from .pipeline import Computation
from .root import equivalent_at_level


@dataclass
class SelfCheckReport:
    comparisons: int = 0
    mismatches: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def self_check(comp: Computation, oracle_budget: int = 2 * 10**6) -> SelfCheckReport:
    """Compare squares and pairwise equivalences of basic vectors.

    Every pair of basic vectors in one Spin^c structure is compared at every
    level from the lower of their tops down to the stabilization level.
    """
    report = SelfCheckReport()
    form = comp.form
    oracle_sq = brute_force_squares(form, comp.basics)
    for k in comp.basics:
        report.comparisons += 1
        if oracle_sq[k] != square(form, k):
            report.mismatches.append(f"square of {k}: {square(form, k)} vs oracle {oracle_sq[k]}")

    for res in comp.spinc:
        branches = res.root.branches
        lvl = res.root.top_level
        floor = res.root.stabilization_level - 2
        while lvl >= floor:
            alive = [(k, t) for k, t in branches if t >= lvl]
            if len(alive) > 1:
                try:
                    classes = brute_force_equivalence(form, lvl, level_set_bound(form, lvl), oracle_budget)
                except BudgetExceeded as exc:
                    report.skipped.append(f"spin^c {res.spinc.index} level {lvl}: {exc}")
                    lvl -= 2
                    continue
                for i, (k1, t1) in enumerate(alive):
                    for k2, t2 in alive[i + 1:]:
                        a, b = int((t1 - lvl) / 2), int((t2 - lvl) / 2)
                        fast = equivalent_at_level(form, k1, a, k2, b)
                        slow = classes.same(k1, k2)
                        report.comparisons += 1
                        if fast != slow:
                            report.mismatches.append(
                                f"level {lvl}: U^{a}·{k1} vs U^{b}·{k2}: search {fast}, oracle {slow}"
                            )
            lvl -= 2
    return report
