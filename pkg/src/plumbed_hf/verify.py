"""Checks of the Σ(2, 2n+1, 4n+3) family against its closed-form answers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import brieskorn_family_graph
from .lattice import IntersectionForm, level, solve_pairing
from .module import family_expected_module, reduced_rank
from .pipeline import compute


@dataclass(frozen=True)
class Check:
    n: int
    name: str
    passed: bool
    detail: str = ""


def expected_basic_vectors(n: int) -> list[tuple[int, ...]]:
    """``(1, 0, -1, -4n-3+2i, 0, ..., 0)`` for ``i = 1..2n``."""
    tail = (0,) * (n - 1)
    return [(1, 0, -1, -4 * n - 3 + 2 * i) + tail for i in range(1, 2 * n + 1)]


def expected_dual_of_middle(n: int) -> list[int]:
    """``M^{-1} K_n^T = (2n, n, n, 1, n-1, n-2, ..., 1)``."""
    return [2 * n, n, n, 1] + list(range(n - 1, 0, -1))


def family_checks(n: int, **compute_kwargs) -> list[Check]:
    graph = brieskorn_family_graph(n)
    form = IntersectionForm.from_graph(graph)
    result = compute(graph, **compute_kwargs)
    checks = []

    want = expected_basic_vectors(n)
    checks.append(Check(n, "basic vectors", result.basics == want,
                        f"{len(result.basics)} found, {len(want)} expected"))

    k_mid = want[n - 1]
    x = solve_pairing(form, k_mid)
    ok = x == [Fraction(v) for v in expected_dual_of_middle(n)] and level(form, k_mid) == 0
    checks.append(Check(n, "M^-1 K_n and level 0", ok, " ".join(str(v) for v in x)))

    (only,) = result.spinc
    expected = family_expected_module(n)
    got = only.module
    ok = got.d_invariant == expected.d_invariant and got.summands == expected.summands
    checks.append(Check(n, "module", ok, str(got)))

    rank = reduced_rank(got)
    checks.append(Check(n, "reduced rank n(n+1)/2", rank == n * (n + 1) // 2, str(rank)))
    return checks
