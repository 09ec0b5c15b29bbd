from fractions import Fraction

import pytest

from conftest import family_form
from plumbed_hf.basic import enumerate_basic_vectors
from plumbed_hf.errors import InvalidParameter, NotStabilized
from plumbed_hf.graph import e8_graph
from plumbed_hf.lattice import IntersectionForm
from plumbed_hf.module import (
    CyclicSummand,
    HFPlusModule,
    assemble,
    family_expected_module,
    rank_at_degree,
    reduced_rank,
)
from plumbed_hf.root import GradedRoot, MergeEvent, build_graded_root


def _family_module(n):
    form = family_form(n)
    return assemble(build_graded_root(form, enumerate_basic_vectors(form)))


def test_family_one():
    m = _family_module(1)
    assert m.d_invariant == 0
    assert m.summands == (CyclicSummand(Fraction(0), 1),)
    assert str(m) == "T+(0) + Z[1]@0"


def test_family_two():
    m = _family_module(2)
    assert str(m) == "T+(0) + Z[1]@0 + 2*Z[1]@2"
    assert [rank_at_degree(m, d) for d in (0, 2, 4)] == [2, 3, 1]
    assert rank_at_degree(m, 1) == 0
    assert rank_at_degree(m, -2) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_family_matches_closed_form(n):
    m = _family_module(n)
    assert m == family_expected_module(n)
    assert reduced_rank(m) == n * (n + 1) // 2
    assert all(s.bottom_degree % 2 == 0 for s in m.summands)


@pytest.mark.parametrize("n", range(1, 5))
def test_ranks_match_class_counts(n):
    form = family_form(n)
    root = build_graded_root(form, enumerate_basic_vectors(form))
    m = assemble(root)
    top = max(s.bottom_degree + 2 * s.length for s in m.summands)
    for d in range(int(m.d_invariant) - 4, int(top) + 5):
        assert rank_at_degree(m, d) == root.class_count(-d)


def test_e8():
    form = IntersectionForm.from_graph(e8_graph())
    m = assemble(build_graded_root(form, enumerate_basic_vectors(form)))
    assert m.d_invariant == -2
    assert m.summands == ()


def test_canonical_form_merges_duplicates():
    a = HFPlusModule(0, (CyclicSummand(Fraction(2), 1), CyclicSummand(Fraction(0), 2), CyclicSummand(Fraction(2), 1)))
    b = HFPlusModule(0, (CyclicSummand(Fraction(0), 2), CyclicSummand(Fraction(2), 1, 2)))
    assert a == b
    assert str(a) == "T+(0) + Z[2]@0 + 2*Z[1]@2"


def test_unstabilized_root_rejected():
    root = GradedRoot([((1,), Fraction(0)), ((3,), Fraction(0))], [], None)
    with pytest.raises(NotStabilized):
        assemble(root)
    root = GradedRoot([((1,), Fraction(0)), ((3,), Fraction(0))], [MergeEvent(Fraction(-2), (1,), 0)], Fraction(-2))
    assert str(assemble(root)) == "T+(0) + Z[1]@0"


def test_family_expected_module_rejects_bad_n():
    with pytest.raises(InvalidParameter):
        family_expected_module(0)
