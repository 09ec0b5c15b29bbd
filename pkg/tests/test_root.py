import itertools
from fractions import Fraction

import pytest

from conftest import family_basic, family_form
from plumbed_hf.basic import enumerate_basic_vectors
from plumbed_hf.errors import DifferentSpinc, LevelMismatch, NotBasic, SearchBudgetExceeded
from plumbed_hf.graph import PlumbingGraph
from plumbed_hf.lattice import IntersectionForm, level, move_target
from plumbed_hf.root import (
    build_graded_root,
    equivalent_at_level,
    is_basic,
    minimal_relationship,
    partition_states,
)


def test_equivalent_at_level_family_one():
    form = family_form(1)
    k1, k2 = family_basic(1, 1), family_basic(1, 2)
    assert not equivalent_at_level(form, k1, 0, k2, 0)
    assert equivalent_at_level(form, k1, 1, k2, 1)
    assert equivalent_at_level(form, k1, 4, k2, 4)


def test_equivalent_at_level_requires_equal_levels():
    form = family_form(1)
    with pytest.raises(LevelMismatch):
        equivalent_at_level(form, family_basic(1, 1), 0, family_basic(1, 2), 1)


def test_single_move_is_equivalence():
    form = family_form(2)
    k = family_basic(2, 2)
    for v in range(form.size):
        k2, gain = move_target(form, k, v)
        a = max(0, -gain) + 1
        assert equivalent_at_level(form, k, a, k2, a + gain)


@pytest.mark.parametrize(
    "n,i,j,expected",
    [(1, 1, 2, (1, 1)), (2, 2, 3, (1, 1)), (2, 1, 2, (1, 2)), (3, 3, 4, (2, 2))],
)
def test_minimal_relationship_values(n, i, j, expected):
    form = family_form(n)
    assert minimal_relationship(form, family_basic(n, i), family_basic(n, j)) == expected


def test_minimal_relationship_symmetric_and_exact():
    form = family_form(2)
    basics = enumerate_basic_vectors(form)
    for k1, k2 in itertools.combinations(basics, 2):
        a, b = minimal_relationship(form, k1, k2)
        assert minimal_relationship(form, k2, k1) == (b, a)
        assert level(form, k1, a) == level(form, k2, b)
        assert equivalent_at_level(form, k1, a, k2, b)
        if min(a, b) > 0:
            assert not equivalent_at_level(form, k1, a - 1, k2, b - 1)
        # once related, related at every lower level
        assert equivalent_at_level(form, k1, a + 2, k2, b + 2)


def test_basic_vectors_pairwise_inequivalent():
    for n in (1, 2, 3):
        form = family_form(n)
        for k1, k2 in itertools.combinations(enumerate_basic_vectors(form), 2):
            a, b = minimal_relationship(form, k1, k2)
            assert a >= 1 and b >= 1


def test_minimal_relationship_errors():
    form = family_form(1)
    with pytest.raises(NotBasic):
        minimal_relationship(form, (1, 0, -1, 5), family_basic(1, 1))
    lens = IntersectionForm.from_graph(PlumbingGraph((-3,)))
    with pytest.raises(DifferentSpinc):
        minimal_relationship(lens, (-1,), (1,))
    with pytest.raises(SearchBudgetExceeded):
        minimal_relationship(family_form(3), family_basic(3, 3), family_basic(3, 4), floor_depth=2)


def test_is_basic():
    form = family_form(2)
    assert is_basic(form, family_basic(2, 1))
    assert not is_basic(form, (1, 2, -1, -7, 0))


def test_partition_states_linked():
    form = family_form(1)
    seeds = [(family_basic(1, 1), 1), (family_basic(1, 2), 1)]
    labels = partition_states(form, seeds)
    assert labels[0] == labels[1]
    labels = partition_states(form, [(s, 0) for s, _ in seeds])
    assert labels[0] != labels[1]


@pytest.mark.parametrize(
    "n,tops,merges",
    [
        (1, [0, 0], [(-2, (1,))]),
        (2, [0, 0, -2, -2], [(-2, (1,)), (-4, (2, 3))]),
        (3, [0, 0, -2, -2, -6, -6], [(-4, (1, 2, 3)), (-8, (4, 5))]),
    ],
)
def test_build_graded_root_family(n, tops, merges):
    form = family_form(n)
    root = build_graded_root(form, enumerate_basic_vectors(form))
    assert [t for _, t in root.branches] == tops
    assert [(e.level, e.absorbed) for e in root.merges] == merges
    assert all(e.survivor == 0 for e in root.merges)
    assert root.stabilized
    assert root.stabilization_level == merges[-1][0]


def test_graded_root_class_counts_family_two():
    form = family_form(2)
    root = build_graded_root(form, enumerate_basic_vectors(form))
    assert [root.class_count(lvl) for lvl in (2, 0, -2, -4, -6)] == [0, 2, 3, 1, 1]
    assert root.class_count(Fraction(-1)) == 0


def test_graded_root_branch_order():
    form = family_form(2)
    basics = enumerate_basic_vectors(form)
    root = build_graded_root(form, basics[::-1])
    assert [k for k, _ in root.branches][:2] == [family_basic(2, 2), family_basic(2, 3)]
