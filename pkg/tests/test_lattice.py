import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import family_basic, family_form, small_graphs
from plumbed_hf.errors import NotCharacteristic
from plumbed_hf.graph import PlumbingGraph
from plumbed_hf.lattice import (
    IntersectionForm,
    level,
    move_back,
    move_target,
    same_spinc,
    solve_pairing,
    spinc_classify,
    spinc_count,
    spinc_index,
    square,
)
from plumbed_hf.oracle import brute_force_squares


def test_square_family_one():
    form = family_form(1)
    assert solve_pairing(form, family_basic(1, 1)) == [2, 1, 1, 1]
    assert square(form, family_basic(1, 1)) == -4
    assert level(form, family_basic(1, 1)) == 0


def test_square_family_two():
    form = family_form(2)
    k = (1, 0, -1, -7, 0)
    assert solve_pairing(form, k) == [4, 2, 2, 1, 1]
    assert square(form, k) == -5
    assert level(form, k) == 0
    assert level(form, family_basic(2, 1)) == -2


def test_level_with_upower():
    form = family_form(2)
    k = family_basic(2, 2)
    assert level(form, k, 3) == level(form, k) - 6


def test_move_target_examples():
    form = family_form(1)
    # <K,v0> = 1 = -m(v0): n = 0
    assert move_target(form, (1, 0, -1, -5), 0) == ((-1, 2, 1, -3), 0)
    # at the -7 leaf: 2n = -5 - 7
    assert move_target(form, (1, 0, -1, -5), 3) == ((3, 0, -1, -19), -6)
    assert move_target(form, (1, 0, -1, 7), 3) == ((3, 0, -1, -7), 0)


def test_move_back_inverts_move_target():
    form = family_form(2)
    k = family_basic(2, 3)
    for v in range(form.size):
        k2, n = move_target(form, k, v)
        k3, n_back = move_back(form, k2, v)
        # U^a K ~ U^(a+n) K2 read backwards
        assert k3 == k and n_back == n


def test_characteristic_parity_enforced():
    form = family_form(1)
    with pytest.raises(NotCharacteristic):
        level(form, (0, 0, -1, -5))
    with pytest.raises(NotCharacteristic):
        square(form, (1, 0, -1))


def test_spinc_counts():
    assert spinc_count(family_form(3)) == 1
    assert spinc_count(IntersectionForm.from_graph(PlumbingGraph((-3,)))) == 3
    assert spinc_count(IntersectionForm.from_graph(PlumbingGraph((-2, -2), ((0, 1),)))) == 3
    assert spinc_count(IntersectionForm.from_graph(PlumbingGraph((-2, -3)))) == 6


def test_single_vertex_classes():
    form = IntersectionForm.from_graph(PlumbingGraph((-3,)))
    idx = {k: spinc_index(form, (k,)) for k in (-1, 1, 3)}
    assert len(set(idx.values())) == 3
    # K and K + 2*PD[v] = K - 6 agree
    assert spinc_index(form, (5,)) == idx[-1]
    assert same_spinc(form, (7,), (1,))


def test_classify_partitions_box():
    form = IntersectionForm.from_graph(PlumbingGraph((-2, -3, -2), ((0, 1), (1, 2))))
    groups = spinc_classify(form, form.box())
    assert len(groups) == spinc_count(form) == abs(form.det)
    assert sum(len(m) for _, m in groups) == form.box_size()
    assert [c.index for c, _ in groups] == sorted(c.index for c, _ in groups)
    for cls, members in groups:
        assert cls.representative == min(members)
        assert all(spinc_index(form, k) == cls.index for k in members)


def _random_char(form, rng, spread=4):
    return tuple(w % 2 + 2 * rng.randint(-spread, spread) for w in form.weights)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_squares_agree_with_adjugate_oracle(n):
    form = family_form(n)
    box = list(form.box())
    oracle = brute_force_squares(form, box)
    assert all(oracle[k] == square(form, k) for k in box)


def test_squares_agree_on_small_graphs():
    rng = random.Random(7)
    for g in itertools.islice(small_graphs(), 0, None, 7):
        form = IntersectionForm.from_graph(g)
        vecs = [_random_char(form, rng) for _ in range(5)]
        oracle = brute_force_squares(form, vecs)
        assert all(oracle[k] == square(form, k) for k in vecs)


@given(st.integers(1, 4), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_square_is_even_under_negation(n, rng):
    form = family_form(n)
    k = _random_char(form, rng)
    assert square(form, k) == square(form, tuple(-a for a in k))


@given(st.integers(1, 4), st.randoms(use_true_random=False), st.integers(0, 6))
@settings(max_examples=200, deadline=None)
def test_moves_conserve_level(n, rng, m):
    form = family_form(n)
    k = _random_char(form, rng)
    v = rng.randrange(form.size)
    k2, gain = move_target(form, k, v)
    if m + gain >= 0:
        assert level(form, k, m) == level(form, k2, m + gain)


@given(st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_level_differences_even_within_spinc(rng):
    ws = [rng.choice([-2, -3, -4, -5]) for _ in range(3)]
    form = IntersectionForm.from_graph(PlumbingGraph(ws, ((0, 1), (1, 2))))
    k1 = _random_char(form, rng)
    # walk within the class by random moves
    k2 = k1
    for _ in range(rng.randint(0, 6)):
        k2, _ = (move_target if rng.random() < 0.5 else move_back)(form, k2, rng.randrange(3))
    assert same_spinc(form, k1, k2)
    diff = level(form, k1) - level(form, k2)
    assert diff.denominator == 1 and diff % 2 == 0


def test_level_is_fraction_for_lens_space():
    form = IntersectionForm.from_graph(PlumbingGraph((-3,)))
    assert level(form, (1,)) == Fraction(1, 6)
