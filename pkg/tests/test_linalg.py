from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plumbed_hf import linalg
from plumbed_hf.errors import SingularForm
from plumbed_hf.oracle import laplace_det

small_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(small_matrices)
@settings(max_examples=200, deadline=None)
def test_bareiss_determinant_matches_cofactor_expansion(m):
    assert linalg.determinant(m) == laplace_det(m)


@given(small_matrices)
@settings(max_examples=200, deadline=None)
def test_leading_minors_match_cofactor_expansion(m):
    minors = linalg.leading_minors(m)
    for k, value in enumerate(minors, start=1):
        assert value == laplace_det([row[:k] for row in m[:k]])
    if len(minors) < len(m):
        assert minors[-1] == 0


def test_negative_definite_examples():
    assert linalg.is_negative_definite([[-2, 1], [1, -2]])
    assert not linalg.is_negative_definite([[-1, 1], [1, -1]])
    assert not linalg.is_negative_definite([[1]])
    assert not linalg.is_negative_definite([[0, 1], [1, -3]])


def test_solve_exact():
    x = linalg.solve([[-3, 1], [1, -2]], [1, 0])
    assert x == [Fraction(-2, 5), Fraction(-1, 5)]


def test_solve_singular():
    with pytest.raises(SingularForm):
        linalg.solve([[1, 2], [2, 4]], [1, 1])


@given(small_matrices)
@settings(max_examples=100, deadline=None)
def test_smith_form_decomposition(m):
    diag, u, v = linalg.smith_form(m)
    n = len(m)
    um = [[sum(u[i][k] * m[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    umv = [[sum(um[i][k] * v[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert umv == [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert b == 0 or (a != 0 and b % a == 0)
