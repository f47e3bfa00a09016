import random

import pytest
from hypothesis import given, settings, strategies as st

from galg import intmat
from strategies import numpy_signature, sympy_det

square = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(square)
def test_det_matches_sympy(m):
    assert intmat.det(m) == sympy_det(m)


@given(square)
def test_rank_matches_sympy(m):
    import sympy

    expected = sympy.Matrix(m).rank() if m else 0
    assert intmat.rank(m) == expected


@settings(max_examples=50)
@given(st.integers(1, 6), st.integers(0, 2**32))
def test_random_unimodular_is_unimodular(n, seed):
    p = intmat.random_unimodular(n, 3 * n, random.Random(seed))
    assert intmat.is_unimodular(p)
    assert abs(sympy_det(p)) == 1


@given(square)
def test_congruence_diagonal_gives_signature(m):
    sym = intmat.mat_add(m, intmat.transpose(m))
    diag = intmat.congruence_diagonal(sym)
    assert len(diag) == len(m)
    sig = sum(d > 0 for d in diag) - sum(d < 0 for d in diag)
    assert sig == numpy_signature(m)


def test_congruence_diagonal_zero_diagonal_block():
    # hyperbolic plane: no nonzero diagonal pivot to start from
    diag = intmat.congruence_diagonal([[0, 1], [1, 0]])
    assert sorted(d > 0 for d in diag) == [False, True] and 0 not in diag


def test_is_unimodular_rejects_non_square():
    assert not intmat.is_unimodular([[1, 0], [0]])
    assert intmat.is_unimodular(())
    assert not intmat.is_unimodular([[2, 0], [0, 1]])


def test_as_matrix_validates_shape():
    with pytest.raises(ValueError):
        intmat.as_matrix([[1, 2], [3]])
