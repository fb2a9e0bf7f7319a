import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lie2alg.exactlin import (DimensionMismatch, RMatrix, invert, kron,
                              mat_from_json, mat_to_json, rank_kernel, rat_str,
                              rational, solve_linear)

entries = st.integers(min_value=-6, max_value=6)


def small_matrix(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(RMatrix.from_rows)


def test_rational_parsing_and_formatting():
    assert rational("3/4") == Fraction(3, 4)
    assert rational("-7") == -7
    assert rat_str(Fraction(-2, 6)) == "-1/3"
    assert rat_str(5) == "5"
    with pytest.raises(ValueError):
        rational("x")


def test_rank_kernel_identity():
    rank, basis = rank_kernel(RMatrix.identity(2))
    assert (rank, basis) == (2, [])


def test_rank_kernel_zero():
    rank, basis = rank_kernel(RMatrix.zeros(2, 2))
    assert rank == 0
    assert basis == [[1, 0], [0, 1]]


def test_rank_kernel_rank_one():
    rank, basis = rank_kernel(RMatrix.from_rows([[1, 2], [2, 4]]))
    assert rank == 1
    assert basis == [[-2, 1]]


def test_solve_identity():
    assert solve_linear(RMatrix.identity(2), [3, 5]) == [3, 5]


def test_solve_inconsistent():
    assert solve_linear(RMatrix.zeros(2, 2), [1, 0]) is None


def test_solve_free_coordinates_zero():
    assert solve_linear(RMatrix.from_rows([[1, 2], [2, 4]]), [1, 2]) == [1, 0]


def test_solve_shape_error():
    with pytest.raises(DimensionMismatch):
        solve_linear(RMatrix.identity(2), [1, 2, 3])


def test_kron_identity_factor_block_diagonal():
    a = RMatrix.from_rows([[1, 2], [3, 4]])
    k = kron(RMatrix.identity(2), a)
    assert k.data == [[1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4]]


def test_kron_zero_factor():
    a = RMatrix.from_rows([[1, 2], [3, 4]])
    assert kron(a, RMatrix.zeros(2, 2)).is_zero()


def test_kron_direct_expansion():
    assert kron(RMatrix.from_rows([[2]]), RMatrix.from_rows([[1, 1]])).data == [[2, 2]]


@settings(max_examples=40, deadline=None)
@given(small_matrix(3, 3))
def test_kernel_vectors_annihilated(m):
    _, basis = rank_kernel(m)
    for v in basis:
        assert all(x == 0 for x in m.matvec(v))


@settings(max_examples=25, deadline=None)
@given(small_matrix(3, 3), small_matrix(3, 3))
def test_kron_rank_multiplicative(a, b):
    ra, _ = rank_kernel(a)
    rb, _ = rank_kernel(b)
    rk, _ = rank_kernel(kron(a, b))
    assert rk == ra * rb


@settings(max_examples=15, deadline=None)
@given(small_matrix(2, 2), small_matrix(2, 3), small_matrix(3, 2))
def test_kron_associative_under_flat_indexing(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=30, deadline=None)
@given(small_matrix(3, 4), st.lists(entries, min_size=4, max_size=4))
def test_solve_returns_actual_solutions(m, x):
    b = m.matvec(x)
    sol = solve_linear(m, b)
    assert sol is not None
    assert m.matvec(sol) == b


def test_rank_plus_kernel_dimension():
    rng = random.Random(3)
    for _ in range(20):
        m = RMatrix.from_rows([[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)])
        rank, basis = rank_kernel(m)
        assert rank + len(basis) == m.cols


def test_empty_shapes():
    z = RMatrix.zeros(0, 3)
    rank, basis = rank_kernel(z)
    assert rank == 0 and len(basis) == 3
    assert RMatrix.identity(0) @ RMatrix.zeros(0, 2) == RMatrix.zeros(0, 2)


def test_invert_round_trip():
    m = RMatrix.from_rows([[1, 2], [1, 3]])
    assert m @ invert(m) == RMatrix.identity(2)
    with pytest.raises(ValueError):
        invert(RMatrix.from_rows([[1, 2], [2, 4]]))


def test_matrix_json_round_trip():
    m = RMatrix.from_rows([[Fraction(1, 2), 3], [0, -2]])
    assert mat_from_json(mat_to_json(m)) == m
