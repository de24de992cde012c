from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axial.exact import (RatMatrix, det, eigen_multiplicity_range,
                         integer_eigen_multiplicity, inverse,
                         nullspace_basis, rank, rref)

ints = st.integers(min_value=-6, max_value=6)


def small_matrix(n, m):
    return st.lists(st.lists(ints, min_size=m, max_size=m),
                    min_size=n, max_size=n).map(RatMatrix)


def test_identity_basics():
    m = RatMatrix.identity(4)
    assert rank(m) == 4
    assert det(m) == 1
    assert nullspace_basis(m) == []


def test_det_2x2():
    assert det(RatMatrix([[1, 2], [3, 4]])) == -2
    assert det(RatMatrix([[2, 0], [0, 1]])) == 2


def test_rank_deficient():
    m = RatMatrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == 2
    ns = nullspace_basis(m)
    assert len(ns) == 1
    for row in range(3):
        assert sum(m[row, j] * ns[0][j] for j in range(3)) == 0


def test_nullspace_canonical_form():
    m = RatMatrix([[1, -1]])
    assert nullspace_basis(m) == [[Fraction(1), Fraction(1)]]


def test_rref_pivots():
    m = RatMatrix([[0, 2, 1], [0, 4, 2], [1, 0, 0]])
    rows, pivots = rref(m)
    assert pivots == [0, 1]
    assert rows[0][0] == 1 and rows[1][1] == 1


def test_inverse_roundtrip():
    m = RatMatrix([[1, 2, 0], [0, 1, 5], [2, 0, 1]])
    mi = inverse(m)
    prod = m * mi
    assert prod == RatMatrix.identity(3)


def test_inverse_rejects_singular():
    with pytest.raises(ZeroDivisionError):
        inverse(RatMatrix([[1, 1], [1, 1]]))


def test_eigen_multiplicity_path_graph():
    # path on 3 vertices: adjacency eigenvalues -sqrt(2), 0, sqrt(2)
    a = RatMatrix([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert integer_eigen_multiplicity(a, 0) == 1
    assert integer_eigen_multiplicity(a, 1) == 0
    assert eigen_multiplicity_range(a, -2, 2) == {0: 1}


def test_eigen_multiplicity_complete_graph():
    n = 5
    a = RatMatrix([[0 if i == j else 1 for j in range(n)] for i in range(n)])
    got = eigen_multiplicity_range(a, -n, n)
    assert got == {n - 1: 1, -1: n - 1}


@given(small_matrix(3, 3))
def test_rank_transpose_invariant(m):
    assert rank(m) == rank(m.transpose())


@given(small_matrix(3, 4))
def test_nullspace_orthogonal_to_rows(m):
    ns = nullspace_basis(m)
    assert len(ns) == 4 - rank(m)
    for v in ns:
        for i in range(3):
            assert sum(m[i, j] * v[j] for j in range(4)) == 0


@given(small_matrix(3, 3))
def test_det_zero_iff_rank_deficient(m):
    assert (det(m) == 0) == (rank(m) < 3)


@given(small_matrix(3, 3), small_matrix(3, 3))
def test_det_multiplicative(a, b):
    assert det(a * b) == det(a) * det(b)


@given(small_matrix(4, 4))
def test_rref_idempotent(m):
    rows, pivots = rref(m)
    if not rows:
        return
    again, pivots2 = rref(RatMatrix([list(r) for r in rows]))
    assert pivots2 == pivots
    assert [list(r) for r in again] == [list(r) for r in rows]
