import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toroidal.linalg import (
    Matrix,
    integer_inverse,
    integer_kernel,
    integer_rank,
    primitive_vector,
    smith_normal_form,
)

int_entries = st.integers(min_value=-9, max_value=9)


def int_matrices(max_n=4):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.integers(min_value=1, max_value=max_n).flatmap(
            lambda m: st.lists(
                st.lists(int_entries, min_size=m, max_size=m),
                min_size=n,
                max_size=n,
            ).map(Matrix)
        )
    )


def minor_gcd(m: Matrix, k: int) -> int:
    """gcd of all k x k minors; the determinantal-divisor oracle for the SNF."""
    g = 0
    for rows in itertools.combinations(range(m.nrows), k):
        for cols in itertools.combinations(range(m.ncols), k):
            sub = Matrix([[m[i, j] for j in cols] for i in rows])
            g = math.gcd(g, abs(int(sub.det())))
    return g


def test_matmul_and_identity():
    a = Matrix([[1, 2], [3, 4]])
    assert Matrix.identity(2) @ a == a
    assert a @ (1, 1) == (3, 7)
    assert (1, 1) @ a == (4, 6)


def test_det_and_inverse():
    a = Matrix([[2, 1], [1, 1]])
    assert a.det() == 1
    assert a.inverse() @ a == Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_snf_frozen_examples():
    for rows, expect in [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[-1, 0], [-1, -2]], [1, 2]),
    ]:
        m = Matrix(rows)
        u, d, v = smith_normal_form(m)
        assert u @ m @ v == d
        assert [int(d[i, i]) for i in range(2)] == expect


def test_kernel_frozen_examples():
    k = integer_kernel(Matrix([[1, 1]]))
    assert len(k) == 1 and k[0] in ((1, -1), (-1, 1))
    k = integer_kernel(Matrix([[2, -1, 0], [0, 1, -2]]))
    assert len(k) == 1 and k[0] in ((1, 2, 1), (-1, -2, -1))


def test_integer_inverse_rejects_nonunimodular():
    assert integer_inverse(Matrix([[1, 1], [0, 1]])) == Matrix([[1, -1], [0, 1]])
    with pytest.raises(ValueError):
        integer_inverse(Matrix([[2, 0], [0, 1]]))


def test_primitive_vector():
    assert primitive_vector((2, -4, 6)) == (1, -2, 3)
    assert primitive_vector((0, 5)) == (0, 1)


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_snf_certificate_and_divisors(m):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(int(u.det())) == 1 and abs(int(v.det())) == 1
    diag = [int(d[i, i]) for i in range(min(d.nrows, d.ncols))]
    for i in range(len(diag) - 1):
        if diag[i + 1]:
            assert diag[i] != 0 or diag[i + 1] == 0
            if diag[i]:
                assert diag[i + 1] % diag[i] == 0
    # determinantal divisors pin the diagonal uniquely
    prod = 1
    for k, dk in enumerate(diag, start=1):
        g = minor_gcd(m, k)
        assert g == prod * dk or (g == 0 and dk == 0)
        prod = g if g else prod


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_kernel_is_integer_and_complete(m):
    kernel = integer_kernel(m)
    for v in kernel:
        assert all(isinstance(x, int) for x in v)
        assert all(c == 0 for c in m @ v)
    assert len(kernel) == m.ncols - integer_rank(m)


@settings(max_examples=100, deadline=None)
@given(int_matrices(max_n=3), int_matrices(max_n=3))
def test_rank_subadditive_under_product(a, b):
    if a.ncols != b.nrows:
        return
    r = integer_rank(a @ b)
    assert r <= min(integer_rank(a), integer_rank(b))
