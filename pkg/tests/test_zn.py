from math import gcd

import pytest
from hypothesis import given, strategies as st

from matmonoid import zn


@st.composite
def znmats(draw):
    n = draw(st.integers(2, 40))
    k = draw(st.integers(1, 4))
    return zn.ZnMat([[draw(st.integers(0, n - 1)) for _ in range(k)] for _ in range(k)], n)


@given(znmats())
def test_diagonal_form(A):
    D = zn.standard_diagonal_form(A)
    assert D.reconstruct() == A
    assert zn.is_unit(D.left_unit) and zn.is_unit(D.right_unit)
    assert all(d == 0 or A.n % d == 0 for d in D.diag)
    assert list(D.diag) == sorted(D.diag, key=lambda d: (d != 0, -d))


def test_diag_example():
    A = zn.ZnMat([[2, 0], [0, 4]], 6)
    assert zn.standard_diagonal_form(A).diag == (2, 2)


def test_coprime_scaler_exhaustive():
    for n in range(1, 61):
        for a in range(n):
            b = zn.coprime_scaler(a, n)
            assert gcd(b, n) == 1 or n == 1
            assert (a * b) % n == gcd(a, n) % n


@pytest.mark.parametrize("n,k,size", [(2, 2, 6), (3, 2, 48), (4, 2, 96), (6, 2, 288), (2, 3, 168)])
def test_unit_counts(n, k, size):
    assert len(zn.enumerate_units(n, k)) == size


def test_relative_rank():
    assert zn.relative_rank(1) == 0
    assert zn.relative_rank(30) == 3
    assert [g.rows[0][0] for g in zn.xp_generators(6, 2)] == [2, 3]


def test_errors():
    with pytest.raises(ValueError):
        zn.standard_diagonal_form(zn.ZnMat([[0]], 1))
    with pytest.raises(ValueError):
        zn.enumerate_units(10, 3, cap=1000)
