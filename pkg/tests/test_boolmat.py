from hypothesis import given, strategies as st

from matmonoid.boolmat import (
    BoolMat,
    all_matrices,
    bit,
    column_space,
    core,
    deficiency,
    greedy_left_multiplier,
    greedy_right_multiplier,
    irreducible_rows,
    is_hall,
    is_permutation,
    is_reduced,
    is_trim,
    perfect_matching,
    row_basis,
    row_space,
    span,
    transpose,
)


@st.composite
def mats(draw, lo=1, hi=6):
    n = draw(st.integers(lo, hi))
    return BoolMat([draw(st.integers(0, (1 << n) - 1)) for _ in range(n)], n)


@st.composite
def pairs(draw):
    n = draw(st.integers(1, 6))
    row = st.integers(0, (1 << n) - 1)
    return (BoolMat([draw(row) for _ in range(n)], n), BoolMat([draw(row) for _ in range(n)], n))


def naive_mul(A, B):
    a, b, n = A.to_lists(), B.to_lists(), A.n
    return BoolMat.from_lists([[int(any(a[i][k] and b[k][j] for k in range(n))) for j in range(n)]
                               for i in range(n)])


def test_bit_order_leftmost_is_high():
    A = BoolMat.from_lists([[1, 0, 0], [0, 0, 1], [0, 1, 1]])
    assert A.rows == (4, 1, 3)
    assert bit(3, 0) == 4
    assert A.to_bitstring() == "100001011"
    assert BoolMat.from_bitstring("100001011") == A


@given(pairs())
def test_product_matches_definition(p):
    A, B = p
    assert A @ B == naive_mul(A, B)


@given(mats())
def test_transpose_involution(A):
    assert transpose(transpose(A)) == A
    assert set(column_space(A)) == set(row_space(A.T))


@given(pairs())
def test_product_row_space_inside_right_factor(p):
    A, B = p
    assert set(row_space(A @ B)) <= set(row_space(B))


@given(pairs())
def test_greedy_multipliers(p):
    A, B = p
    C = greedy_left_multiplier(A, B)
    assert (C @ B == A) == (set(row_space(A)) <= set(row_space(B)))
    D = greedy_right_multiplier(A, B)
    assert (B @ D == A) == (set(column_space(A)) <= set(column_space(B)))


@given(mats())
def test_basis_spans_row_space(A):
    basis = row_basis(A)
    assert set(span(basis)) == set(row_space(A))
    assert basis == irreducible_rows(A.rows)
    for v in basis:
        assert v not in span(basis - {v})


def test_row_space_includes_zero():
    assert 0 in row_space(BoolMat.zero(3))
    assert len(row_space(BoolMat.identity(3))) == 8


def test_trim_implies_reduced_small():
    for n in range(1, 4):
        for A in all_matrices(n):
            if is_trim(A):
                assert is_reduced(A)


def test_hall_and_matching():
    assert is_hall(BoolMat.identity(4))
    assert not is_hall(BoolMat.from_lists([[0, 1, 1], [0, 1, 0], [0, 1, 0]]))
    A = BoolMat.from_lists([[0, 1, 1], [1, 0, 0], [0, 1, 0]])
    m = perfect_matching(A.rows, 3)
    assert m is not None and sorted(m) == [0, 1, 2]


@given(mats(1, 5))
def test_hall_iff_contains_permutation(A):
    from itertools import permutations

    brute = any(A.contains(BoolMat.permutation(p)) for p in permutations(range(A.n)))
    assert is_hall(A) == brute


def test_core_and_deficiency():
    A = BoolMat.from_lists([[1, 1, 0], [1, 1, 0], [0, 0, 1]])
    assert core(A) == (6, 6)
    assert deficiency(BoolMat.identity(3)) == 0


def test_permutation_detection():
    assert is_permutation(BoolMat.permutation([2, 0, 1]))
    assert not is_permutation(BoolMat.zero(2))
    assert sum(1 for A in all_matrices(3) if is_permutation(A)) == 6
