import pytest

from matmonoid.boolmat import BoolMat, all_matrices, is_hall
from matmonoid.gensets import (
    E,
    F,
    T,
    U,
    devadze_generators,
    elementary,
    gossip_generators,
    hall_generators,
    is_decomposable_reflexive,
    lt_generators,
    monoid_size,
    reflexive_generators,
    ut_generators,
)
from matmonoid.monoid import closure


def test_named_generators():
    assert T(3) == BoolMat.from_lists([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert U(3) == BoolMat.from_lists([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert E(3) == BoolMat.from_lists([[1, 0, 0], [1, 1, 0], [0, 0, 1]])
    assert F(3) == BoolMat.from_lists([[0, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ValueError):
        elementary(1, 1, 3)


@pytest.mark.parametrize("n,rank", [(1, 2), (2, 3), (3, 5), (4, 7), (5, 13)])
def test_full_rank(n, rank):
    assert devadze_generators(n).rank == rank


def test_certify_n3():
    for rep in (devadze_generators(3), hall_generators(3), reflexive_generators(3), ut_generators(3)):
        rep.certify()
        assert rep.certified["generates"] and rep.certified["irredundant"]


def test_hall_size_brute_force():
    assert monoid_size("hall", 3) == sum(1 for A in all_matrices(3) if is_hall(A)) == 247


def test_f_removed_loses_full():
    gens = [g for g in devadze_generators(3).generators if g != F(3)]
    assert len(closure(gens, include_identity=True)) == 247


def test_lt_is_transpose():
    assert len(closure(lt_generators(4).generators)) == 2 ** 10


def test_gossip_sizes():
    assert [monoid_size("gossip", n) for n in (2, 3, 4)] == [2, 11, 189]
    assert gossip_generators(3).rank == 3


def test_decomposable_reflexive_against_brute_force():
    from matmonoid.boolmat import is_trim

    n = 3
    I = BoolMat.identity(n)
    refl = [A for A in all_matrices(n) if A.contains(I)]
    for A in refl:
        if is_trim(A) and A != I:
            brute = any(B @ C == A for B in refl for C in refl if I not in (B, C) and A not in (B, C))
            assert is_decomposable_reflexive(A) == brute
    with pytest.raises(ValueError):
        is_decomposable_reflexive(F(3))
