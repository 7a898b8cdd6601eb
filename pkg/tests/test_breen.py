from matmonoid.boolmat import BoolMat, is_trim
from matmonoid.breen import (
    canonical_superset,
    canonical_trim_breen,
    enumerate_breen,
    enumerate_reflexive_breen,
    enumerate_trim_breen,
    is_breen_form,
    is_reflexive,
)
from matmonoid.canonical import canonical_similarity


def test_enumeration_outputs_breen_forms():
    for n in range(1, 5):
        for A in enumerate_breen(n):
            assert A == BoolMat.zero(n) or is_breen_form(A)


def test_trim_subset():
    for n in range(1, 5):
        trim = set(enumerate_trim_breen(n))
        assert trim <= set(enumerate_breen(n))
        assert all(is_trim(A) for A in trim)


def test_zero_listed_first():
    assert next(enumerate_breen(3)) == BoolMat.zero(3)
    assert next(enumerate_trim_breen(3)) == BoolMat.zero(3)


def test_no_duplicates():
    for n in range(1, 5):
        out = list(enumerate_breen(n))
        assert len(out) == len(set(out))


def test_small_counts():
    assert [sum(1 for _ in enumerate_breen(n)) for n in (1, 2, 3)] == [2, 4, 13]
    assert [sum(1 for _ in enumerate_trim_breen(n)) for n in (1, 2, 3)] == [2, 3, 5]


def test_canonical_counts():
    assert [len(canonical_trim_breen(n)) for n in range(1, 6)] == [2, 3, 5, 10, 32]


def test_superset_drops_permutations():
    for n in (3, 4):
        sup = {A.rows for A in canonical_superset(n)}
        full = {canonical_similarity(A).rows for A in enumerate_trim_breen(n)}
        assert len(full - sup) == 1


def test_reflexive_enumeration_is_reflexive():
    for n in (2, 3):
        assert all(is_reflexive(A) for A in enumerate_reflexive_breen(n))
