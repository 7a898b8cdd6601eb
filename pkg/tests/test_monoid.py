import pytest

from matmonoid.boolmat import all_matrices
from matmonoid.gensets import devadze_generators
from matmonoid.monoid import (
    ClosureCapExceeded,
    closure,
    count_jclasses,
    count_lclasses,
    count_lclasses_bruteforce,
    greens_classes,
    is_irredundant,
)


def test_closure_words_reproduce_elements():
    gens = devadze_generators(3).generators
    res = closure(gens, track_words=True)
    for x in res.elements[::17]:
        w = res.words[x]
        y = gens[w[0]]
        for k in w[1:]:
            y = y @ gens[k]
        assert y == x


def test_cap():
    with pytest.raises(ClosureCapExceeded):
        closure(devadze_generators(3).generators, size_cap=100)


def test_irredundant_detects_duplicate():
    gens = devadze_generators(3).generators
    ok, witness = is_irredundant(gens + [gens[0] @ gens[1]])
    assert not ok and witness is not None


def test_lclass_counts_match_brute_force():
    for n in (1, 2, 3):
        assert count_lclasses(n) == count_lclasses_bruteforce(n)
    assert count_lclasses(4) == 1324


def test_greens_m2():
    res = closure(list(all_matrices(2)))
    assert len(greens_classes(res, "L")) == 7
    assert len(greens_classes(res, "R")) == 7
    # zero, rank one, the units and the non-unit rank-two class
    assert len(greens_classes(res, "J")) == 4 == count_jclasses(2)
    H = greens_classes(res, "H")
    assert sum(len(c) for c in H) == 16


def test_jclasses_m3():
    res = closure(list(all_matrices(3)))
    assert len(greens_classes(res, "J")) == count_jclasses(3) == 11
