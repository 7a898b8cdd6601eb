"""Closures of finite generating sets and the Green's structure of the result.

Elements only need ``@``, equality and hashing, so boolean, tropical and
``Z_n`` matrices all go through the same code.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .boolmat import BoolMat, all_matrices, row_basis

DEFAULT_CAP = 5 * 10**7


class ClosureCapExceeded(RuntimeError):
    """The closure grew past ``size_cap``."""


def identity_of(x: Any):
    if hasattr(x, "identity_like"):
        return x.identity_like()
    if isinstance(x, BoolMat):
        return BoolMat.identity(x.n)
    raise TypeError(f"no identity known for {type(x).__name__}")


@dataclass
class ClosureResult:
    generators: list
    elements: list
    index: dict = field(repr=False)
    words: dict | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __len__(self) -> int:
        return len(self.elements)


def closure(gens: Sequence, size_cap: int = DEFAULT_CAP, mul: Callable | None = None,
            track_words: bool = False, include_identity: bool = False,
            identity=None) -> ClosureResult:
    """Breadth-first closure of ``gens`` under right multiplication by generators.

    Every product ``g1 g2 ... gk`` is reached from ``g1`` by right multiplying,
    so this is the semigroup generated; ``include_identity`` adds the identity
    (the monoid generated). Words, if tracked, are shortest in generator count.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator")
    mul = mul or operator.matmul
    elements: list = []
    index: dict = {}
    words: dict | None = {} if track_words else None

    def add(x, word) -> bool:
        if x in index:
            return False
        if len(elements) >= size_cap:
            raise ClosureCapExceeded(f"closure exceeded {size_cap} elements")
        index[x] = len(elements)
        elements.append(x)
        if words is not None:
            words[x] = word
        return True

    if include_identity:
        add(identity if identity is not None else identity_of(gens[0]), ())
    frontier = []
    for k, g in enumerate(gens):
        if add(g, (k,)):
            frontier.append(g)
    while frontier:
        nxt = []
        for x in frontier:
            wx = words[x] if words is not None else None
            for k, g in enumerate(gens):
                y = mul(x, g)
                if add(y, wx + (k,) if wx is not None else None):
                    nxt.append(y)
        frontier = nxt
    return ClosureResult(gens, elements, index, words)


def is_irredundant(gens: Sequence, size_cap: int = DEFAULT_CAP, include_identity: bool = False,
                   mul: Callable | None = None):
    """``(True, None)`` if no generator lies in the closure of the others.

    Otherwise ``(False, x)`` with ``x`` the first redundant generator found.
    """
    gens = list(gens)
    for k, x in enumerate(gens):
        rest = gens[:k] + gens[k + 1:]
        if not rest:
            continue
        if x in rest:
            return False, x
        ident = identity_of(x) if include_identity else None
        if include_identity and x == ident:
            return False, x
        if x in closure(rest, size_cap, mul=mul, include_identity=include_identity, identity=ident):
            return False, x
    return True, None


# -- Green's relations ------------------------------------------------------


def _cayley(result: ClosureResult, side: str, mul: Callable | None = None) -> csr_matrix:
    mul = mul or operator.matmul
    src, dst = [], []
    for i, x in enumerate(result.elements):
        for g in result.generators:
            y = mul(x, g) if side == "right" else mul(g, x)
            src.append(i)
            dst.append(result.index[y])
    N = len(result.elements)
    return csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N))


def green_labels(result: ClosureResult, relation: str, mul: Callable | None = None) -> np.ndarray:
    """Class label of each element for ``L``, ``R``, ``J`` or ``H``.

    ``x R y`` iff each is reachable from the other by right multiplication,
    ``L`` dually, and ``J`` uses both kinds of edge. The identity, when it is
    not in the closure, plays no role: reachability already allows empty paths.
    """
    relation = relation.upper()
    if relation == "H":
        lab_l = green_labels(result, "L", mul)
        lab_r = green_labels(result, "R", mul)
        pairs = {}
        return np.array([pairs.setdefault((a, b), len(pairs)) for a, b in zip(lab_l, lab_r)])
    if relation == "R":
        G = _cayley(result, "right", mul)
    elif relation == "L":
        G = _cayley(result, "left", mul)
    elif relation == "J":
        G = _cayley(result, "right", mul) + _cayley(result, "left", mul)
    else:
        raise ValueError(f"unknown relation {relation!r}")
    _, labels = connected_components(G, directed=True, connection="strong")
    return labels


def greens_classes(result: ClosureResult, relation: str, mul: Callable | None = None) -> list[list]:
    labels = green_labels(result, relation, mul)
    classes: dict[int, list] = {}
    for x, lab in zip(result.elements, labels):
        classes.setdefault(int(lab), []).append(x)
    return list(classes.values())


def ideal_leq(result: ClosureResult, x, y, mul: Callable | None = None) -> bool:
    """``S^1 x S^1`` is contained in ``S^1 y S^1`` (``x`` reachable from ``y``)."""
    from scipy.sparse.csgraph import breadth_first_order

    G = _cayley(result, "right", mul) + _cayley(result, "left", mul)
    order = breadth_first_order(G, result.index[y], directed=True, return_predecessors=False)
    return result.index[x] in set(order.tolist())


# -- L-classes of M_n(B) -----------------------------------------------------


def _independent_sets(n: int, limit: int) -> Iterable[tuple[int, ...]]:
    """Union-independent sets of non-zero vectors of size at most ``limit``.

    Built in increasing order of vectors; a set stays independent when the
    new (largest) vector is not a union of members it contains, and it cannot
    itself help build a smaller member.
    """
    stack: list[tuple[int, ...]] = [()]
    top = 1 << n
    while stack:
        S = stack.pop()
        yield S
        if len(S) == limit:
            continue
        start = S[-1] + 1 if S else 1
        for v in range(start, top):
            below = 0
            for w in S:
                if w & ~v == 0:
                    below |= w
            if below != v:
                stack.append(S + (v,))


def count_lclasses(n: int) -> int:
    """Number of L-classes of ``M_n(B)``: distinct row bases of size ``<= n``.

    A row space is determined by its basis, and any union-independent set of
    at most ``n`` vectors is the basis of the matrix having it as rows.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return sum(1 for _ in _independent_sets(n, n))


def count_lclasses_bruteforce(n: int) -> int:
    """Distinct row bases over all of ``M_n(B)``; ``n <= 4``."""
    return len({row_basis(A) for A in all_matrices(n)})


def count_jclasses(n: int) -> int:
    """J-classes of ``M_n(B)`` via canonical forms of the Breen-form matrices."""
    from .breen import enumerate_breen
    from .canonical import canonical_similarity

    return len({canonical_similarity(A) for A in enumerate_breen(n)})


__all__ = [
    "ClosureCapExceeded",
    "ClosureResult",
    "closure",
    "count_jclasses",
    "count_lclasses",
    "count_lclasses_bruteforce",
    "green_labels",
    "greens_classes",
    "ideal_leq",
    "identity_of",
    "is_irredundant",
]
