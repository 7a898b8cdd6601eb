"""Finding the prime J-classes inside a canonical superset.

A non-unit matrix is prime or elementary exactly when its row space is
maximal among the row spaces of non-units, so both filters below discard a
candidate whose row space sits properly inside the row space of a column
permutation of another candidate (or of ``E``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .boolmat import (
    BoolMat,
    bit,
    irreducible_rows,
    is_permutation,
    perfect_matching,
    popcount,
    row_space,
    span,
)
from .canonical import ColoredDigraph, _digraph, is_elementary, permutation_table
from .gensets import E as elementary_E


def _check_candidates(Q: Sequence[BoolMat]) -> None:
    for A in Q:
        if is_permutation(A):
            raise ValueError(f"candidate set contains a permutation matrix:\n{A}")


# -- row-space filter -------------------------------------------------------


def _words(n: int) -> int:
    return max(1, (1 << n) // 64)


def permuted_row_space_masks(A: BoolMat) -> np.ndarray:
    """Row-space bitmasks of ``A`` under every column permutation.

    Shape ``(n!, W)`` of ``uint64``: bit ``v`` of the mask (word ``v // 64``)
    is set when vector ``v`` is in the row space.
    """
    n = A.n
    _, _, table = permutation_table(n)
    P = table.shape[0]
    out = np.zeros((P, _words(n)), dtype=np.uint64)
    idx = np.arange(P)
    for v in span(A.rows):
        pos = table[:, v].astype(np.int64)
        out[idx, pos >> 6] |= np.left_shift(np.uint64(1), (pos & 63).astype(np.uint64))
    return out


def row_space_words(A: BoolMat) -> np.ndarray:
    n = A.n
    out = np.zeros(_words(n), dtype=np.uint64)
    for v in span(A.rows):
        out[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    return out


@dataclass
class RowSpaceFilterResult:
    primes: list[BoolMat]
    x_size: int


def filter_by_row_spaces(Q: Iterable[BoolMat], with_stats: bool = False):
    """Keep the non-elementary candidates whose row space is maximal.

    ``X`` is the set of row spaces of all column permutations of the
    candidates and of ``E``. With ``with_stats`` the size of ``X`` is returned
    alongside the primes.
    """
    Q = list(Q)
    _check_candidates(Q)
    if not Q:
        res = RowSpaceFilterResult([], 0)
        return res if with_stats else res.primes
    n = Q[0].n
    pool = Q + [elementary_E(n)]
    X = np.unique(np.concatenate([permuted_row_space_masks(B) for B in pool]), axis=0)
    kept = []
    for A in Q:
        a = row_space_words(A)
        sup = np.all((X & a) == a, axis=1)
        proper = sup & np.any(X != a, axis=1)
        if not proper.any() and not is_elementary(A):
            kept.append(A)
    kept.sort(key=lambda M: M.rows)
    res = RowSpaceFilterResult(kept, int(X.shape[0]))
    return res if with_stats else res.primes


# -- augmented graphs and embeddings ---------------------------------------


@dataclass(frozen=True)
class AugmentedGraph:
    """Row-space order graph plus one sink vertex ``c_i`` per column.

    Vertices ``0..k-1`` are the row-space vectors in ``vectors`` order,
    vertices ``k..k+n-1`` are the column vertices. Loops ``v -> v`` are kept.
    """

    n: int
    vectors: tuple[int, ...]
    base: ColoredDigraph

    @property
    def vector_index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vectors)}

    @property
    def basis(self) -> frozenset[int]:
        return irreducible_rows(self.vectors)


def augmented_graph(A: BoolMat) -> AugmentedGraph:
    n = A.n
    vectors = tuple(row_space(A).elements)
    k = len(vectors)
    edges = []
    for i, v in enumerate(vectors):
        for j, w in enumerate(vectors):
            if v & ~w == 0:
                edges.append((i, j))
        for c in range(n):
            if v & bit(n, c):
                edges.append((i, k + c))
    colors = [0] * k + [1] * n
    return AugmentedGraph(n, vectors, _digraph(k + n, colors, edges))


def _profile(vectors: Iterable[int], n: int) -> list[int]:
    counts = [0] * (n + 1)
    for v in vectors:
        counts[popcount(v)] += 1
    return counts


def embedding_exists(K: AugmentedGraph, L: AugmentedGraph) -> bool:
    """Is there an embedding of ``K`` into ``L`` permuting the column vertices?

    Adjacency to the column vertices forces the image of ``v`` to be ``v``
    with its columns moved by the induced permutation, so the search maps
    row-space vectors by decreasing popcount, narrowing the candidate columns
    for each column, and finishes with a perfect matching. Only basis vectors
    need mapping: the rest are unions of them and the target is union closed.
    """
    if K.n != L.n:
        raise ValueError("augmented graphs of different dimensions")
    n = K.n
    if len(K.vectors) > len(L.vectors):
        return False
    pk, pl = _profile(K.vectors, n), _profile(L.vectors, n)
    if any(a > b for a, b in zip(pk, pl)):
        return False
    by_weight: dict[int, list[int]] = {}
    for w in L.vectors:
        by_weight.setdefault(popcount(w), []).append(w)
    order = sorted(K.basis, key=lambda v: (-popcount(v), v))
    full = (1 << n) - 1
    cols = [bit(n, c) for c in range(n)]

    def search(i: int, cand: list[int]) -> bool:
        if perfect_matching(cand, n) is None:
            return False
        if i == len(order):
            return True
        v = order[i]
        for w in by_weight.get(popcount(v), ()):
            nxt = [
                cand[c] & (w if v & cols[c] else full & ~w)
                for c in range(n)
            ]
            if all(nxt) and search(i + 1, nxt):
                return True
        return False

    return search(0, [full] * n)


def filter_by_embeddings(Q: Iterable[BoolMat]) -> list[BoolMat]:
    """Keep candidates whose augmented graph embeds into no other one."""
    Q = list(Q)
    _check_candidates(Q)
    if not Q:
        return []
    n = Q[0].n
    graphs = [augmented_graph(A) for A in Q]
    targets = list(zip(Q, graphs)) + [(elementary_E(n), augmented_graph(elementary_E(n)))]
    # Large targets first: they are the likeliest to absorb a candidate.
    targets.sort(key=lambda t: -len(t[1].vectors))
    kept = []
    for A, K in zip(Q, graphs):
        if is_elementary(A):
            continue
        # An embedding between equal sizes would make A and B similar.
        if any(
            B != A and len(K.vectors) < len(L.vectors) and embedding_exists(K, L)
            for B, L in targets
        ):
            continue
        kept.append(A)
    kept.sort(key=lambda M: M.rows)
    return kept


# -- prime extension and prefiltering --------------------------------------


def extend_prime(A: BoolMat) -> BoolMat:
    """Border ``A`` with a zero row and column, then put a 1 in the new corner."""
    n = A.n + 1
    return BoolMat([r << 1 for r in A.rows] + [1], n)


def prefilter(Q: Iterable[BoolMat], known: Sequence[BoolMat], keep: int = 13) -> list[BoolMat]:
    """Drop candidates whose row space lies properly inside a permuted known one.

    ``known`` should hold matrices with maximal row spaces (extended primes,
    say); only the ``keep`` with the largest row spaces are used. Primes are
    never dropped since their row spaces are maximal.
    """
    Q = list(Q)
    if not known:
        return Q
    big = sorted(known, key=lambda M: -len(row_space(M)))[:keep]
    Z = np.unique(np.concatenate([permuted_row_space_masks(B) for B in big]), axis=0)
    out = []
    for A in Q:
        a = row_space_words(A)
        proper = np.all((Z & a) == a, axis=1) & np.any(Z != a, axis=1)
        if not proper.any():
            out.append(A)
    return out


# -- J-order ---------------------------------------------------------------


def j_leq(A: BoolMat, B: BoolMat) -> bool:
    """``J_A <= J_B``: an injection of row spaces preserving containment both ways."""
    if A.n != B.n:
        raise ValueError("matrices of different dimensions")
    src = list(row_space(A).elements)
    dst = list(row_space(B).elements)
    if len(src) > len(dst):
        return False
    src.sort(key=lambda v: (popcount(v), v))
    image: list[int] = []
    used: set[int] = set()

    def leq(x: int, y: int) -> bool:
        return x & ~y == 0

    def search(i: int) -> bool:
        if i == len(src):
            return True
        v = src[i]
        for w in dst:
            if w in used:
                continue
            if all(
                leq(u, v) == leq(fu, w) and leq(v, u) == leq(w, fu)
                for u, fu in zip(src, image)
            ):
                image.append(w)
                used.add(w)
                if search(i + 1):
                    return True
                image.pop()
                used.discard(w)
        return False

    return search(0)


def prime_representatives(n: int, method: str = "rows", prefilter_with: Sequence[BoolMat] = (),
                          keep: int = 13, workers: int = 1) -> list[BoolMat]:
    """Canonical representatives of the prime J-classes of ``M_n(B)``."""
    from .breen import canonical_superset

    Q = canonical_superset(n, workers=workers)
    if prefilter_with:
        Q = prefilter(Q, prefilter_with, keep)
    if method == "rows":
        return filter_by_row_spaces(Q)
    if method == "embeddings":
        return filter_by_embeddings(Q)
    raise ValueError(f"unknown filter {method!r}")


__all__ = [
    "AugmentedGraph",
    "RowSpaceFilterResult",
    "augmented_graph",
    "embedding_exists",
    "extend_prime",
    "filter_by_embeddings",
    "filter_by_row_spaces",
    "j_leq",
    "permuted_row_space_masks",
    "prefilter",
    "prime_representatives",
]
