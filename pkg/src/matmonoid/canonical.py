"""Canonical forms for similarity and conjugation classes of boolean matrices.

The canonical image of a matrix is the lexicographically least row-major bit
string over its orbit. For similarity (independent row and column
permutations) the least image for a fixed column permutation is obtained by
sorting the rows, so only the ``n!`` column permutations are searched; the
search is vectorised over a table of permuted row values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .boolmat import BoolMat, bit, is_reduced, popcount

MAX_CANONICAL_DIM = 8


@lru_cache(maxsize=None)
def permutation_table(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(perms, inverse, table)`` for all column permutations of length ``n``.

    ``table[p, v]`` is vector ``v`` with column ``j`` moved to ``perms[p, j]``.
    """
    if not 1 <= n <= MAX_CANONICAL_DIM:
        raise ValueError(f"canonical forms support 1 <= n <= {MAX_CANONICAL_DIM}")
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    inverse = np.argsort(perms, axis=1)
    values = np.arange(1 << n, dtype=np.int64)
    table = np.zeros((len(perms), 1 << n), dtype=np.int64)
    for j in range(n):
        bits = (values >> (n - 1 - j)) & 1
        table |= bits[None, :] << (n - 1 - perms[:, j])[:, None]
    dtype = np.uint8 if n <= 8 else np.uint16
    return perms, inverse, table.astype(dtype)


def _pack(rows: np.ndarray, n: int) -> np.ndarray:
    """Row-major integer keys (as ``uint64``) for an array of row tuples."""
    key = np.zeros(rows.shape[0], dtype=np.uint64)
    shift = np.uint64(n)
    for i in range(rows.shape[1]):
        key = (key << shift) | rows[:, i].astype(np.uint64)
    return key


def _min_similarity_image(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    _, _, table = permutation_table(n)
    images = np.sort(table[:, list(rows)], axis=1)
    best = int(np.argmin(_pack(images, n)))
    return tuple(int(x) for x in images[best])


def canonical_similarity(A: BoolMat) -> BoolMat:
    """Least image of a reduced matrix under independent row/column permutations.

    For reduced ``A`` and ``B`` the outputs agree exactly when ``A`` and ``B``
    are J-related in the full boolean matrix monoid.
    """
    if not is_reduced(A):
        raise ValueError("canonical_similarity requires a reduced matrix")
    return BoolMat(_min_similarity_image(A.rows, A.n), A.n)


def similarity_image(A: BoolMat) -> BoolMat:
    """Least similarity image without the reducedness check."""
    return BoolMat(_min_similarity_image(A.rows, A.n), A.n)


def canonical_conjugation(A: BoolMat) -> BoolMat:
    """Least image of ``A`` under ``A -> P^-1 A P`` over permutation matrices ``P``."""
    n = A.n
    _, inverse, table = permutation_table(n)
    images = table[:, list(A.rows)]
    # Row i of A moves to row perms[p, i]; gather the new row order.
    images = np.take_along_axis(images, inverse, axis=1)
    best = int(np.argmin(_pack(images, n)))
    return BoolMat((int(x) for x in images[best]), n)


def conjugate(A: BoolMat, perm) -> BoolMat:
    """``P^-1 A P`` where row/column ``i`` of ``A`` moves to ``perm[i]``."""
    n = A.n
    out = [0] * n
    for i, r in enumerate(A.rows):
        img = 0
        for j in range(n):
            if r & bit(n, j):
                img |= bit(n, perm[j])
        out[perm[i]] = img
    return BoolMat(out, n)


def permute(A: BoolMat, row_perm, col_perm) -> BoolMat:
    """Move row ``i`` to ``row_perm[i]`` and column ``j`` to ``col_perm[j]``."""
    n = A.n
    out = [0] * n
    for i, r in enumerate(A.rows):
        img = 0
        for j in range(n):
            if r & bit(n, j):
                img |= bit(n, col_perm[j])
        out[row_perm[i]] = img
    return BoolMat(out, n)


def conjugation_orbit(A: BoolMat) -> set[BoolMat]:
    return {conjugate(A, p) for p in permutations(range(A.n))}


def canonical_key(A: BoolMat) -> bytes:
    """Stable byte serialization: dimension byte, then the row-major bits.

    Bits are packed big-endian within bytes and the final byte is padded
    with zeros on the right.
    """
    n = A.n
    total = n * n
    value = 0
    for r in A.rows:
        value = (value << n) | r
    nbytes = (total + 7) // 8
    value <<= nbytes * 8 - total
    return bytes([n]) + value.to_bytes(nbytes, "big")


def from_canonical_key(key: bytes) -> BoolMat:
    n = key[0]
    total = n * n
    nbytes = (total + 7) // 8
    value = int.from_bytes(key[1:1 + nbytes], "big") >> (nbytes * 8 - total)
    mask = (1 << n) - 1
    rows = [(value >> (n * (n - 1 - i))) & mask for i in range(n)]
    return BoolMat(rows, n)


# -- coloured graphs (test oracles) -----------------------------------------


@dataclass(frozen=True)
class ColoredDigraph:
    vertex_count: int
    colors: tuple[int, ...]
    adjacency: tuple[int, ...]  # adjacency[v] has bit w set iff there is an edge v -> w

    def __post_init__(self):
        if len(self.colors) != self.vertex_count or len(self.adjacency) != self.vertex_count:
            raise ValueError("colour and adjacency arrays must match the vertex count")

    def has_edge(self, v: int, w: int) -> bool:
        return bool(self.adjacency[v] >> w & 1)

    def edges(self) -> set[tuple[int, int]]:
        return {
            (v, w)
            for v in range(self.vertex_count)
            for w in range(self.vertex_count)
            if self.has_edge(v, w)
        }


def _digraph(count: int, colors, edges) -> ColoredDigraph:
    adj = [0] * count
    for v, w in edges:
        adj[v] |= 1 << w
    return ColoredDigraph(count, tuple(colors), tuple(adj))


def bipartite_graph(A: BoolMat) -> ColoredDigraph:
    """Rows are vertices ``0..n-1`` (colour 0), columns ``n..2n-1`` (colour 1)."""
    n = A.n
    edges = [(i, n + j) for i in range(n) for j in range(n) if A[i, j]]
    return _digraph(2 * n, [0] * n + [1] * n, edges)


def tripartite_graph(A: BoolMat) -> ColoredDigraph:
    """The bipartite graph plus vertices ``2n + i`` joined to row ``i`` and column ``i``."""
    n = A.n
    if any(not A[i, i] for i in range(n)):
        raise ValueError("tripartite_graph requires a reflexive matrix")
    edges = [(i, n + j) for i in range(n) for j in range(n) if A[i, j]]
    edges += [(2 * n + i, i) for i in range(n)] + [(2 * n + i, n + i) for i in range(n)]
    return _digraph(3 * n, [0] * n + [1] * n + [2] * n, edges)


def colored_isomorphic(G: ColoredDigraph, H: ColoredDigraph) -> bool:
    """Brute-force colour-preserving isomorphism test; small graphs only."""
    if G.vertex_count != H.vertex_count or sorted(G.colors) != sorted(H.colors):
        return False
    if len(G.edges()) != len(H.edges()):
        return False
    classes = sorted(set(G.colors))
    g_parts = [[v for v in range(G.vertex_count) if G.colors[v] == c] for c in classes]
    h_parts = [[v for v in range(H.vertex_count) if H.colors[v] == c] for c in classes]
    h_edges = H.edges()
    for choice in product(*(permutations(p) for p in h_parts)):
        phi = {}
        for src, dst in zip(g_parts, choice):
            phi.update(zip(src, dst))
        if all((phi[v], phi[w]) in h_edges for v, w in G.edges()):
            return True
    return False


def is_elementary(A: BoolMat) -> bool:
    """True iff ``A`` is a permutation of rows of some ``E^{i,j}``, i.e. similar to ``E``."""
    if A.ones() != A.n + 1 or A.n < 2:
        return False
    heavy = [r for r in A.rows if popcount(r) == 2]
    light = [r for r in A.rows if popcount(r) == 1]
    if len(heavy) != 1 or len(light) != A.n - 1 or len(set(light)) != A.n - 1:
        return False
    # The heavy row covers the one missing column and one of the light ones.
    return (heavy[0] | sum(light)) == (1 << A.n) - 1
