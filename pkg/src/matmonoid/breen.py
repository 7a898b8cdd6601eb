"""Backtracking enumeration of matrices in Breen form.

Every J-class of ``M_n(B)`` contains a matrix in Breen form, and every prime
matrix is trim, so the trim matrices in Breen form contain a representative
of every prime J-class. Nodes are ``m x n`` matrices built by appending rows
in increasing numeric order; every node is trim and in quasi-Breen form (all
Breen conditions except the two column ones, which are tested at leaves).
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .boolmat import (
    BoolMat,
    _rows_reduced,
    _rows_trim,
    bit,
    is_permutation,
    is_reduced,
    popcount,
)
from .canonical import canonical_similarity, conjugation_orbit, canonical_conjugation


def _columns(rows: tuple[int, ...], n: int) -> list[int]:
    cols = []
    for j in range(n):
        m = bit(n, j)
        c = 0
        for r in rows:
            c = (c << 1) | (1 if r & m else 0)
        cols.append(c)
    return cols


def _is_right_justified(x: int) -> bool:
    return x != 0 and x & (x + 1) == 0


def is_breen_form(A: BoolMat) -> bool:
    """All seven Breen conditions, with columns read top row first."""
    n = A.n
    rows = A.rows
    cols = _columns(rows, n)
    if not is_reduced(A):
        return False
    nz_rows = [r for r in rows if r]
    nz_cols = [c for c in cols if c]
    # zero rows on top, zero columns on the left
    if any(rows[i] for i in range(n - len(nz_rows))):
        return False
    if any(cols[j] for j in range(n - len(nz_cols))):
        return False
    if any(a >= b for a, b in zip(nz_rows, nz_rows[1:])):
        return False
    if any(a >= b for a, b in zip(nz_cols, nz_cols[1:])):
        return False
    if not nz_rows:
        return True
    if not _is_right_justified(nz_rows[0]) or not _is_right_justified(nz_cols[0]):
        return False
    k = popcount(nz_rows[0])
    return all(popcount(r) >= k for r in nz_rows)


class BreenNode(NamedTuple):
    rows: tuple[int, ...]
    first_nonzero: int


def _root_nodes(n: int) -> list[BreenNode]:
    roots = []
    for m in range(1, n + 1):
        for ones in range(1, n + 1):
            roots.append(BreenNode((0,) * (m - 1) + ((1 << ones) - 1,), m - 1))
    return roots


def _equal_column_groups(rows: tuple[int, ...], n: int) -> list[int]:
    """Masks of maximal runs of equal adjacent columns (length >= 2)."""
    cols = _columns(rows, n)
    groups = []
    start = 0
    for j in range(1, n + 1):
        if j == n or cols[j] != cols[start]:
            if j - start >= 2:
                groups.append(sum(bit(n, c) for c in range(start, j)))
            start = j
    return groups


def _respects_equal_columns(x: int, groups: list[int]) -> bool:
    # Within a run of equal columns the new row must look like 0..01..1.
    for g in groups:
        part = (x & g) // (g & -g)
        if part & (part + 1):
            return False
    return True


def _children(node: BreenNode, n: int, trim: bool) -> Iterator[BreenNode]:
    rows = node.rows
    nonzero = [r for r in rows if r]
    k = popcount(rows[node.first_nonzero])
    groups = _equal_column_groups(rows, n)
    for x in range(rows[-1] + 1, 1 << n):
        if trim and any(r & ~x == 0 for r in nonzero):
            continue
        if popcount(x) < k:
            continue
        if not _respects_equal_columns(x, groups):
            continue
        yield BreenNode(rows + (x,), node.first_nonzero)


def _walk(n: int, roots, trim: bool) -> Iterator[BoolMat]:
    for root in roots:
        stack = [root]
        while stack:
            node = stack.pop()
            if len(node.rows) == n:
                cols = _columns(node.rows, n)
                nz = [c for c in cols if c]
                if any(a >= b for a, b in zip(nz, nz[1:])):
                    continue
                if trim:
                    if not (_rows_reduced(cols) and _rows_trim(cols)):
                        continue
                    yield BoolMat(node.rows, n)
                else:
                    A = BoolMat(node.rows, n)
                    if is_breen_form(A):
                        yield A
                continue
            # reversed so that children are visited in ascending order
            stack.extend(reversed(list(_children(node, n, trim))))


def enumerate_trim_breen(n: int) -> Iterator[BoolMat]:
    """Every trim matrix of ``M_n(B)`` in Breen form, depth first.

    The zero matrix comes first; the backtracking roots never produce it.
    """
    if n < 1:
        raise ValueError("n must be positive")
    yield BoolMat.zero(n)
    yield from _walk(n, _root_nodes(n), trim=True)


def enumerate_breen(n: int) -> Iterator[BoolMat]:
    """Every matrix of ``M_n(B)`` in Breen form, trim or not (unpruned variant)."""
    if n < 1:
        raise ValueError("n must be positive")
    yield BoolMat.zero(n)
    yield from _walk(n, _root_nodes(n), trim=False)


def _subtree_keys(args) -> set[tuple[int, ...]]:
    n, root = args
    return {canonical_similarity(A).rows for A in _walk(n, [root], trim=True)}


def canonical_superset(n: int, workers: int = 1) -> list[BoolMat]:
    """Canonical forms of trim Breen matrices, permutation matrices removed.

    Root subtrees are independent; with ``workers > 1`` they are farmed out to
    a process pool and the key sets merged, which does not change the result.
    """
    keys: set[tuple[int, ...]] = {BoolMat.zero(n).rows}
    jobs = [(n, root) for root in _root_nodes(n)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_subtree_keys, jobs):
                keys |= part
    else:
        for job in jobs:
            keys |= _subtree_keys(job)
    mats = [BoolMat(k, n) for k in sorted(keys)]
    return [A for A in mats if not is_permutation(A)]


def canonical_trim_breen(n: int) -> list[BoolMat]:
    """Distinct canonical forms of all trim Breen matrices (permutations kept)."""
    return sorted({canonical_similarity(A) for A in enumerate_trim_breen(n)}, key=lambda A: A.rows)


# -- reflexive Breen form ---------------------------------------------------


def is_reflexive(A: BoolMat) -> bool:
    return all(A.rows[i] & bit(A.n, i) for i in range(A.n))


def is_reflexive_breen_form(A: BoolMat) -> bool:
    n = A.n
    first = A.rows[0]
    k = popcount(first)
    if first != ((1 << k) - 1) << (n - k):
        return False
    if any(popcount(r) < k for r in A.rows):
        return False
    seen = 0
    for r in A.rows:
        seen |= r
        if not _is_prefix(seen, n):
            return False
    return True


def _is_prefix(mask: int, n: int) -> bool:
    """True iff the set columns of ``mask`` are ``0..m`` for some ``m``."""
    k = popcount(mask)
    return mask == ((1 << k) - 1) << (n - k)


def enumerate_reflexive_breen(n: int) -> Iterator[BoolMat]:
    """Trim reflexive matrices in reflexive Breen form.

    Rows are chosen top to bottom. Row ``i`` contains column ``i``; the union
    of the first ``i + 1`` rows is an initial segment of columns; no row has
    fewer ones than the first; rows are pairwise incomparable. Column trimness
    is tested at the leaves.
    """
    if n < 1:
        raise ValueError("n must be positive")
    full = (1 << n) - 1
    stack: list[tuple[int, ...]] = []
    for k in range(n, 0, -1):
        stack.append((((1 << k) - 1) << (n - k),))
    while stack:
        rows = stack.pop()
        m = len(rows)
        if m == n:
            cols = _columns(rows, n)
            if _rows_trim(cols):
                yield BoolMat(rows, n)
            continue
        k = popcount(rows[0])
        seen = 0
        for r in rows:
            seen |= r
        diag = bit(n, m)
        children = []
        for x in range(1, full + 1):
            if not x & diag or popcount(x) < k:
                continue
            if not _is_prefix(seen | x, n):
                continue
            if any(r & ~x == 0 or x & ~r == 0 for r in rows):
                continue
            children.append(rows + (x,))
        stack.extend(reversed(children))


def reflexive_representatives(n: int) -> list[BoolMat]:
    """Conjugation-canonical forms of the trim reflexive Breen matrices."""
    reps = {canonical_conjugation(A) for A in enumerate_reflexive_breen(n)}
    return sorted(reps, key=lambda A: A.rows)


__all__ = [
    "BreenNode",
    "canonical_superset",
    "canonical_trim_breen",
    "conjugation_orbit",
    "enumerate_breen",
    "enumerate_reflexive_breen",
    "enumerate_trim_breen",
    "is_breen_form",
    "is_reflexive",
    "is_reflexive_breen_form",
    "reflexive_representatives",
]
