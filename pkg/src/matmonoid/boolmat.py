"""Boolean matrices with rows packed into machine integers.

Row ``i`` of an ``n x n`` matrix is an int whose bit ``n - 1 - j`` holds the
entry in column ``j``, so the leftmost column is the most significant bit and
comparing rows as ints is comparing them as binary numbers read left to right.
Indices are 0-based throughout.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, product
from operator import or_
from typing import Iterable, Iterator, Sequence

MAX_DIM = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def bit(n: int, j: int) -> int:
    """Mask of column ``j`` in a row of length ``n``."""
    return 1 << (n - 1 - j)


def num(v: Sequence[int]) -> int:
    """The integer whose binary digits, most significant first, are ``v``."""
    x = 0
    for b in v:
        if b not in (0, 1):
            raise ValueError(f"not a boolean entry: {b!r}")
        x = (x << 1) | b
    return x


def vec(x: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`num` for vectors of length ``n``."""
    if not 0 <= x < (1 << n):
        raise ValueError(f"{x} is out of range for vectors of length {n}")
    return tuple((x >> (n - 1 - j)) & 1 for j in range(n))


def vec_contains(v: int, w: int) -> bool:
    """True if ``w`` is contained in ``v`` (every 1 of ``w`` is a 1 of ``v``)."""
    return w & ~v == 0


def union(vectors: Iterable[int]) -> int:
    return reduce(or_, vectors, 0)


class BoolMat:
    """An immutable square boolean matrix."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, rows: Iterable[int], n: int | None = None):
        rows = tuple(rows)
        if n is None:
            n = len(rows)
        if not 1 <= n <= MAX_DIM:
            raise ValueError(f"dimension must be in [1, {MAX_DIM}], got {n}")
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        limit = 1 << n
        for r in rows:
            if not 0 <= r < limit:
                raise ValueError(f"row {r} does not fit in {n} columns")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((n, rows)))

    def __setattr__(self, name, value):
        raise AttributeError("BoolMat is immutable")

    def __reduce__(self):
        return (BoolMat, (self.rows, self.n))

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BoolMat":
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
        return cls((num(row) for row in entries), n)

    @classmethod
    def from_bitstring(cls, s: str) -> "BoolMat":
        """Parse a row-major bit string such as ``"0111"``."""
        s = s.strip()
        n = round(len(s) ** 0.5)
        if n * n != len(s) or n == 0 or set(s) - {"0", "1"}:
            raise ValueError(f"not a square row-major bit string: {s!r}")
        return cls((int(s[i * n:(i + 1) * n], 2) for i in range(n)), n)

    @classmethod
    def from_text(cls, text: str) -> "BoolMat":
        """Parse ``n`` lines of ``n`` characters from ``{0, 1}``."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        n = len(lines)
        if n == 0 or any(len(ln) != n or set(ln) - {"0", "1"} for ln in lines):
            raise ValueError("expected n lines of n characters from {0,1}")
        return cls((int(ln, 2) for ln in lines), n)

    @classmethod
    def identity(cls, n: int) -> "BoolMat":
        return cls((bit(n, i) for i in range(n)), n)

    @classmethod
    def zero(cls, n: int) -> "BoolMat":
        return cls((0,) * n, n)

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "BoolMat":
        """Matrix with a 1 in position ``(i, perm[i])`` for each row ``i``."""
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation: {perm}")
        return cls((bit(n, p) for p in perm), n)

    # -- serialization ----------------------------------------------------

    def to_bitstring(self) -> str:
        return "".join(format(r, f"0{self.n}b") for r in self.rows)

    def to_text(self) -> str:
        return "\n".join(format(r, f"0{self.n}b") for r in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(vec(r, self.n)) for r in self.rows]

    def __repr__(self) -> str:
        return f"BoolMat.from_bitstring({self.to_bitstring()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- value semantics --------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoolMat):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> (self.n - 1 - j)) & 1

    def __matmul__(self, other: "BoolMat") -> "BoolMat":
        return mat_mul(self, other)

    @property
    def T(self) -> "BoolMat":
        return transpose(self)

    def columns(self) -> tuple[int, ...]:
        """Columns as ints with the top row as the most significant bit."""
        return transpose(self).rows

    def ones(self) -> int:
        return sum(popcount(r) for r in self.rows)

    def contains(self, other: "BoolMat") -> bool:
        return contains(self, other)


def _check_dims(A: BoolMat, B: BoolMat) -> None:
    if A.n != B.n:
        raise ValueError(f"dimension mismatch: {A.n} vs {B.n}")


def mat_mul(A: BoolMat, B: BoolMat) -> BoolMat:
    """Boolean product: row ``i`` is the union of rows ``B[k]`` with ``A[i,k] = 1``."""
    _check_dims(A, B)
    n = A.n
    brows = B.rows
    top = n - 1
    out = []
    for r in A.rows:
        acc = 0
        while r:
            b = r.bit_length() - 1
            acc |= brows[top - b]
            r ^= 1 << b
        out.append(acc)
    return BoolMat(out, n)


def transpose(A: BoolMat) -> BoolMat:
    n = A.n
    cols = []
    for j in range(n):
        m = bit(n, j)
        c = 0
        for r in A.rows:
            c = (c << 1) | (1 if r & m else 0)
        cols.append(c)
    return BoolMat(cols, n)


def contains(A: BoolMat, B: BoolMat) -> bool:
    """True if ``B`` is contained in ``A``: ``B[i,j] = 1`` implies ``A[i,j] = 1``."""
    _check_dims(A, B)
    return all(b & ~a == 0 for a, b in zip(A.rows, B.rows))


# -- row spaces -------------------------------------------------------------


def span(vectors: Iterable[int]) -> list[int]:
    """All unions of subsets of ``vectors`` (including the empty union), sorted."""
    elems = {0}
    for v in vectors:
        if v not in elems:
            elems |= {e | v for e in elems}
    return sorted(elems)


def irreducible_rows(vectors: Iterable[int]) -> frozenset[int]:
    """Non-zero vectors that are not a union of the other (distinct) vectors."""
    vs = set(vectors) - {0}
    out = set()
    for v in vs:
        below = union(w for w in vs if w != v and w & ~v == 0)
        if below != v:
            out.add(v)
    return frozenset(out)


@dataclass(frozen=True)
class RowSpace:
    """A union-closed set of boolean vectors together with its unique basis."""

    n: int
    elements: tuple[int, ...]
    basis: frozenset[int]

    @classmethod
    def spanned_by(cls, vectors: Iterable[int], n: int) -> "RowSpace":
        vectors = list(vectors)
        return cls(n, tuple(span(vectors)), irreducible_rows(vectors))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, v: int) -> bool:
        i = bisect.bisect_left(self.elements, v)
        return i < len(self.elements) and self.elements[i] == v

    def issubset(self, other: "RowSpace") -> bool:
        return len(self) <= len(other) and all(v in other for v in self.elements)

    def mask(self) -> int:
        """Bitmask over ``range(2**n)`` with bit ``v`` set for each element ``v``."""
        m = 0
        for v in self.elements:
            m |= 1 << v
        return m


def row_space(A: BoolMat) -> RowSpace:
    return RowSpace.spanned_by(A.rows, A.n)


def column_space(A: BoolMat) -> RowSpace:
    return row_space(transpose(A))


def row_basis(A: BoolMat) -> frozenset[int]:
    return irreducible_rows(A.rows)


def column_basis(A: BoolMat) -> frozenset[int]:
    return irreducible_rows(transpose(A).rows)


def row_space_mask(rows: Iterable[int]) -> int:
    m = 0
    for v in span(rows):
        m |= 1 << v
    return m


# -- trim / reduced ---------------------------------------------------------


def _rows_trim(rows: Sequence[int]) -> bool:
    for i, r in enumerate(rows):
        if r == 0:
            continue
        for j, s in enumerate(rows):
            if i != j and r & ~s == 0:
                return False
    return True


def _rows_reduced(rows: Sequence[int]) -> bool:
    # Zero rows are never counted as unions of other rows.
    for i, r in enumerate(rows):
        if r == 0:
            continue
        below = 0
        for j, s in enumerate(rows):
            if i != j and s & ~r == 0:
                below |= s
        if below == r:
            return False
    return True


def is_row_trim(A: BoolMat) -> bool:
    """No non-zero row is contained in another row."""
    return _rows_trim(A.rows)


def is_column_trim(A: BoolMat) -> bool:
    return _rows_trim(transpose(A).rows)


def is_trim(A: BoolMat) -> bool:
    return is_row_trim(A) and is_column_trim(A)


def is_row_reduced(A: BoolMat) -> bool:
    """No non-zero row is a union of other rows."""
    return _rows_reduced(A.rows)


def is_column_reduced(A: BoolMat) -> bool:
    return _rows_reduced(transpose(A).rows)


def is_reduced(A: BoolMat) -> bool:
    return is_row_reduced(A) and is_column_reduced(A)


# -- greedy multipliers -----------------------------------------------------


def greedy_left_multiplier(A: BoolMat, B: BoolMat) -> BoolMat:
    """The largest ``C`` with ``C @ B`` contained in ``A``.

    ``C[i,j] = 1`` iff row ``j`` of ``B`` is contained in row ``i`` of ``A``.
    ``C @ B == A`` holds exactly when the row space of ``A`` is contained in
    the row space of ``B``.
    """
    _check_dims(A, B)
    n = A.n
    out = []
    for a in A.rows:
        c = 0
        for j, b in enumerate(B.rows):
            if b & ~a == 0:
                c |= bit(n, j)
        out.append(c)
    return BoolMat(out, n)


def greedy_right_multiplier(A: BoolMat, B: BoolMat) -> BoolMat:
    """The largest ``D`` with ``B @ D`` contained in ``A`` (column-space dual)."""
    return transpose(greedy_left_multiplier(transpose(A), transpose(B)))


# -- Hall matrices ----------------------------------------------------------


def perfect_matching(rows: Sequence[int], n: int) -> list[int] | None:
    """Augmenting-path matching of rows to columns; ``None`` if not perfect.

    Returns ``match`` with ``match[i]`` the column assigned to row ``i``.
    """
    col_owner = [-1] * n

    def augment(i: int, seen: list[bool]) -> bool:
        r = rows[i]
        for j in range(n):
            if r & bit(n, j) and not seen[j]:
                seen[j] = True
                if col_owner[j] < 0 or augment(col_owner[j], seen):
                    col_owner[j] = i
                    return True
        return False

    for i in range(len(rows)):
        if not augment(i, [False] * n):
            return None
    match = [0] * len(rows)
    for j, i in enumerate(col_owner):
        if i >= 0:
            match[i] = j
    return match


def is_hall(A: BoolMat) -> bool:
    """True iff ``A`` contains a permutation matrix."""
    return perfect_matching(A.rows, A.n) is not None


def core(A: BoolMat) -> tuple[int, ...]:
    """Rows of ``A`` with at least two ones, in order."""
    return tuple(r for r in A.rows if popcount(r) >= 2)


def deficiency(A: BoolMat) -> int:
    """Size of a largest set of core rows whose union has fewer ones than rows.

    Zero rows never enter the core, so a matrix with a zero row can be
    0-deficient without being Hall.
    """
    if not is_row_trim(A):
        raise ValueError("deficiency is only defined for row-trim matrices")
    rows = core(A)
    for k in range(len(rows), 0, -1):
        for subset in combinations(rows, k):
            if popcount(union(subset)) < k:
                return k
    return 0


def is_permutation(A: BoolMat) -> bool:
    return all(popcount(r) == 1 for r in A.rows) and len(set(A.rows)) == A.n


def all_matrices(n: int) -> Iterator[BoolMat]:
    """Every matrix in ``M_n(B)``; only sensible for ``n <= 4``."""
    for rows in product(range(1 << n), repeat=n):
        yield BoolMat(rows, n)
