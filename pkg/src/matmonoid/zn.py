"""Square matrices over the integers modulo ``n``.

The diagonal form below uses only row and column operations that are
invertible over ``Z_n`` (swaps, adding a multiple of one line to another,
scaling by a unit), so it never divides.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import gcd, prod
from typing import Iterable, Sequence

from sympy import primefactors


class ZnMat:
    """An immutable ``k x k`` matrix with entries in ``Z_n``."""

    __slots__ = ("rows", "n", "_hash")

    def __init__(self, rows: Iterable[Sequence[int]], n: int):
        if n < 1:
            raise ValueError("modulus must be positive")
        rows = tuple(tuple(int(a) % n for a in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_hash", hash((rows, n)))

    def __setattr__(self, name, value):
        raise AttributeError("ZnMat is immutable")

    def __reduce__(self):
        return (ZnMat, (self.rows, self.n))

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, k: int, n: int) -> "ZnMat":
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)], n)

    @classmethod
    def diag(cls, entries: Sequence[int], n: int) -> "ZnMat":
        k = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(k)] for i in range(k)], n)

    @classmethod
    def from_text(cls, text: str, n: int) -> "ZnMat":
        rows = [[int(x) for x in line.split()] for line in text.strip().splitlines() if line.strip()]
        return cls(rows, n)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(a) for a in r) for r in self.rows)

    def identity_like(self) -> "ZnMat":
        return ZnMat.identity(self.k, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, ZnMat) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "ZnMat") -> "ZnMat":
        if self.n != other.n or self.k != other.k:
            raise ValueError("matrices over different rings or of different sizes")
        n = self.n
        cols = list(zip(*other.rows))
        return ZnMat([[sum(a * b for a, b in zip(r, c)) % n for c in cols] for r in self.rows], n)

    def __repr__(self) -> str:
        return f"ZnMat({[list(r) for r in self.rows]}, n={self.n})"


def det(A: ZnMat) -> int:
    """Leibniz determinant modulo ``n``."""
    k, n = A.k, A.n
    total = 0
    for perm in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = prod(A.rows[i][perm[i]] for i in range(k))
        total += -term if inversions % 2 else term
    return total % n


def is_unit(A: ZnMat) -> bool:
    return gcd(det(A), A.n) == 1


def prime_divisors(n: int) -> list[int]:
    return [int(p) for p in primefactors(n)]


def coprime_scaler(a: int, n: int) -> int:
    """A unit ``b`` of ``Z_n`` with ``a * b = gcd(a, n)`` modulo ``n``.

    ``a = 0`` gives ``b = 1``. Otherwise take the Bezout solution ``x`` of
    ``a x = d`` and add ``k * (n / d)``, where ``k`` multiplies the primes of
    ``n`` dividing neither ``x`` nor ``n / d``.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    a %= n
    if n == 1:
        return 0
    if a == 0:
        return 1
    d = gcd(a, n)
    m = n // d
    x = pow(a // d, -1, m) if m > 1 else 1
    k = prod(p for p in prime_divisors(n) if x % p and m % p)
    return (x + k * m) % n


# -- diagonal form ----------------------------------------------------------


@dataclass(frozen=True)
class DiagonalForm:
    diag: tuple[int, ...]
    left_unit: ZnMat
    right_unit: ZnMat

    @property
    def matrix(self) -> ZnMat:
        return ZnMat.diag(self.diag, self.left_unit.n)

    def reconstruct(self) -> ZnMat:
        return self.left_unit @ self.matrix @ self.right_unit


class _Work:
    """``A = L @ M @ R`` throughout; row ops act on ``M`` and ``L``, column ops on ``M`` and ``R``."""

    def __init__(self, A: ZnMat):
        self.n, self.k = A.n, A.k
        self.M = [list(r) for r in A.rows]
        self.L = [[int(i == j) for j in range(self.k)] for i in range(self.k)]
        self.R = [[int(i == j) for j in range(self.k)] for i in range(self.k)]

    # M <- E M, L <- L E^-1
    def swap_rows(self, i: int, j: int) -> None:
        self.M[i], self.M[j] = self.M[j], self.M[i]
        for r in self.L:
            r[i], r[j] = r[j], r[i]

    def add_row(self, dst: int, src: int, c: int) -> None:
        n = self.n
        self.M[dst] = [(x + c * y) % n for x, y in zip(self.M[dst], self.M[src])]
        for r in self.L:
            r[src] = (r[src] - c * r[dst]) % n

    def scale_row(self, i: int, u: int) -> None:
        n = self.n
        self.M[i] = [(x * u) % n for x in self.M[i]]
        inv = pow(u, -1, n)
        for r in self.L:
            r[i] = (r[i] * inv) % n

    # M <- M F, R <- F^-1 R
    def swap_cols(self, i: int, j: int) -> None:
        for r in self.M:
            r[i], r[j] = r[j], r[i]
        self.R[i], self.R[j] = self.R[j], self.R[i]

    def add_col(self, dst: int, src: int, c: int) -> None:
        n = self.n
        for r in self.M:
            r[dst] = (r[dst] + c * r[src]) % n
        self.R[src] = [(x - c * y) % n for x, y in zip(self.R[src], self.R[dst])]


def standard_diagonal_form(A: ZnMat) -> DiagonalForm:
    """Diagonalise by Euclidean pivoting, scale pivots to divisors of ``n``, sort.

    Each pass moves the smallest non-zero entry of the remaining block to the
    pivot and reduces its row and column by it; the pivot strictly decreases
    until the row and column are clear.
    """
    if A.n < 2:
        raise ValueError("modulus must be at least 2")
    w = _Work(A)
    k, n = w.k, w.n
    for p in range(k):
        while True:
            best = None
            for i in range(p, k):
                for j in range(p, k):
                    x = w.M[i][j]
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                break
            _, i, j = best
            if i != p:
                w.swap_rows(i, p)
            if j != p:
                w.swap_cols(j, p)
            piv = w.M[p][p]
            for i in range(p + 1, k):
                q = w.M[i][p] // piv
                if q:
                    w.add_row(i, p, -q)
            for j in range(p + 1, k):
                q = w.M[p][j] // piv
                if q:
                    w.add_col(j, p, -q)
            if all(w.M[i][p] == 0 for i in range(p + 1, k)) and all(
                w.M[p][j] == 0 for j in range(p + 1, k)
            ):
                break
    for i in range(k):
        x = w.M[i][i]
        if x:
            w.scale_row(i, coprime_scaler(x, n))
    # zeros first, then non-zero entries in decreasing order
    order = sorted(range(k), key=lambda i: (w.M[i][i] != 0, -w.M[i][i]))
    current = list(range(k))
    for target in range(k):
        src = current.index(order[target])
        if src != target:
            w.swap_rows(src, target)
            w.swap_cols(src, target)
            current[src], current[target] = current[target], current[src]
    diag = tuple(w.M[i][i] for i in range(k))
    return DiagonalForm(diag, ZnMat(w.L, n), ZnMat(w.R, n))


# -- generators and relative rank ----------------------------------------


def xp_generators(n: int, k: int) -> list[ZnMat]:
    """``diag(p mod n, 1, ..., 1)`` for each prime ``p`` dividing ``n``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 1:
        raise ValueError("k must be positive")
    return [ZnMat.diag([p % n] + [1] * (k - 1), n) for p in prime_divisors(n)]


def relative_rank(n: int) -> int:
    """Fewest matrices to add to the units to generate all of ``M_k(Z_n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return len(prime_divisors(n))


def all_matrices(n: int, k: int) -> Iterable[ZnMat]:
    for entries in product(range(n), repeat=k * k):
        yield ZnMat([entries[i * k:(i + 1) * k] for i in range(k)], n)


def enumerate_units(n: int, k: int, cap: int = 10**7) -> list[ZnMat]:
    """``GL_k(Z_n)`` by determinant test over all ``n^(k^2)`` matrices."""
    if n ** (k * k) > cap:
        raise ValueError(f"{n}^{k * k} matrices exceed the cap {cap}")
    return [A for A in all_matrices(n, k) if is_unit(A)]


__all__ = [
    "DiagonalForm",
    "ZnMat",
    "all_matrices",
    "coprime_scaler",
    "det",
    "enumerate_units",
    "is_unit",
    "prime_divisors",
    "relative_rank",
    "standard_diagonal_form",
    "xp_generators",
]
