"""Min-plus and max-plus matrices with a threshold.

Scalars are ints ``0..t`` plus ``BOT``, the additive identity and
multiplicative zero: ``inf`` in the min-plus semiring, ``-inf`` in the
max-plus one. A threshold of ``None`` means the untruncated semiring.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

BOT = -1
FLAVORS = ("min", "max")


def _check(flavor: str, t: int | None) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be 'min' or 'max', not {flavor!r}")
    if t is not None and t < 0:
        raise ValueError("threshold must be non-negative")


def scalars(t: int) -> list[int]:
    return [BOT] + list(range(t + 1))


def otimes(a: int, b: int, t: int | None) -> int:
    if a == BOT or b == BOT:
        return BOT
    s = a + b
    return s if t is None else min(t, s)


def oplus(a: int, b: int, flavor: str) -> int:
    if a == BOT:
        return b
    if b == BOT:
        return a
    return min(a, b) if flavor == "min" else max(a, b)


@lru_cache(maxsize=None)
def _tables(flavor: str, t: int):
    vals = scalars(t)
    mul = {(a, b): otimes(a, b, t) for a in vals for b in vals}
    add = {(a, b): oplus(a, b, flavor) for a in vals for b in vals}
    return mul, add


def parse_scalar(tok: str) -> int:
    tok = tok.strip()
    if tok in ("inf", "+inf", "-inf", "oo", "-oo"):
        return BOT
    v = int(tok)
    if v < 0:
        raise ValueError(f"negative scalar {tok!r}")
    return v


def format_scalar(a: int, flavor: str) -> str:
    if a == BOT:
        return "inf" if flavor == "min" else "-inf"
    return str(a)


class TropMat:
    """A square matrix over a thresholded min-plus or max-plus semiring."""

    __slots__ = ("rows", "flavor", "t", "_hash")

    def __init__(self, rows: Iterable[Sequence[int]], flavor: str, t: int | None):
        _check(flavor, t)
        rows = tuple(tuple(int(a) for a in r) for r in rows)
        k = len(rows)
        for r in rows:
            if len(r) != k:
                raise ValueError("matrix must be square")
            for a in r:
                if a != BOT and (a < 0 or (t is not None and a > t)):
                    raise ValueError(f"entry {a} outside the semiring with threshold {t}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "_hash", hash((rows, flavor, t)))

    def __setattr__(self, name, value):
        raise AttributeError("TropMat is immutable")

    def __reduce__(self):
        return (TropMat, (self.rows, self.flavor, self.t))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TropMat)
            and self.rows == other.rows
            and self.flavor == other.flavor
            and self.t == other.t
        )

    def __hash__(self) -> int:
        return self._hash

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "TropMat") -> "TropMat":
        return trop_mul(self, other)

    def identity_like(self) -> "TropMat":
        k = self.dim
        return TropMat([[0 if i == j else BOT for j in range(k)] for i in range(k)], self.flavor, self.t)

    def to_text(self) -> str:
        return " ".join(format_scalar(a, self.flavor) for r in self.rows for a in r)

    @classmethod
    def from_text(cls, text: str, flavor: str, t: int | None) -> "TropMat":
        toks = text.split()
        k = int(round(len(toks) ** 0.5))
        if k * k != len(toks):
            raise ValueError("need a square number of entries")
        vals = [parse_scalar(x) for x in toks]
        return cls([vals[i * k:(i + 1) * k] for i in range(k)], flavor, t)

    def __repr__(self) -> str:
        return f"TropMat({self.to_text()!r}, {self.flavor!r}, t={self.t})"

    def to_boolean(self):
        """The image under ``inf -> 0, 0 -> 1``; min-plus with ``t = 0`` only."""
        from .boolmat import BoolMat

        if self.flavor != "min" or self.t != 0:
            raise ValueError("only min-plus matrices with t = 0 are boolean")
        return BoolMat.from_lists([[0 if a == BOT else 1 for a in r] for r in self.rows])


def trop_mul(A: TropMat, B: TropMat) -> TropMat:
    if A.flavor != B.flavor or A.t != B.t or A.dim != B.dim:
        raise ValueError("matrices over different semirings or of different sizes")
    k, flavor, t = A.dim, A.flavor, A.t
    if t is not None:
        mul, add = _tables(flavor, t)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            acc = BOT
            for m in range(k):
                if t is None:
                    acc = oplus(acc, otimes(A.rows[i][m], B.rows[m][j], None), flavor)
                else:
                    acc = add[acc, mul[A.rows[i][m], B.rows[m][j]]]
            row.append(acc)
        out.append(row)
    return TropMat(out, flavor, t)


def all_matrices(flavor: str, t: int, k: int = 2) -> list[TropMat]:
    vals = scalars(t)
    return [
        TropMat([entries[i * k:(i + 1) * k] for i in range(k)], flavor, t)
        for entries in product(vals, repeat=k * k)
    ]


# -- generators -------------------------------------------------------------


def _mat(a, b, c, d, flavor, t) -> TropMat:
    return TropMat([[a, b], [c, d]], flavor, t)


def _need_positive(t: int) -> None:
    if t is None or t < 1:
        raise ValueError(
            "threshold must be at least 1; with t = 0 the min-plus monoid is the "
            "boolean one (see matmonoid.gensets)"
        )


def minplus_generators(t: int) -> list[TropMat]:
    """``A(i)`` for each scalar ``i``, then ``B`` and ``C``: ``t + 4`` matrices."""
    _need_positive(t)
    gens = [_mat(i, 0, 0, BOT, "min", t) for i in list(range(t + 1)) + [BOT]]
    gens.append(_mat(1, BOT, BOT, 0, "min", t))
    gens.append(_mat(BOT, BOT, BOT, 0, "min", t))
    return gens


def maxplus_generators(t: int) -> list[TropMat]:
    """``X(i)``, ``Y``, ``Z`` and ``W(j, k)`` for ``1 <= j <= k <= t``."""
    _need_positive(t)
    gens = [_mat(i, 0, 0, BOT, "max", t) for i in list(range(t + 1)) + [BOT]]
    gens.append(_mat(1, BOT, BOT, 0, "max", t))
    gens.append(_mat(BOT, BOT, BOT, 0, "max", t))
    gens += [_mat(0, j, k, 0, "max", t) for j in range(1, t + 1) for k in range(j, t + 1)]
    return gens


def minplus_generators_infinite(limit: int) -> list[TropMat]:
    """The untruncated family, cut off at ``A(limit)``; it is not finitely generated."""
    gens = [_mat(i, 0, 0, BOT, "min", None) for i in list(range(limit + 1)) + [BOT]]
    return gens + [_mat(1, BOT, BOT, 0, "min", None), _mat(BOT, BOT, BOT, 0, "min", None)]


def maxplus_generators_infinite(limit: int) -> list[TropMat]:
    """The untruncated family with ``i, j, k <= limit``."""
    gens = [_mat(i, 0, 0, BOT, "max", None) for i in list(range(limit + 1)) + [BOT]]
    gens += [_mat(1, BOT, BOT, 0, "max", None), _mat(BOT, BOT, BOT, 0, "max", None)]
    gens += [_mat(0, j, k, 0, "max", None) for j in range(1, limit + 1) for k in range(j, limit + 1)]
    return gens


def minplus_count(t: int) -> int:
    return t + 4


def maxplus_count(t: int) -> int:
    return (t * t + 3 * t + 8) // 2


# -- row bases --------------------------------------------------------------


def scale(a: int, row: Sequence[int], t: int | None) -> tuple[int, ...]:
    return tuple(otimes(a, x, t) for x in row)


def scalar_multiple_count(row: Sequence[int], t: int) -> int:
    """Distinct rows ``a * row`` over all scalars ``a``, the ``BOT`` multiple included."""
    return len({scale(a, row, t) for a in scalars(t)})


def _combination(rows: Sequence[Sequence[int]], coeffs: Sequence[int], flavor: str, t: int):
    k = len(rows[0])
    acc = [BOT] * k
    for a, r in zip(coeffs, rows):
        for j, x in enumerate(scale(a, r, t)):
            acc[j] = oplus(acc[j], x, flavor)
    return tuple(acc)


def row_basis(rows: Iterable[Sequence[int]], flavor: str, t: int) -> set[tuple[int, ...]]:
    """Rows that are not ``oplus``-combinations of scalar multiples of the other rows."""
    distinct = sorted({tuple(r) for r in rows if any(x != BOT for x in r)})
    vals = scalars(t)
    basis = set()
    for r in distinct:
        others = [s for s in distinct if s != r]
        if not others or not any(
            _combination(others, coeffs, flavor, t) == r
            for coeffs in product(vals, repeat=len(others))
        ):
            basis.add(r)
    return basis


def maxplus_row_basis(A: TropMat) -> set[tuple[int, ...]]:
    if A.flavor != "max":
        raise ValueError("maxplus_row_basis needs a max-plus matrix")
    return row_basis(A.rows, "max", A.t)


__all__ = [
    "BOT",
    "TropMat",
    "all_matrices",
    "format_scalar",
    "maxplus_count",
    "maxplus_generators",
    "maxplus_generators_infinite",
    "maxplus_row_basis",
    "minplus_count",
    "minplus_generators",
    "minplus_generators_infinite",
    "oplus",
    "otimes",
    "parse_scalar",
    "row_basis",
    "scalar_multiple_count",
    "scalars",
    "trop_mul",
]
