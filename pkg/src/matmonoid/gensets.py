"""Minimal generating sets for boolean matrix monoids.

Ranks follow the table convention: they count generators of the monoid as a
semigroup, so the identity is listed whenever it is not a product of the
other generators (the reflexive and triangular monoids for ``n >= 3``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Callable

from .boolmat import (
    BoolMat,
    bit,
    greedy_left_multiplier,
    mat_mul,
)

MONOIDS = ("full", "reflexive", "hall", "ut", "lt", "gossip")


# -- named generators -------------------------------------------------------


def T(n: int) -> BoolMat:
    """The transposition of the first two coordinates."""
    perm = list(range(n))
    if n >= 2:
        perm[0], perm[1] = 1, 0
    return BoolMat.permutation(perm)


def U(n: int) -> BoolMat:
    """The n-cycle: row ``i`` has its 1 in column ``i + 1``, the last row in column 0."""
    return BoolMat([bit(n, (i + 1) % n) for i in range(n)], n)


def elementary(i: int, j: int, n: int) -> BoolMat:
    """The identity with an extra 1 at ``(i, j)``."""
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"no elementary matrix at ({i}, {j}) for n={n}")
    rows = [bit(n, k) for k in range(n)]
    rows[i] |= bit(n, j)
    return BoolMat(rows, n)


def E(n: int) -> BoolMat:
    if n < 2:
        raise ValueError("E needs n >= 2")
    return elementary(1, 0, n)


def F(n: int) -> BoolMat:
    """The identity with its top-left 1 removed."""
    rows = [bit(n, k) for k in range(n)]
    rows[0] = 0
    return BoolMat(rows, n)


def phone_call(i: int, j: int, n: int) -> BoolMat:
    rows = [bit(n, k) for k in range(n)]
    rows[i] |= bit(n, j)
    rows[j] |= bit(n, i)
    return BoolMat(rows, n)


# -- reports ----------------------------------------------------------------


@dataclass
class GenSetReport:
    monoid: str
    n: int
    generators: list[BoolMat]
    certified: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def certify(self, cap: int = 5 * 10**7, irredundancy: bool = True) -> "GenSetReport":
        """Check by closure that the set generates the target and is irredundant."""
        from .monoid import closure, is_irredundant

        target = monoid_size(self.monoid, self.n)
        # A listed identity is a semigroup generator and must not come for free.
        monoid = BoolMat.identity(self.n) not in self.generators
        size = len(closure(self.generators, size_cap=cap, include_identity=monoid).elements)
        self.certified["generates"] = size == target
        self.certified["closure_size"] = size
        self.certified["target_size"] = target
        if irredundancy:
            ok, witness = is_irredundant(self.generators, size_cap=cap, include_identity=monoid)
            self.certified["irredundant"] = ok
            if witness is not None:
                self.certified["redundant_generator"] = witness.to_bitstring()
        return self

    def to_json(self) -> dict:
        return {
            "monoid": self.monoid,
            "n": self.n,
            "rank": self.rank,
            "generators": [g.to_bitstring() for g in self.generators],
            "certified": dict(self.certified),
        }


def monoid_size(monoid: str, n: int) -> int:
    """Size of the target monoid (brute force for Hall and gossip)."""
    from .boolmat import all_matrices, is_hall

    if monoid == "full":
        return 2 ** (n * n)
    if monoid == "reflexive":
        return 2 ** (n * n - n)
    if monoid in ("ut", "lt"):
        return 2 ** (n * (n + 1) // 2)
    if monoid == "hall":
        if n > 4:
            raise ValueError("Hall monoid size is only brute forced for n <= 4")
        return sum(1 for A in all_matrices(n) if is_hall(A))
    if monoid == "gossip":
        from .monoid import closure

        return len(closure(gossip_generators(n).generators, include_identity=True).elements)
    raise ValueError(f"unknown monoid {monoid!r}")


# -- full and Hall ----------------------------------------------------------


def _small_full(n: int) -> list[BoolMat]:
    if n == 1:
        return [BoolMat.zero(1), BoolMat.identity(1)]
    # n = 2: the swap generates the units, then E and F
    return [T(2), E(2), F(2)]


def devadze_generators(n: int, method: str = "rows", workers: int = 1,
                       primes: list[BoolMat] | None = None) -> GenSetReport:
    """``{T, U, E, F}`` plus one representative of each prime J-class."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return GenSetReport("full", n, _small_full(n))
    if primes is None:
        from .primes import prime_representatives

        primes = prime_representatives(n, method=method, workers=workers)
    return GenSetReport("full", n, [T(n), U(n), E(n), F(n)] + list(primes))


def hall_generators(n: int, **kwargs) -> GenSetReport:
    """The Devadze set with ``F`` removed."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return GenSetReport("hall", 1, [BoolMat.identity(1)])
    if n == 2:
        return GenSetReport("hall", 2, [T(2), E(2)])
    full = devadze_generators(n, **kwargs)
    f = F(n)
    return GenSetReport("hall", n, [g for g in full.generators if g != f])


# -- reflexive --------------------------------------------------------------


def _intersections(A: BoolMat, i: int) -> list[int]:
    """Distinct intersections of row subsets of ``A`` that include row ``i``."""
    n = A.n
    others = [r for k, r in enumerate(A.rows) if k != i and r & bit(n, i)]
    seen = {A.rows[i]}
    for r in others:
        new = {x & r for x in seen} - seen
        seen |= new
    return sorted(seen)


def is_decomposable_reflexive(A: BoolMat, budget: int | None = None,
                              fallback: Callable[[BoolMat], bool] | None = None) -> bool:
    """Can trim ``A`` be written as ``B @ C`` with reflexive ``B, C`` other than ``I`` and ``A``?

    ``C`` ranges over matrices whose row ``i`` is an intersection of rows of
    ``A`` including row ``i``, and ``B`` is the greedy left multiplier. If
    more than ``budget`` candidates ``C`` would be tried, ``fallback`` decides.
    """
    n = A.n
    I = BoolMat.identity(n)
    if any(not A.rows[i] & bit(n, i) for i in range(n)):
        raise ValueError("is_decomposable_reflexive needs a reflexive matrix")
    choices = [_intersections(A, i) for i in range(n)]
    if budget is not None and fallback is not None:
        total = 1
        for c in choices:
            total *= len(c)
        if total > budget:
            return fallback(A)
    for rows in product(*choices):
        C = BoolMat(rows, n)
        if C == I or C == A:
            continue
        B = greedy_left_multiplier(A, C)
        if B == I or B == A:
            continue
        if mat_mul(B, C) == A:
            return True
    return False


def decomposable_by_conjugates(A: BoolMat, pool: list[BoolMat]) -> bool:
    """Brute-force test: some conjugate of ``A`` is ``X @ B`` with ``B`` in ``pool``.

    ``X`` is the greedy left multiplier. ``pool`` should hold one member of
    each conjugation orbit of candidate right factors.
    """
    from .canonical import conjugate

    n = A.n
    I = BoolMat.identity(n)
    for perm in permutations(range(n)):
        Aa = conjugate(A, perm)
        for B in pool:
            if B == I or B == Aa:
                continue
            X = greedy_left_multiplier(Aa, B)
            if X != I and X != Aa and mat_mul(X, B) == Aa:
                return True
    return False


def reflexive_elementaries(n: int) -> list[BoolMat]:
    return [elementary(i, j, n) for i in range(n) for j in range(n) if i != j]


def indecomposable_trim_reflexive(n: int, budget: int | None = 10**6) -> list[BoolMat]:
    """All indecomposable trim reflexive matrices, orbits expanded."""
    from .breen import reflexive_representatives
    from .canonical import conjugation_orbit

    reps = reflexive_representatives(n)
    pool = reps + reflexive_elementaries(n)
    fallback = lambda M: decomposable_by_conjugates(M, pool)  # noqa: E731
    out: set[BoolMat] = set()
    for A in reps:
        if not is_decomposable_reflexive(A, budget=budget, fallback=fallback):
            out |= conjugation_orbit(A)
    return sorted(out, key=lambda M: M.rows)


def reflexive_generators(n: int) -> GenSetReport:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return GenSetReport("reflexive", 1, [BoolMat.identity(1)])
    if n == 2:
        return GenSetReport("reflexive", 2, reflexive_elementaries(2))
    gens = reflexive_elementaries(n) + indecomposable_trim_reflexive(n)
    return GenSetReport("reflexive", n, gens)


# -- triangular and gossip -------------------------------------------------


def ut_generators(n: int) -> GenSetReport:
    """Upper-triangular elementaries, identities missing one diagonal 1, and ``I``."""
    if n < 1:
        raise ValueError("n must be positive")
    I = BoolMat.identity(n)
    gens = [elementary(i, j, n) for i in range(n) for j in range(i + 1, n)]
    for k in range(n):
        rows = list(I.rows)
        rows[k] = 0
        gens.append(BoolMat(rows, n))
    gens.append(I)
    return GenSetReport("ut", n, gens)


def lt_generators(n: int) -> GenSetReport:
    return GenSetReport("lt", n, [g.T for g in ut_generators(n).generators])


def gossip_generators(n: int) -> GenSetReport:
    if n < 2:
        raise ValueError("gossip monoids need n >= 2")
    return GenSetReport("gossip", n, [phone_call(i, j, n) for i, j in combinations(range(n), 2)])


def generators_for(monoid: str, n: int, **kwargs) -> GenSetReport:
    if monoid == "full":
        return devadze_generators(n, **kwargs)
    if monoid == "hall":
        return hall_generators(n, **kwargs)
    if monoid == "reflexive":
        return reflexive_generators(n)
    if monoid == "ut":
        return ut_generators(n)
    if monoid == "lt":
        return lt_generators(n)
    if monoid == "gossip":
        return gossip_generators(n)
    raise ValueError(f"unknown monoid {monoid!r}")


__all__ = [
    "E",
    "F",
    "GenSetReport",
    "MONOIDS",
    "T",
    "U",
    "decomposable_by_conjugates",
    "devadze_generators",
    "elementary",
    "generators_for",
    "gossip_generators",
    "hall_generators",
    "indecomposable_trim_reflexive",
    "is_decomposable_reflexive",
    "lt_generators",
    "monoid_size",
    "phone_call",
    "reflexive_elementaries",
    "reflexive_generators",
    "ut_generators",
]
