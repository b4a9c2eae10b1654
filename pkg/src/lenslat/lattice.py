"""Congruence lattices of lens spaces and exact box-bounded counts.

A lens space L(p; q_1,...,q_m) is the quotient of the unit sphere
S^(2m-1) by the cyclic group of order p acting through rotations with
parameters q_i coprime to p.  Attached to it is the congruence lattice:
integer vectors x with q_1*x_1 + ... + q_m*x_m = 0 (mod p).  Restricting
the coordinates to a subset U of {0,...,m-1} gives the lattice over U.

The central quantity here is the box-bounded count

    gamma(U, s) = #{ x in Z^U : |x_i| <= p-1 for all i in U,
                     sum_i |x_i| = s,  sum_i q_i*x_i = 0 (mod p) },

computed exactly by dynamic programming over the pair (residue mod p,
accumulated 1-norm), one coordinate at a time.  All counts are plain
Python integers, so nothing ever overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

# gamma_table materializes one row per subset, 2^m in total.
MAX_TABLE_M = 20


@dataclass(frozen=True)
class LensSpace:
    """Validated parameters (p; q_1,...,q_m) of a lens space.

    Entries of q are reduced mod p at construction (all become 0 when
    p = 1, where the congruence is vacuous).  The underlying manifold
    has dimension d = 2m - 1.
    """

    p: int
    q: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p <= 0:
            raise ValueError(f"p must be a positive integer, got {self.p}")
        q = tuple(int(v) for v in self.q)
        if len(q) < 2:
            raise ValueError(
                f"need at least two rotation parameters, got {len(q)}"
            )
        for j, v in enumerate(q):
            g = math.gcd(v, self.p)
            if g != 1:
                raise ValueError(
                    f"invalid lens space: q_{j + 1} = {v} is not coprime to "
                    f"p = {self.p} (gcd({v}, {self.p}) = {g})"
                )
        object.__setattr__(self, "q", tuple(v % self.p for v in q))

    @property
    def m(self) -> int:
        """Number of rotation parameters."""
        return len(self.q)

    @property
    def d(self) -> int:
        """Dimension of the underlying manifold, 2m - 1."""
        return 2 * self.m - 1

    def admits(self, x: Sequence[int]) -> bool:
        """Whether x satisfies sum q_i*x_i = 0 (mod p)."""
        if len(x) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(x)}")
        return sum(qi * xi for qi, xi in zip(self.q, x)) % self.p == 0

    def label(self) -> str:
        return f"L({self.p};{','.join(str(v) for v in self.q)})"

    def __str__(self) -> str:
        return self.label()


def make_lens_space(p: int, q: Sequence[int]) -> LensSpace:
    """Validated constructor for L(p; q_1,...,q_m)."""
    return LensSpace(int(p), tuple(int(v) for v in q))


@dataclass(frozen=True)
class SubsetMask:
    """Subset of the coordinate index set {0,...,m-1}, kept as a bit mask."""

    bits: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"m must be non-negative, got {self.m}")
        if not 0 <= self.bits < (1 << self.m):
            raise ValueError(
                f"bits {self.bits:#x} out of range for an {self.m}-bit mask"
            )

    @property
    def u(self) -> int:
        """Cardinality of the subset."""
        return self.bits.bit_count()

    def complement(self) -> SubsetMask:
        return SubsetMask(self.bits ^ ((1 << self.m) - 1), self.m)

    def indices(self) -> tuple[int, ...]:
        """0-based member indices, ascending."""
        return tuple(j for j in range(self.m) if self.bits >> j & 1)

    def pick(self, values: Sequence) -> tuple:
        """Entries of `values` at the member indices, ascending."""
        return tuple(values[j] for j in self.indices())

    @classmethod
    def full(cls, m: int) -> SubsetMask:
        return cls((1 << m) - 1, m)

    @classmethod
    def empty(cls, m: int) -> SubsetMask:
        return cls(0, m)

    @classmethod
    def from_indices(cls, indices: Sequence[int], m: int) -> SubsetMask:
        bits = 0
        for j in indices:
            if not 0 <= j < m:
                raise ValueError(f"index {j} out of range for m = {m}")
            bits |= 1 << j
        return cls(bits, m)


def binom(pool: int, choose: int) -> int:
    """Binomial coefficient with the zero convention.

    Returns pool! / (choose! * (pool - choose)!) when 0 <= choose <= pool
    and 0 otherwise (negative pool, negative choose, or pool < choose).
    Total on all integer inputs.
    """
    if choose < 0 or pool < 0 or pool < choose:
        return 0
    return math.comb(pool, choose)


def decompose(h: int, p: int) -> tuple[int, int]:
    """Split h >= 0 uniquely as h = k + n*p with 0 <= k < p; returns (k, n)."""
    if h < 0:
        raise ValueError(f"h must be non-negative, got {h}")
    if p <= 0:
        raise ValueError(f"p must be a positive integer, got {p}")
    n, k = divmod(h, p)
    return k, n


def _gamma_row(p: int, qs: Sequence[int], s_max: int) -> list[int]:
    """Counts, for every s in 0..s_max, of x in Z^len(qs) with
    |x_i| <= p-1, 1-norm s and sum qs[i]*x_i = 0 (mod p).

    State is (residue mod p, accumulated 1-norm); each coordinate
    contributes a value in {-(p-1),...,p-1}.
    """
    dp = [[0] * (s_max + 1) for _ in range(p)]
    dp[0][0] = 1
    for q in qs:
        moves = [((q * x) % p, abs(x)) for x in range(-(p - 1), p)]
        ndp = [[0] * (s_max + 1) for _ in range(p)]
        for r, row in enumerate(dp):
            for v, c in enumerate(row):
                if not c:
                    continue
                for dr, ax in moves:
                    nv = v + ax
                    if nv <= s_max:
                        ndp[(r + dr) % p][nv] += c
        dp = ndp
    return dp[0]


def _check_subset(space: LensSpace, U: SubsetMask) -> None:
    if U.m != space.m:
        raise ValueError(f"subset mask is over m = {U.m}, space has m = {space.m}")


def gamma(space: LensSpace, U: SubsetMask, s: int) -> int:
    """Box-bounded lattice count over the subset U at 1-norm s.

    Counts x in Z^|U| with |x_i| <= p-1 for every i in U, sum of |x_i|
    equal to s, and sum q_i*x_i = 0 (mod p).  Zero whenever s exceeds
    the box bound |U|*(p-1).
    """
    _check_subset(space, U)
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    if s > U.u * (space.p - 1):
        return 0
    return _gamma_row(space.p, U.pick(space.q), s)[s]


@dataclass(frozen=True)
class GammaTable:
    """All box-bounded counts of one lens space, indexed by subset mask.

    rows[bits][s] holds gamma(U, s) for the subset with that bit mask,
    stored up to min(s_limit, u*(p-1)).  Lookups above the box bound
    u*(p-1) are zero by definition; lookups past a truncated row raise,
    because the value exists but was not materialized.
    """

    space: LensSpace
    s_limit: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, U: SubsetMask | int, s: int) -> int:
        bits = U.bits if isinstance(U, SubsetMask) else U
        if not 0 <= bits < len(self.rows):
            raise ValueError(f"subset bits {bits} out of range")
        if s < 0:
            raise ValueError(f"s must be non-negative, got {s}")
        row = self.rows[bits]
        if s < len(row):
            return row[s]
        if s > bits.bit_count() * (self.space.p - 1):
            return 0
        raise ValueError(
            f"table truncated at 1-norm {self.s_limit}, "
            f"needed entry at s = {s}"
        )

    def __getitem__(self, key: tuple[SubsetMask | int, int]) -> int:
        U, s = key
        return self.value(U, s)


def gamma_table(space: LensSpace, s_max: int | None = None) -> GammaTable:
    """Precompute gamma(U, s) for all 2^m subsets of one lens space.

    By default every row covers the full range 0 <= s <= u*(p-1); pass
    s_max to truncate rows (useful when only small norms will ever be
    queried).  m is capped at MAX_TABLE_M since the table is 2^m-sized.
    """
    p, m = space.p, space.m
    if m > MAX_TABLE_M:
        raise ValueError(f"gamma_table supports m <= {MAX_TABLE_M}, got {m}")
    limit = m * (p - 1) if s_max is None else int(s_max)
    if limit < 0:
        raise ValueError(f"s_max must be non-negative, got {s_max}")
    rows = []
    for bits in range(1 << m):
        qs = [space.q[j] for j in range(m) if bits >> j & 1]
        cap = min(limit, len(qs) * (p - 1))
        rows.append(tuple(_gamma_row(p, qs, cap)))
    return GammaTable(space, limit, tuple(rows))
