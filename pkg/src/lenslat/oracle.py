"""Brute-force enumeration ground truth for the counting machinery.

Everything here enumerates lattice points directly and exists to certify
the closed-form counting path on desk-scale instances; none of it is a
production path.  Enumerations refuse to start when the raw candidate
count (all integer vectors of the requested 1-norm, before the
congruence filter) would exceed a budget.

Enumeration order is fixed: compositions of the norm into non-negative
parts in lexicographic order, then sign patterns over the nonzero parts
with + before -, so output is deterministic and diffable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .lattice import LensSpace, SubsetMask, _check_subset, binom, decompose

DEFAULT_BUDGET = 10**8


class OracleBudgetError(RuntimeError):
    """Enumeration would visit more candidates than the budget allows."""

    def __init__(self, candidates: int, budget: int, what: str):
        super().__init__(
            f"{what} needs {candidates} candidates, "
            f"exceeding the oracle budget of {budget}"
        )
        self.candidates = candidates
        self.budget = budget


def l1_sphere_count(m: int, h: int) -> int:
    """Number of x in Z^m with 1-norm exactly h (no congruence filter).

    This is the candidate count of enumerate_omega: support of size j,
    a positive composition of h into j parts, and j signs.
    """
    if h == 0:
        return 1
    return sum(2**j * binom(m, j) * binom(h - 1, j - 1) for j in range(1, m + 1))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_omega(
    space: LensSpace, h: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """Every x in Z^m with 1-norm h satisfying the congruence, exactly once."""
    if h < 0:
        raise ValueError(f"h must be non-negative, got {h}")
    candidates = l1_sphere_count(space.m, h)
    if candidates > budget:
        raise OracleBudgetError(
            candidates, budget, f"enumerating 1-norm {h} vectors in Z^{space.m}"
        )
    out = []
    for comp in _compositions(h, space.m):
        nonzero = [j for j, a in enumerate(comp) if a]
        for signs in product((1, -1), repeat=len(nonzero)):
            x = list(comp)
            for j, sign in zip(nonzero, signs):
                x[j] = sign * x[j]
            if space.admits(x):
                out.append(tuple(x))
    return out


def n_lattice_bruteforce(space: LensSpace, h: int, budget: int = DEFAULT_BUDGET) -> int:
    """|Omega(M, h)| by direct enumeration."""
    return len(enumerate_omega(space, h, budget))


def negative_multiple_mask(space: LensSpace, x: Sequence[int]) -> SubsetMask:
    """Indices whose coordinate is a negative multiple of p, as a mask."""
    bits = 0
    for j, v in enumerate(x):
        if v < 0 and v % space.p == 0:
            bits |= 1 << j
    return SubsetMask(bits, space.m)


@dataclass(frozen=True)
class PartitionClass:
    """Vectors whose coordinates are negative multiples of p exactly on N."""

    N: SubsetMask
    members: tuple[tuple[int, ...], ...]


def classify_partition(
    space: LensSpace, h: int, budget: int = DEFAULT_BUDGET
) -> tuple[PartitionClass, ...]:
    """Partition of the 1-norm-h lattice points by their negative-multiple set.

    Classes come back ordered by mask bits, members in enumeration order;
    they are disjoint and their sizes sum to n_lattice_bruteforce(h).
    """
    groups: dict[SubsetMask, list[tuple[int, ...]]] = {}
    for x in enumerate_omega(space, h, budget):
        groups.setdefault(negative_multiple_mask(space, x), []).append(x)
    return tuple(
        PartitionClass(mask, tuple(groups[mask]))
        for mask in sorted(groups, key=lambda u: u.bits)
    )


def fold_point(
    space: LensSpace, x: Sequence[int]
) -> tuple[SubsetMask, tuple[int, ...]]:
    """Partition mask of x and its folded, box-bounded representative.

    Coordinates that are negative multiples of p are dropped; each
    remaining coordinate x_j is replaced by its congruence
    representative: x_j mod p in {0,...,p-1} when x_j >= 0, and
    (x_j mod p) - p when x_j < 0.  The folded vector keeps the
    congruence over the complement and satisfies |y_j| <= p-1.
    """
    x = tuple(int(v) for v in x)
    if not space.admits(x):
        raise ValueError(f"{x} violates the congruence of {space}")
    p = space.p
    bits = 0
    y = []
    for j, v in enumerate(x):
        if v < 0 and v % p == 0:
            bits |= 1 << j
        else:
            y.append(v % p if v >= 0 else v % p - p)
    return SubsetMask(bits, space.m), tuple(y)


def fiber_census(
    space: LensSpace, h: int, budget: int = DEFAULT_BUDGET
) -> dict[tuple[SubsetMask, int, tuple[int, ...]], int]:
    """Fiber sizes of the folding map over all 1-norm-h lattice points.

    Keys are (N, t, y): the partition mask, the folded norm offset t
    (||y||_1 = k + t*p where h = k + n*p), and the folded vector.  For
    every occupied key the size equals binom(n - t + (m - |N|) - 1, m - 1).
    """
    k, _ = decompose(h, space.p)
    census: dict[tuple[SubsetMask, int, tuple[int, ...]], int] = {}
    for x in enumerate_omega(space, h, budget):
        mask, y = fold_point(space, x)
        offset = sum(abs(v) for v in y) - k
        # the fold drops whole multiples of p from the norm
        assert offset >= 0 and offset % space.p == 0
        key = (mask, offset // space.p, y)
        census[key] = census.get(key, 0) + 1
    return census


def enumerate_c(
    space: LensSpace, U: SubsetMask, s: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """Box-bounded congruence points over U with 1-norm exactly s.

    Scans the whole box {-(p-1),...,p-1}^|U|, so candidates = (2p-1)^|U|.
    """
    _check_subset(space, U)
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    p = space.p
    qs = U.pick(space.q)
    candidates = (2 * p - 1) ** len(qs)
    if candidates > budget:
        raise OracleBudgetError(
            candidates, budget, f"scanning the box over {len(qs)} coordinates"
        )
    out = []
    for x in product(range(-(p - 1), p), repeat=len(qs)):
        if sum(map(abs, x)) != s:
            continue
        if sum(q * v for q, v in zip(qs, x)) % p == 0:
            out.append(x)
    return out


def gamma_bruteforce(
    space: LensSpace, U: SubsetMask, s: int, budget: int = DEFAULT_BUDGET
) -> int:
    """|C(U, s)| by scanning the box; the enumeration twin of lattice.gamma."""
    return len(enumerate_c(space, U, s, budget))
