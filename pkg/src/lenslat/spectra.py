"""Eigenvalue multiplicities of the Laplace-Beltrami operator on lens spaces.

Write N(h) for the number of congruence-lattice points of 1-norm h.
With h = k + n*p, 0 <= k < p, the closed form evaluated here is

    N(k + n*p) = sum_{t=0}^{m-1} sum_{U subset of M}
                 binom(n - t + |U| - 1, m - 1) * gamma(U, k + t*p),

a finite sum over the precomputed box-bounded counts, with the zero
convention on out-of-range binomials.  The multiplicity of the
eigenvalue lambda_i = i*(i + d - 1), d = 2m - 1, is then

    dim(lambda_i) = sum_{s=0}^{floor(i/2)} binom(s + m - 2, m - 2) * N(i - 2s).

Both evaluations are exact integer arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import GammaTable, LensSpace, binom, decompose, gamma_table


@dataclass(frozen=True)
class SpectrumEntry:
    """One spectral line: degree i, eigenvalue i*(i + d - 1), multiplicity."""

    i: int
    eigenvalue: int
    mult: int


@dataclass(frozen=True)
class SpectrumTable:
    """Spectral lines of one lens space for degrees 0..i_max, gap-free."""

    space: LensSpace
    entries: tuple[SpectrumEntry, ...]


@dataclass(frozen=True)
class IsospectralReport:
    """Outcome of comparing two multiplicity sequences up to a degree bound.

    first_divergence is (i, mult_a, mult_b) at the smallest differing
    degree, or None.  When the two spaces have different m the manifolds
    have different dimension: the report is unequal with
    dimension_mismatch set and no divergence degree is computed.
    """

    space_a: LensSpace
    space_b: LensSpace
    i_max: int
    equal: bool
    first_divergence: tuple[int, int, int] | None
    dimension_mismatch: bool = False


@dataclass(frozen=True)
class ParityRow:
    """Multiplicity of one degree plus the even-parity verdict.

    ok is False only where the parity guarantee applies (p even, i odd)
    and the multiplicity is odd; everywhere else it is vacuously True.
    """

    i: int
    mult: int
    ok: bool


def n_lattice_formula(space: LensSpace, table: GammaTable, h: int) -> int:
    """Number of congruence-lattice points of 1-norm h, by the closed form.

    Terms with a zero binomial coefficient are skipped before the table
    lookup, so a table truncated at s_max still serves every h < p.
    """
    if table.space != space:
        raise ValueError("table was built for a different lens space")
    p, m = space.p, space.m
    k, n = decompose(h, p)
    total = 0
    for t in range(m):
        s = k + t * p
        base = n - t - 1
        for bits in range(1 << m):
            coeff = binom(base + bits.bit_count(), m - 1)
            if coeff:
                total += coeff * table.value(bits, s)
    return total


def multiplicity(space: LensSpace, table: GammaTable, i: int) -> int:
    """Dimension of the eigenspace for lambda_i = i*(i + d - 1)."""
    if i < 0:
        raise ValueError(f"degree must be non-negative, got {i}")
    m = space.m
    return sum(
        binom(s + m - 2, m - 2) * n_lattice_formula(space, table, i - 2 * s)
        for s in range(i // 2 + 1)
    )


def spectrum(space: LensSpace, i_max: int) -> SpectrumTable:
    """Spectral table for degrees 0..i_max; builds the count table once."""
    if i_max < 0:
        raise ValueError(f"i_max must be non-negative, got {i_max}")
    table = gamma_table(space)
    d = space.d
    entries = tuple(
        SpectrumEntry(i, i * (i + d - 1), multiplicity(space, table, i))
        for i in range(i_max + 1)
    )
    return SpectrumTable(space, entries)


def first_positive_eigenvalue(
    space: LensSpace, i_max: int
) -> SpectrumEntry | None:
    """Smallest-degree entry with i >= 1 and nonzero multiplicity, if any."""
    if i_max < 1:
        raise ValueError(f"i_max must be at least 1, got {i_max}")
    for entry in spectrum(space, i_max).entries[1:]:
        if entry.mult > 0:
            return entry
    return None


def compare_spectra(a: LensSpace, b: LensSpace, i_max: int) -> IsospectralReport:
    """Compare multiplicity sequences of two lens spaces up to degree i_max."""
    if i_max < 0:
        raise ValueError(f"i_max must be non-negative, got {i_max}")
    if a.m != b.m:
        return IsospectralReport(
            a, b, i_max, equal=False, first_divergence=None, dimension_mismatch=True
        )
    table_a = gamma_table(a)
    table_b = gamma_table(b)
    for i in range(i_max + 1):
        mult_a = multiplicity(a, table_a, i)
        mult_b = multiplicity(b, table_b, i)
        if mult_a != mult_b:
            return IsospectralReport(a, b, i_max, False, (i, mult_a, mult_b))
    return IsospectralReport(a, b, i_max, True, None)


def parity_report(space: LensSpace, i_max: int) -> tuple[ParityRow, ...]:
    """Per-degree multiplicities with the even-parity verdict.

    For p even, every odd degree must have even multiplicity; rows where
    that fails carry ok=False.  For p odd the report is informational
    (no guarantee applies, every row has ok=True).
    """
    even_p = space.p % 2 == 0
    rows = []
    for entry in spectrum(space, i_max).entries:
        violated = even_p and entry.i % 2 == 1 and entry.mult % 2 == 1
        rows.append(ParityRow(entry.i, entry.mult, not violated))
    return tuple(rows)
