"""Exact Laplace-Beltrami spectra of lens spaces via lattice point counting.

The library side: validated lens-space parameters, box-bounded lattice
counts by dynamic programming, the closed-form 1-norm count N(h), and
eigenvalue multiplicity tables, all in exact integer arithmetic.  The
brute-force enumeration twin lives in lenslat.oracle (test instrument,
not a stable surface); the command line lives in lenslat.cli.
"""

from .lattice import (
    GammaTable,
    LensSpace,
    SubsetMask,
    binom,
    decompose,
    gamma,
    gamma_table,
    make_lens_space,
)
from .spectra import (
    IsospectralReport,
    ParityRow,
    SpectrumEntry,
    SpectrumTable,
    compare_spectra,
    first_positive_eigenvalue,
    multiplicity,
    n_lattice_formula,
    parity_report,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "GammaTable",
    "IsospectralReport",
    "LensSpace",
    "ParityRow",
    "SpectrumEntry",
    "SpectrumTable",
    "SubsetMask",
    "binom",
    "compare_spectra",
    "decompose",
    "first_positive_eigenvalue",
    "gamma",
    "gamma_table",
    "make_lens_space",
    "multiplicity",
    "n_lattice_formula",
    "parity_report",
    "spectrum",
]
