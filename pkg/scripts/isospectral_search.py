#!/usr/bin/env python3
"""Scan lens spaces L(p; q_1,...,q_m) at fixed (p, m) for spectral twins.

Every symmetry class of parameter tuples (coordinate permutation,
negation of entries mod p, global scaling by a unit) is represented
once, and classes are grouped by their multiplicity sequence
(dim lambda_0, ..., dim lambda_i_max).  A family holding two or more
classes is a genuine coincidence of Laplace-Beltrami spectra up to the
degree bound: candidates for isospectral non-isometric pairs, worth
re-checking at a larger bound.

The count table is truncated to the queried norms when i_max < p, which
keeps large-p scans cheap.

Example:
    python3 scripts/isospectral_search.py --p 11 --m 3 --i-max 16
"""

import argparse
import sys
from collections import defaultdict

from lenslat import gamma_table, make_lens_space, multiplicity
from lenslat.cli import canonical_q_tuples


def multiplicity_sequence(p, q, i_max):
    space = make_lens_space(p, q)
    s_max = i_max if i_max < p else None
    table = gamma_table(space, s_max=s_max)
    return tuple(multiplicity(space, table, i) for i in range(i_max + 1))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, required=True, help="order of the cyclic group")
    parser.add_argument("--m", type=int, default=3, help="number of rotation parameters")
    parser.add_argument("--i-max", type=int, default=16, help="degree bound for the comparison")
    args = parser.parse_args(argv)

    tuples = canonical_q_tuples(args.p, args.m)
    print(f"p = {args.p}, m = {args.m}: {len(tuples)} symmetry classes, "
          f"comparing degrees 0..{args.i_max}")

    families = defaultdict(list)
    for q in tuples:
        families[multiplicity_sequence(args.p, q, args.i_max)].append(q)

    coincident = {seq: qs for seq, qs in families.items() if len(qs) > 1}
    print(f"{len(families)} distinct multiplicity sequences")
    if not coincident:
        print("no spectral coincidences between distinct symmetry classes")
        return 0
    for seq, qs in sorted(coincident.items()):
        members = "  ".join(f"L({args.p};{','.join(map(str, q))})" for q in sorted(qs))
        print(f"family of {len(qs)}: {members}")
        print(f"  dim(lambda_i), i <= {args.i_max}: {list(seq)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
