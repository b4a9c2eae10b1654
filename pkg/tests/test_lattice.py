import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lenslat import (
    SubsetMask,
    binom,
    decompose,
    gamma,
    gamma_table,
    make_lens_space,
)
from lenslat.cli import canonical_q_tuples
from lenslat.oracle import gamma_bruteforce
from strategies import lens_spaces, q_tuples, subset_masks, units_mod


def all_masks(m):
    return [SubsetMask(bits, m) for bits in range(1 << m)]


# ---------------------------------------------------------------- LensSpace


def test_make_lens_space_basic():
    space = make_lens_space(7, (1, 2, 3))
    assert space.p == 7
    assert space.m == 3
    assert space.d == 5
    assert space.q == (1, 2, 3)


def test_q_reduced_mod_p():
    assert make_lens_space(5, (1, 9)).q == (1, 4)
    assert make_lens_space(5, (1, -1)).q == (1, 4)


def test_rejects_shared_factor():
    with pytest.raises(ValueError, match=r"q_2 = 2 .*gcd\(2, 4\)"):
        make_lens_space(4, (1, 2))


def test_rejects_short_q_and_bad_p():
    with pytest.raises(ValueError):
        make_lens_space(5, (1,))
    with pytest.raises(ValueError):
        make_lens_space(0, (1, 1))
    with pytest.raises(ValueError):
        make_lens_space(-3, (1, 1))


def test_p1_accepts_everything():
    space = make_lens_space(1, (3, 8))
    assert space.q == (0, 0)
    assert space.admits((17, -4))


def test_admits():
    space = make_lens_space(4, (1, 3))
    assert space.admits((1, 1))
    assert not space.admits((1, 0))
    with pytest.raises(ValueError):
        space.admits((1, 0, 0))


# ---------------------------------------------------------------- SubsetMask


def test_subset_mask_basics():
    full = SubsetMask.full(3)
    assert full.bits == 0b111 and full.u == 3
    assert SubsetMask.empty(3).u == 0
    mask = SubsetMask.from_indices([0, 2], 3)
    assert mask.bits == 0b101
    assert mask.indices() == (0, 2)
    assert mask.complement().indices() == (1,)
    assert mask.pick(("a", "b", "c")) == ("a", "c")


def test_subset_mask_validation():
    with pytest.raises(ValueError):
        SubsetMask(8, 3)
    with pytest.raises(ValueError):
        SubsetMask(-1, 3)
    with pytest.raises(ValueError):
        SubsetMask.from_indices([3], 3)


# ---------------------------------------------------------------- binom


@pytest.mark.parametrize(
    "pool, choose, expected",
    [(4, 2, 6), (1, 2, 0), (-1, 1, 0), (0, 0, 1), (5, 5, 1), (3, -1, 0), (6, 3, 20)],
)
def test_binom_values(pool, choose, expected):
    assert binom(pool, choose) == expected


def test_binom_matches_factorial_ratio():
    for pool in range(31):
        for choose in range(pool + 1):
            ratio = math.factorial(pool) // (
                math.factorial(choose) * math.factorial(pool - choose)
            )
            assert binom(pool, choose) == ratio


# ---------------------------------------------------------------- decompose


@pytest.mark.parametrize("h, p, expected", [(9, 4, (1, 2)), (0, 5, (0, 0)), (6, 1, (0, 6))])
def test_decompose_values(h, p, expected):
    assert decompose(h, p) == expected


@given(h=st.integers(0, 10**6), p=st.integers(1, 1000))
def test_decompose_roundtrip(h, p):
    k, n = decompose(h, p)
    assert h == k + n * p
    assert 0 <= k < p
    assert n >= 0


def test_decompose_rejects_negative():
    with pytest.raises(ValueError):
        decompose(-1, 3)


# ---------------------------------------------------------------- gamma


def test_gamma_spot_values():
    # brute-force verified: (1,2),(2,1),(-1,-2),(-2,-1) for L(3;1,1) at s=3
    s311 = make_lens_space(3, (1, 1))
    assert gamma(s311, SubsetMask.full(2), 3) == 4
    # (+-1, +-1) for L(2;1,1) at s=2
    s211 = make_lens_space(2, (1, 1))
    assert gamma(s211, SubsetMask.full(2), 2) == 4


def test_gamma_empty_subset():
    space = make_lens_space(6, (1, 5))
    empty = SubsetMask.empty(2)
    assert gamma(space, empty, 0) == 1
    assert gamma(space, empty, 1) == 0
    assert gamma(space, empty, 7) == 0


def test_gamma_rejects_negative_norm():
    space = make_lens_space(3, (1, 1))
    with pytest.raises(ValueError):
        gamma(space, SubsetMask.full(2), -1)


def test_gamma_rejects_wrong_mask_width():
    space = make_lens_space(3, (1, 1))
    with pytest.raises(ValueError):
        gamma(space, SubsetMask.full(3), 0)


def test_gamma_table_l211():
    space = make_lens_space(2, (1, 1))
    table = gamma_table(space)
    full = SubsetMask.full(2)
    assert table[SubsetMask.empty(2), 0] == 1
    assert table[SubsetMask(0b01, 2), 0] == 1
    assert table[SubsetMask(0b10, 2), 0] == 1
    assert table[full, 0] == 1
    assert table[full, 2] == 4
    # every other entry in range s <= 2 is zero
    for mask in all_masks(2):
        for s in range(1, 3):
            if (mask, s) != (full, 2):
                assert table[mask, s] == 0


def test_gamma_table_p1():
    space = make_lens_space(1, (1, 1))
    table = gamma_table(space)
    for mask in all_masks(2):
        assert table[mask, 0] == 1
        for s in range(1, 5):
            assert table[mask, s] == 0


def test_gamma_table_l311_matches_gamma_example():
    space = make_lens_space(3, (1, 1))
    assert gamma_table(space)[SubsetMask.full(2), 3] == 4


def test_gamma_table_matches_gamma_pointwise():
    for p, q in [(2, (1, 1)), (3, (1, 2)), (4, (1, 3)), (5, (2, 3))]:
        space = make_lens_space(p, q)
        table = gamma_table(space)
        for mask in all_masks(space.m):
            for s in range(space.m * (space.p - 1) + 2):
                assert table[mask, s] == gamma(space, mask, s)


def test_gamma_table_m_cap():
    space = make_lens_space(2, (1,) * 21)
    with pytest.raises(ValueError, match="m <= 20"):
        gamma_table(space)


def test_gamma_table_truncation():
    space = make_lens_space(3, (1, 1))
    table = gamma_table(space, s_max=2)
    full = SubsetMask.full(2)
    assert table[full, 2] == gamma(space, full, 2)
    assert table[full, 5] == 0  # above the box bound u*(p-1) = 4
    with pytest.raises(ValueError, match="truncated"):
        table.value(full, 3)  # materializable but not materialized


# ------------------------------------------------------------- properties


@given(space=lens_spaces(), data=st.data())
@settings(max_examples=150)
def test_gamma_even_for_positive_norm(space, data):
    mask = data.draw(subset_masks(space.m))
    s = data.draw(st.integers(1, space.m * (space.p - 1) + 2))
    assert gamma(space, mask, s) % 2 == 0


@given(space=lens_spaces(), data=st.data())
@settings(max_examples=100)
def test_gamma_zero_beyond_box(space, data):
    mask = data.draw(subset_masks(space.m))
    s = data.draw(st.integers(mask.u * (space.p - 1) + 1, mask.u * (space.p - 1) + 30))
    assert gamma(space, mask, s) == 0


@given(space=lens_spaces(p_max=7), data=st.data())
@settings(max_examples=100)
def test_gamma_invariances(space, data):
    p, m = space.p, space.m
    mask = data.draw(subset_masks(m))
    s = data.draw(st.integers(0, m * (p - 1)))
    reference = gamma(space, mask, s)

    # permuting the parameters together with the subset
    perm = data.draw(st.permutations(range(m)))
    permuted = make_lens_space(p, tuple(space.q[j] for j in perm))
    # coordinate i of the new space is old coordinate perm[i]
    new_bits = 0
    for i in range(m):
        if mask.bits >> perm[i] & 1:
            new_bits |= 1 << i
    assert gamma(permuted, SubsetMask(new_bits, m), s) == reference

    # shifting one parameter by p
    j = data.draw(st.integers(0, m - 1))
    shifted = make_lens_space(p, tuple(v + p if i == j else v for i, v in enumerate(space.q)))
    assert gamma(shifted, mask, s) == reference

    # negating one parameter
    negated = make_lens_space(p, tuple(-v if i == j else v for i, v in enumerate(space.q)))
    assert gamma(negated, mask, s) == reference

    # scaling all parameters by a unit
    c = data.draw(st.sampled_from(units_mod(p)))
    scaled = make_lens_space(p, tuple(c * v for v in space.q))
    assert gamma(scaled, mask, s) == reference


def test_gamma_matches_enumeration_exhaustive():
    # full small grid, every subset, every in-box norm
    for p in range(1, 6):
        for m in (2, 3):
            for q in canonical_q_tuples(p, m):
                space = make_lens_space(p, q)
                for mask in all_masks(m):
                    for s in range(mask.u * (p - 1) + 1):
                        assert gamma(space, mask, s) == gamma_bruteforce(space, mask, s)


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_gamma_matches_enumeration_property(data):
    p = data.draw(st.integers(1, 8))
    m = data.draw(st.integers(2, 4))
    space = make_lens_space(p, data.draw(q_tuples(p, m)))
    mask = data.draw(subset_masks(m))
    s = data.draw(st.integers(0, mask.u * (p - 1)))
    assert gamma(space, mask, s) == gamma_bruteforce(space, mask, s)
