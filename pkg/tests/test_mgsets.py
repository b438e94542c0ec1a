"""Catalog of minimal generating subsets of GF(2)^t and its predicates."""

from __future__ import annotations

import itertools

import pytest

from mincw.errors import DomainError
from mincw.gf2_core import BinaryCode, BitVec
from mincw.codewords import is_minimal_in
from mincw.mgsets import (
    build_catalog,
    is_mg_pair,
    is_minimal_generating,
    projective_bases,
)

CATALOG_SIZES = {
    2: {2: 2, 3: 1},
    3: {2: 15, 3: 19, 4: 7},
    4: {2: 80, 3: 243, 4: 329, 5: 168},
    5: {2: 375, 3: 2615, 4: 9765, 5: 18648, 6: 13888},
}


@pytest.mark.parametrize("t", sorted(CATALOG_SIZES))
def test_catalog_sizes(t):
    cat = build_catalog(t)
    assert cat.sizes() == CATALOG_SIZES[t]


def test_catalog_t2_exact_sets():
    by_size = build_catalog(2).int_sets_by_size()
    assert by_size[2] == ((1, 3), (2, 3))
    assert by_size[3] == ((1, 2, 3),)


def test_catalog_rejects_out_of_range_t():
    for t in (0, 1, 6):
        with pytest.raises(DomainError):
            build_catalog(t)


def _sum_word_is_minimal(t: int, subset: tuple[int, ...]) -> bool:
    """Independent oracle: place one generator row per subset element and ask
    whether the sum of all rows is a minimal codeword of that code."""
    k = len(subset)
    n = k + t
    rows = tuple(BitVec(n, (1 << i) | (tau << k)) for i, tau in enumerate(subset))
    code = BinaryCode(n, k, rows)
    total = 0
    for r in rows:
        total ^= r.bits
    return is_minimal_in(BitVec(n, total), code)


@pytest.mark.parametrize("t", [2, 3, 4])
def test_catalog_matches_minimality_oracle(t):
    accepted = set(build_catalog(t).all_int_sets())
    nonzero = range(1, 1 << t)
    for size in range(2, t + 2):
        for subset in itertools.combinations(nonzero, size):
            assert (subset in accepted) == _sum_word_is_minimal(t, subset), subset


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_full_size_sets_are_projective_bases(t):
    full = build_catalog(t).int_sets_by_size()[t + 1]
    for subset in full:
        total = 0
        for v in subset:
            total ^= v
        assert total == 0
        for size in range(1, len(subset)):
            for sub in itertools.combinations(subset, size):
                acc = 0
                for v in sub:
                    acc ^= v
                assert acc != 0, (subset, sub)
    assert projective_bases(t) and len(projective_bases(t)) == len(full)


def test_predicate_wrappers_accept_strings_and_bitvecs():
    assert is_mg_pair(BitVec(2, 1), BitVec(2, 3))
    assert not is_mg_pair(BitVec(2, 1), BitVec(2, 2))
    assert is_minimal_generating(["10", "01", "11"])
    assert not is_minimal_generating(["10", "00"])
    assert is_minimal_generating([BitVec(3, 5)])
