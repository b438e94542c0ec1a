"""Tests for the exhaustive column census and the explicit constructions."""

import math

import pytest

from mincw import (
    BudgetError,
    DomainError,
    a_vector,
    census_max,
    census_max_folded,
    construct_double_unit_code,
    construct_projective_base_code,
    count_general,
    maxmin,
    minimal_codewords_bruteforce,
    projective_base_lb,
    to_systematic,
)


def test_census_full_rank_identity_code():
    res = census_max(3, 3)
    assert res.max_m == 3
    # 35 subsets of the 7 nonzero columns, 7 of them inside a plane
    assert res.codes_scanned == 28
    assert res.witness_strings() == ["001", "010", "100"]


def test_census_counts_only_full_rank_subsets():
    res = census_max(5, 3)
    # every 5-subset of the 7 nonzero vectors spans all of GF(2)^3
    assert res.codes_scanned == math.comb(7, 5)


def test_census_thread_count_does_not_change_result():
    lone = census_max(6, 4, threads=1)
    pooled = census_max(6, 4, threads=3)
    assert lone == pooled


def test_census_folded_small_values():
    assert census_max_folded(5, 3)[0] == 6
    assert census_max_folded(6, 3)[0] == 7
    value, raw = census_max_folded(7, 3)
    assert value == 7
    assert raw.max_m == 7
    assert raw.k == 3


def test_census_folded_matches_sweep_maximum():
    for n in range(4, 9):
        folded, _ = census_max_folded(n, 4)
        assert folded == maxmin(n, 4).value, n


def test_census_budget():
    with pytest.raises(BudgetError):
        census_max(5, 4, budget=10)
    res = census_max(5, 4, budget=10_000)
    assert res.max_m == maxmin(5, 4).value == 10


def test_census_guards():
    with pytest.raises(DomainError):
        census_max(6, 6)  # k above the envelope
    with pytest.raises(DomainError):
        census_max(11, 3)  # n above the envelope
    with pytest.raises(DomainError):
        census_max(2, 3)  # n below k
    with pytest.raises(DomainError):
        census_max(8, 3)  # more columns than nonzero patterns
    with pytest.raises(DomainError):
        census_max_folded(12, 4)  # fold would need a scan at n'=12


def test_double_unit_construction_count():
    for t in range(0, 4):
        for k in range(max(1, 2 * t), 9):
            code = construct_double_unit_code(k, t)
            assert code.n == k + t and code.k == k
            assert minimal_codewords_bruteforce(code).count == k + t, (k, t)


def test_projective_base_construction_count():
    for t in (1, 2, 3):
        for k in range(t + 1, 9):
            code = construct_projective_base_code(k, t)
            count = minimal_codewords_bruteforce(code).count
            assert count >= projective_base_lb(k, t), (k, t)
            vec = a_vector(to_systematic(code))
            assert count_general(vec) == count, (k, t)


def test_construction_guards():
    with pytest.raises(DomainError):
        construct_double_unit_code(3, 2)
    with pytest.raises(DomainError):
        construct_double_unit_code(4, -1)
    with pytest.raises(DomainError):
        construct_projective_base_code(2, 2)
    with pytest.raises(DomainError):
        construct_projective_base_code(3, 0)
