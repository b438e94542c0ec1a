"""Minimal-codeword enumeration, minimality tests, and code reduction."""

from __future__ import annotations

import random

import pytest

from mincw.codewords import (
    is_minimal_in,
    minimal_codewords_bruteforce,
    minimal_codewords_systematic,
    minimal_set_json,
    minimal_set_text,
    reduce_code,
)
from mincw.errors import BudgetError, DomainError
from mincw.gf2_core import BinaryCode, BitVec, parse_matrix


def test_tiny_example_has_all_three_words_minimal():
    code = parse_matrix("101\n011\n")
    ms = minimal_codewords_systematic(code)
    assert ms.count == 3
    assert ms.sorted_strings() == ["011", "101", "110"]
    for s in ms.sorted_strings():
        assert is_minimal_in(BitVec(3, int(s[::-1], 2)), code)


def test_is_minimal_in_guards():
    code = parse_matrix("101\n011\n")
    assert not is_minimal_in(BitVec(3, 0), code)
    with pytest.raises(DomainError, match="not a codeword"):
        is_minimal_in(BitVec(3, 0b001), code)
    with pytest.raises(DomainError, match="length"):
        is_minimal_in(BitVec(4, 0b0011), code)


def test_enumerators_agree(make_code):
    rng = random.Random(31)
    for _ in range(60):
        k = rng.randint(1, 8)
        n = rng.randint(k, min(14, k + 5))
        code = make_code(rng, n, k)
        sy = minimal_codewords_systematic(code)
        bf = minimal_codewords_bruteforce(code)
        assert sy.words == bf.words
        assert sy.count == bf.count


def test_systematic_budget_error():
    rng = random.Random(32)
    from tests.conftest import random_full_rank_code

    code = random_full_rank_code(rng, 12, 8)
    with pytest.raises(BudgetError):
        minimal_codewords_systematic(code, budget=3)


def test_reports_shape(make_code):
    code = parse_matrix("101\n011\n")
    ms = minimal_codewords_systematic(code)
    obj = minimal_set_json(ms)
    assert (obj["n"], obj["k"], obj["t"], obj["count"]) == (3, 2, 1, 3)
    assert obj["words"] == ["011", "101", "110"]
    text = minimal_set_text(ms)
    assert text.endswith("count = 3\n")
    assert text.splitlines()[:3] == ["011", "101", "110"]


def _count(code: BinaryCode) -> int:
    return minimal_codewords_bruteforce(code).count


def test_reduce_zero_and_duplicate_columns():
    base = parse_matrix("101\n011\n")
    padded = parse_matrix("1001\n0101\n")  # column 3 is identically zero
    comps, trace = reduce_code(padded)
    kinds = [kind for kind, _ in trace.steps]
    assert "zero-column" in kinds
    assert trace.delta == 0
    assert sum(_count(c) for c in comps) == _count(padded) == _count(base)

    dup = parse_matrix("1101\n0011\n")  # columns 3 and 4 coincide
    comps, trace = reduce_code(dup)
    assert any(kind == "duplicate-column" for kind, _ in trace.steps)
    assert sum(_count(c) for c in comps) + trace.delta == _count(dup)


def test_reduce_weight_one_coordinate():
    # coordinate 3 carries the unit codeword given by row 3; all column
    # patterns are distinct so no other reduction fires first
    code = parse_matrix("1001\n0101\n0010\n")
    comps, trace = reduce_code(code)
    assert any(kind == "weight-one-coordinate" for kind, _ in trace.steps)
    assert trace.delta >= 1
    assert sum(_count(c) for c in comps) + trace.delta == _count(code)


def test_reduce_direct_sum_split():
    code = parse_matrix("110000\n011000\n000110\n000011\n")
    comps, trace = reduce_code(code)
    assert any(kind == "direct-sum-split" for kind, _ in trace.steps)
    assert len(comps) >= 2
    assert sum(_count(c) for c in comps) + trace.delta == _count(code)


def test_reduce_identity_on_random_codes(make_code):
    rng = random.Random(33)
    for _ in range(60):
        k = rng.randint(1, 6)
        n = rng.randint(k, k + 5)
        code = make_code(rng, n, k)
        comps, trace = reduce_code(code)
        assert sum(_count(c) for c in comps) + trace.delta == _count(code)
        for comp in comps:
            again, inner_trace = reduce_code(comp)
            assert again == (comp,) and not inner_trace.steps


def test_append_zero_or_duplicate_column_keeps_count(make_code):
    rng = random.Random(34)
    for _ in range(40):
        k = rng.randint(1, 6)
        n = rng.randint(k, k + 4)
        code = make_code(rng, n, k)
        m = _count(code)
        with_zero = BinaryCode(
            n + 1, k, tuple(BitVec(n + 1, r.bits) for r in code.rows)
        )
        assert _count(with_zero) == m
        j = rng.randrange(n)
        dup_rows = tuple(
            BitVec(n + 1, r.bits | (r.bits >> j & 1) << n) for r in code.rows
        )
        assert _count(BinaryCode(n + 1, k, dup_rows)) == m
