"""Tests for exact maximization, closed forms, and conjecture checkers."""

import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from mincw import (
    AVector,
    BudgetError,
    Composition,
    DomainError,
    canonicalize_avector,
    census_max_folded,
    check_conjecture_leading,
    check_conjecture_t3,
    conjectured_t3_vector,
    count_general,
    is_canonical_avector,
    maxmin,
    maxmin_closed_t1,
    maxmin_closed_t2,
    symmetric_opt,
    table,
)

# Maxima for every 1 <= k <= n <= 6, cross-checked against the exhaustive
# column census in test_census.py.
EXPECTED_SMALL_GRID = {
    1: (1,),
    2: (1, 2),
    3: (1, 3, 3),
    4: (1, 3, 6, 4),
    5: (1, 3, 6, 10, 5),
    6: (1, 3, 7, 11, 15, 6),
}


def test_maxmin_small_grid():
    for n, row in EXPECTED_SMALL_GRID.items():
        for k, want in enumerate(row, start=1):
            res = maxmin(n, k)
            assert (res.n, res.k, res.t) == (n, k, n - k)
            assert res.value == want, (n, k)
            assert res.exact is True


def test_maxmin_pinned_cells():
    res = maxmin(11, 9)
    assert res.value == 63
    assert res.method == "formula-max"
    assert res.witness is not None
    assert res.witness.as_tuple() == (0, 2, 3, 4)

    res = maxmin(5, 3)
    assert res.value == 6
    assert res.witness.as_tuple() == (0, 0, 0, 3)

    assert maxmin(12, 8).value == 103


def test_maxmin_witness_value_consistency():
    for n, k in [(6, 3), (7, 4), (8, 5), (9, 5), (10, 6)]:
        res = maxmin(n, k)
        assert res.witness is not None
        assert count_general(res.witness) == res.value


def test_maxmin_t0_identity_code():
    res = maxmin(4, 4)
    assert res.value == 4
    assert res.method == "closed-form-t0"
    assert res.witness.as_tuple() == (4,)


def test_maxmin_matches_census_for_tiny_k():
    for k in (1, 2, 3):
        for n in range(k, min(8, k + 5) + 1):
            cap = min(n, (1 << k) - 1)
            folded, _ = census_max_folded(cap, k)
            assert maxmin(n, k).value == folded, (n, k)


def test_maxmin_domain_guards():
    with pytest.raises(DomainError):
        maxmin(5, 0)
    with pytest.raises(DomainError):
        maxmin(3, 4)
    with pytest.raises(DomainError):
        maxmin(10, 4)  # n - k = 6 beyond the sweep guard


def test_maxmin_budget_handling():
    with pytest.raises(BudgetError):
        maxmin(5, 3, budget=0)
    exact = maxmin(7, 4)
    truncated = maxmin(7, 4, budget=5)
    assert truncated.exact is False
    assert truncated.value <= exact.value
    assert truncated.value >= 4  # at least the singleton contribution


def test_closed_forms_match_search():
    for k in range(2, 11):
        assert maxmin_closed_t1(k) == maxmin(k + 1, k).value
    for k in range(1, 11):
        assert maxmin_closed_t2(k) == maxmin(k + 2, k).value
    with pytest.raises(DomainError):
        maxmin_closed_t1(0)
    with pytest.raises(DomainError):
        maxmin_closed_t2(0)


def test_closed_t1_is_binomial():
    for k in range(1, 30):
        assert maxmin_closed_t1(k) == (k + 1) * k // 2


def _brute_symmetric_max(m, r, s):
    best = -1
    for parts in product(range(m + 1), repeat=r):
        if sum(parts) != m:
            continue
        val = sum(
            _prod(parts[i] for i in idx) for idx in combinations(range(r), s)
        )
        best = max(best, val)
    return best


def _prod(vals):
    out = 1
    for v in vals:
        out *= v
    return out


def test_symmetric_opt_integer_matches_bruteforce():
    for r in (2, 3, 4):
        for s in range(1, r + 1):
            for m in range(0, 9):
                comp, val = symmetric_opt(m, r, s)
                assert sum(comp.parts) == m
                assert val == _brute_symmetric_max(m, r, s), (m, r, s)


def test_symmetric_opt_real_mode():
    parts, val = symmetric_opt(7, 3, 3, mode="real")
    assert parts == (Fraction(7, 3),) * 3
    assert val == Fraction(343, 27)
    parts, val = symmetric_opt(5, 4, 2, mode="real")
    assert val == 6 * Fraction(5, 4) ** 2


def test_symmetric_opt_guards():
    with pytest.raises(DomainError):
        symmetric_opt(5, 3, 0)
    with pytest.raises(DomainError):
        symmetric_opt(5, 3, 4)
    with pytest.raises(DomainError):
        symmetric_opt(-1, 3, 2)
    with pytest.raises(DomainError):
        symmetric_opt(5, 3, 2, mode="exactish")


def test_conjectured_t3_vector_shape():
    with pytest.raises(DomainError):
        conjectured_t3_vector(3)
    for k in range(4, 61):
        vec = conjectured_t3_vector(k)
        assert vec.t == 3
        assert sum(vec.as_tuple()) == k
        assert vec.as_tuple()[0] in (0, 1, 2)


def test_conjectured_t3_vector_is_optimal_small():
    for k in range(4, 13):
        conj = conjectured_t3_vector(k)
        assert count_general(conj) == maxmin(k + 3, k).value, k


def test_check_conjecture_t3_exhaustive():
    report = check_conjecture_t3(4, 10)
    assert report["ok"] is True
    assert report["local_cases"] == []
    ks = [c["k"] for c in report["exhaustive_cases"]]
    assert ks == list(range(4, 11))
    for case in report["exhaustive_cases"]:
        assert case["equal"] is True
        assert case["max"] == case["conjectured_value"]
        assert sum(case["argmax"]) == case["k"]


def test_check_conjecture_t3_local_search():
    report = check_conjecture_t3(
        5, 7, mode="local-search", seed=3, restarts=6
    )
    assert report["ok"] is True
    assert report["exhaustive_cases"] == []
    for case in report["local_cases"]:
        assert case["verdict"] == "supported"
        assert case["best_found"] == case["conjectured_value"]
        assert case["starts"] == 7


def test_check_conjecture_t3_eval_budget_is_honest():
    report = check_conjecture_t3(
        5, 7, mode="local-search", restarts=2, eval_budget=1
    )
    assert report["ok"] is False
    verdicts = [c["verdict"] for c in report["local_cases"]]
    assert verdicts == ["inconclusive"] * 3


def test_check_conjecture_t3_guards():
    with pytest.raises(DomainError):
        check_conjecture_t3(3, 10)
    with pytest.raises(DomainError):
        check_conjecture_t3(6, 5)
    with pytest.raises(DomainError):
        check_conjecture_t3(4, 10, mode="annealing")
    with pytest.raises(DomainError):
        check_conjecture_t3(4, 50, mode="exhaustive")
    with pytest.raises(BudgetError):
        check_conjecture_t3(4, 20, mode="exhaustive", budget=10)


def test_check_conjecture_leading_t2():
    report = check_conjecture_leading(2, 3, 12)
    assert report["ok"] is True
    for case in report["cases"]:
        k = case["k"]
        assert case["expected"] == (k // 3) * ((k + 1) // 3) * ((k + 2) // 3)
        assert case["equal"] is True
        if case["max"] > 0:
            assert case["argmax_on_near_equal_base"] is True


def test_check_conjecture_leading_t3():
    report = check_conjecture_leading(3, 4, 10)
    assert report["ok"] is True
    for case in report["cases"]:
        if case["max"] > 0:
            assert case["argmax_on_near_equal_base"] is True


def test_check_conjecture_leading_guards():
    with pytest.raises(DomainError):
        check_conjecture_leading(1, 2, 5)
    with pytest.raises(DomainError):
        check_conjecture_leading(4, 2, 5)
    with pytest.raises(DomainError):
        check_conjecture_leading(2, 5, 4)
    with pytest.raises(BudgetError):
        check_conjecture_leading(2, 3, 40, budget=3)


def test_canonicalize_avector_is_permutation_invariant():
    rng = random.Random(20240817)
    for _ in range(40):
        t = rng.choice((2, 3))
        dense = [rng.randrange(4) for _ in range(1 << t)]
        a = AVector.make(t, dense)
        canon = canonicalize_avector(a)
        assert is_canonical_avector(canon)
        assert count_general(canon) == count_general(a)
        # permuting coordinates never changes the canonical form
        perm = list(range(t))
        rng.shuffle(perm)
        permuted = [0] * (1 << t)
        for tau, c in enumerate(dense):
            new_tau = 0
            for j in range(t):
                if tau >> j & 1:
                    new_tau |= 1 << perm[j]
            permuted[new_tau] += c
        b = AVector.make(t, permuted)
        assert canonicalize_avector(b).as_tuple() == canon.as_tuple()


def test_canonicalize_guard():
    with pytest.raises(DomainError):
        canonicalize_avector(AVector.make(6, {63: 1}))


def test_composition_validation():
    comp = Composition.of([1, 2, 3])
    assert comp.total == 6
    with pytest.raises(DomainError):
        Composition((1, -1), 0)
    with pytest.raises(DomainError):
        Composition((1, 2), 4)


def test_table_small():
    grid = table(6)
    for n, row in EXPECTED_SMALL_GRID.items():
        for k, want in enumerate(row, start=1):
            cell = grid[(n, k)]
            assert cell is not None
            assert cell.value == want, (n, k)
    assert grid[(3, 3)].method == "closed-form-t0"
    assert grid[(3, 2)].method == "closed-form-t1"
    assert grid[(6, 4)].method == "closed-form-t2"
    assert grid[(6, 3)].method == "formula-max"
    for cell in grid.values():
        if cell is not None and cell.witness is not None:
            assert count_general(cell.witness) == cell.value


def test_table_t_cap_falls_back_to_census():
    capped = table(7, t_cap=2)
    full = table(7)
    for key, cell in full.items():
        other = capped[key]
        assert other is not None
        assert other.value == cell.value, key
    assert capped[(7, 4)].method == "census"
    assert full[(7, 4)].method == "formula-max"


def test_table_guard():
    with pytest.raises(DomainError):
        table(0)
