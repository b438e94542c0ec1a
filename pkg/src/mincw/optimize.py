"""Exact maximization of the minimal-codeword count over all codes of given
dimensions, closed forms, symmetric-function optimization, and the two
conjecture checkers.

The count depends only on the multiplicity vector of information parts, and
every multiplicity vector with total k is realized by some [k+t, k] code, so
the maximum over codes equals the maximum of the counting formula over
compositions of k into 2^t parts. Zero-index rows never help and never hurt
more than their own singleton contribution, so the search fixes the zero
index to 0 and folds it back by an exact recurrence over the remaining sum.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from . import kernels
from .census import census_max_folded
from .counting import AVector, count_general, count_t3_dense
from .errors import BudgetError, DomainError
from .mgsets import build_catalog

__all__ = [
    "MaxMinResult",
    "Composition",
    "maxmin",
    "maxmin_closed_t1",
    "maxmin_closed_t2",
    "symmetric_opt",
    "conjectured_t3_vector",
    "check_conjecture_t3",
    "check_conjecture_leading",
    "canonicalize_avector",
    "is_canonical_avector",
    "table",
]

MAX_T = 5
DEFAULT_SWEEP_BUDGET = 100_000_000
EXHAUSTIVE_T3_KMAX = 40
LOCAL_SEARCH_RESTARTS = 64


@dataclass(frozen=True)
class MaxMinResult:
    """Maximum count for an (n, k) pair with a witness multiplicity vector.

    method is one of closed-form-t0, closed-form-t1, closed-form-t2,
    formula-max, census. When exact is False the value is only the best
    found before the work budget ran out.
    """

    n: int
    k: int
    t: int
    value: int
    witness: AVector | None
    method: str
    exact: bool = True


@dataclass(frozen=True)
class Composition:
    """Ordered non-negative integer parts with their sum."""

    parts: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise DomainError("negative part")
        if sum(self.parts) != self.total:
            raise DomainError("total does not match parts")

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Composition":
        return cls(tuple(parts), sum(parts))


_plan_cache: dict[tuple[int, bool], tuple[int, bool, list[list[tuple[int, ...]]]]] = {}


def _sweep_plan(t: int, leading_only: bool) -> tuple[int, bool, list[list[tuple[int, ...]]]]:
    """(nvals, pair_terms, by_last) for the composition sweep at this t.

    by_last[d] lists, for each monomial whose largest index is d, the tuple
    of its smaller indices; the sweep multiplies each by a_d incrementally.
    """
    key = (t, leading_only)
    if key in _plan_cache:
        return _plan_cache[key]
    nvals = (1 << t) - 1
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(nvals + 1)]
    if t >= 2:
        catalog = build_catalog(t)
        int_sets = catalog.int_sets_by_size()
        sizes = [t + 1] if leading_only else sorted(int_sets)
        for size in sizes:
            for subset in int_sets[size]:
                last = subset[-1]
                by_last[last].append(subset[:-1])
    plan = (nvals, not leading_only, by_last)
    _plan_cache[key] = plan
    return plan


def _run_sweep(
    t: int, k_max: int, leading_only: bool, budget: int | None
) -> tuple[list[int], list[tuple[int, ...] | None], int, bool]:
    nvals, pair_terms, by_last = _sweep_plan(t, leading_only)
    return kernels.composition_sweep(nvals, k_max, pair_terms, by_last, budget)


def predicted_sweep_leaves(t: int, k_max: int) -> int:
    """Number of compositions visited: all tuples over 2^t - 1 indices with
    sum at most k_max.
    """
    m = (1 << t) - 1
    return math.comb(k_max + m, m)


def _witness_from(t: int, total_free: int, tail: tuple[int, ...], k: int) -> AVector:
    dense = [0] * (1 << t)
    dense[0] = k - total_free
    for idx, val in enumerate(tail):
        dense[idx + 1] = val
    return AVector.make(t, dense)


def maxmin(n: int, k: int, budget: int | None = DEFAULT_SWEEP_BUDGET) -> MaxMinResult:
    """Exact maximum count over all [n, k] binary codes, for t = n-k <= 5,
    with the lexicographically smallest maximizing multiplicity vector.

    If the composition sweep hits the budget, the best value found so far is
    returned with exact=False.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    t = n - k
    if t < 0:
        raise DomainError(f"k={k} exceeds n={n}")
    if t > MAX_T:
        raise DomainError(
            f"exhaustive maximization supports n-k <= {MAX_T}, got {t}"
        )
    if t == 0:
        return MaxMinResult(
            n, k, 0, k, AVector.make(0, [k]), "closed-form-t0", True
        )
    best, wit, _, truncated = _run_sweep(t, k, False, budget)
    j_star = -1
    val_star = -1
    for j in range(k + 1):
        if best[j] >= 0 and best[j] >= val_star:
            val_star = best[j]
            j_star = j
    if j_star < 0:
        raise BudgetError(f"budget {budget} too small to evaluate any composition")
    tail = wit[j_star]
    assert tail is not None
    return MaxMinResult(
        n,
        k,
        t,
        k + val_star,
        _witness_from(t, j_star, tail, k),
        "formula-max",
        not truncated,
    )


def maxmin_closed_t1(k: int) -> int:
    """Closed form at t=1: C(k+1, 2)."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    return math.comb(k + 1, 2)


def maxmin_closed_t2(k: int) -> int:
    """Closed form at t=2: k + k(k-1)/2 + floor((k-1)/3)floor(k/3)floor((k+1)/3)."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    return (
        k
        + k * (k - 1) // 2
        + ((k - 1) // 3) * (k // 3) * ((k + 1) // 3)
    )


def _closed_t1_witness(k: int) -> AVector:
    return AVector.make(1, [0, k])


def _closed_t2_witness(k: int) -> AVector:
    parts = [(k - 1 + i) // 3 for i in range(3)]
    return AVector.make(2, [0, parts[0], parts[1], parts[2] + 1])


def symmetric_opt(
    m: int, r: int, s: int, mode: str = "integer"
) -> tuple[Composition, int] | tuple[tuple[Fraction, ...], Fraction]:
    """Maximize the elementary symmetric polynomial e_s over r non-negative
    parts summing to m.

    Integer mode returns the optimal near-equal assignment
    x_i = floor((m+i-1)/r) and its e_s value; real mode returns the uniform
    assignment m/r and its value C(r, s) (m/r)^s.
    """
    if not 1 <= s <= r:
        raise DomainError(f"need 1 <= s <= r, got s={s}, r={r}")
    if m < 0:
        raise DomainError(f"need m >= 0, got {m}")
    if mode == "integer":
        parts = [(m + i) // r for i in range(r)]
        coeffs = [1] + [0] * s
        for x in parts:
            for i in range(s, 0, -1):
                coeffs[i] += coeffs[i - 1] * x
        return Composition.of(parts), coeffs[s]
    if mode == "real":
        u = Fraction(m, r)
        return tuple([u] * r), math.comb(r, s) * u**s
    raise DomainError(f"unknown mode {mode!r}")


_T3_CASES = {
    0: (0, 0, 0, 1, 1, 1, 1),
    1: (0, 0, 0, 1, 1, 1, 2),
    2: (0, 0, 0, 1, 1, 2, 2),
    3: (0, 0, 0, 1, 2, 2, 2),
    4: (1, 0, 0, 2, 2, 1, 2),
    5: (1, 0, 0, 2, 2, 2, 2),
    6: (1, 1, 0, 2, 2, 2, 2),
}

# Positions of the published 7-tuple order (unit vectors, then weight-2
# vectors, then all-ones) within the dense index order 1..7.
_T3_TUPLE_INDEX = (1, 2, 4, 3, 5, 6, 7)


def conjectured_t3_vector(k: int) -> AVector:
    """The conjectured maximizing multiplicity vector at t=3: a seven-case
    table up to k=12, then a quarter-split rule supported on the three unit
    patterns and the all-ones pattern, largest part on all-ones. Defined
    for k >= 4.
    """
    if k < 4:
        raise DomainError(f"conjectured vector defined for k >= 4, got {k}")
    dense = [0] * 8
    if k <= 12:
        l, r = divmod(k - 4, 7)
        for pos, base in zip(_T3_TUPLE_INDEX, _T3_CASES[r]):
            dense[pos] = base + l
    else:
        dense[1] = (k - 1) // 4
        dense[2] = (k + 1) // 4
        dense[4] = (k + 2) // 4
        dense[7] = k // 4 + 1
    return AVector.make(3, dense)


def _random_composition(rng: random.Random, k: int, parts: int) -> list[int]:
    cuts = sorted(rng.randrange(k + 1) for _ in range(parts - 1))
    bounds = [0] + cuts + [k]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def _hill_climb_t3(start: list[int], state: dict) -> tuple[int, list[int]]:
    """Steepest-ascent climb on count_t3 moving one unit between indices;
    deterministic tie-breaks. state carries the evaluation budget.
    """
    cur = list(start)
    cur_val = count_t3_dense(cur)
    state["evals"] += 1
    while True:
        best_val = cur_val
        best_move = None
        for i in range(8):
            if cur[i] == 0:
                continue
            cur[i] -= 1
            for j in range(8):
                if j == i:
                    continue
                cur[j] += 1
                val = count_t3_dense(cur)
                state["evals"] += 1
                if val > best_val:
                    best_val = val
                    best_move = (i, j)
                cur[j] -= 1
            cur[i] += 1
            if state["limit"] is not None and state["evals"] > state["limit"]:
                state["out_of_budget"] = True
                return cur_val, cur
        if best_move is None:
            return cur_val, cur
        i, j = best_move
        cur[i] -= 1
        cur[j] += 1
        cur_val = best_val


def check_conjecture_t3(
    k_min: int,
    k_max: int,
    mode: str = "auto",
    budget: int | None = DEFAULT_SWEEP_BUDGET,
    seed: int = 0,
    restarts: int = LOCAL_SEARCH_RESTARTS,
    eval_budget: int | None = None,
) -> dict:
    """Compare the t=3 search maximum against the conjectured vector's value
    for each k in [k_min, k_max].

    Exhaustive mode (k_max <= 40) proves the maximum by a full composition
    sweep. Local-search mode climbs from the conjectured point plus seeded
    random restarts; it can only support or refute, never prove. Auto splits
    the range at 40. A k whose climbs run out of eval_budget is reported
    inconclusive, never as verified.
    """
    if k_min < 4:
        raise DomainError(f"conjecture defined for k >= 4, got k_min={k_min}")
    if k_max < k_min:
        raise DomainError(f"empty range [{k_min}, {k_max}]")
    if mode not in ("auto", "exhaustive", "local-search"):
        raise DomainError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and k_max > EXHAUSTIVE_T3_KMAX:
        raise DomainError(
            f"exhaustive mode supports k_max <= {EXHAUSTIVE_T3_KMAX}, got {k_max}"
        )
    if mode == "auto":
        ex_hi = min(k_max, EXHAUSTIVE_T3_KMAX)
        lo_from = max(k_min, EXHAUSTIVE_T3_KMAX + 1)
    elif mode == "exhaustive":
        ex_hi, lo_from = k_max, k_max + 1
    else:
        ex_hi, lo_from = k_min - 1, k_min

    exhaustive_cases = []
    if ex_hi >= k_min:
        best, wit, _, truncated = _run_sweep(3, ex_hi, False, budget)
        if truncated:
            raise BudgetError(
                f"sweep budget {budget} too small for exhaustive check to k={ex_hi}"
            )
        for k in range(k_min, ex_hi + 1):
            conj = conjectured_t3_vector(k)
            conj_val = count_t3_dense(conj.as_tuple())
            max_val = k + best[k]
            tail = wit[k]
            assert tail is not None
            argmax = _witness_from(3, k, tail, k)
            exhaustive_cases.append(
                {
                    "k": k,
                    "max": max_val,
                    "conjectured_value": conj_val,
                    "equal": max_val == conj_val,
                    "argmax": list(argmax.as_tuple()),
                    "conjectured": list(conj.as_tuple()),
                }
            )

    local_cases = []
    if lo_from <= k_max:
        state = {"evals": 0, "limit": eval_budget, "out_of_budget": False}
        for k in range(lo_from, k_max + 1):
            conj = conjectured_t3_vector(k)
            conj_val = count_t3_dense(conj.as_tuple())
            rng = random.Random((seed << 20) ^ k)
            starts = [list(conj.as_tuple())]
            for _ in range(restarts):
                starts.append(_random_composition(rng, k, 8))
            found = -1
            found_at: list[int] = []
            inconclusive = False
            for start in starts:
                val, arg = _hill_climb_t3(start, state)
                if val > found:
                    found = val
                    found_at = arg
                if state["out_of_budget"]:
                    inconclusive = True
                    break
            if inconclusive:
                verdict = "inconclusive"
            elif found > conj_val:
                verdict = "exceeded"
            else:
                verdict = "supported"
            local_cases.append(
                {
                    "k": k,
                    "best_found": found,
                    "conjectured_value": conj_val,
                    "verdict": verdict,
                    "best_found_at": list(found_at),
                    "starts": len(starts),
                }
            )
            if inconclusive:
                for k_rest in range(k + 1, k_max + 1):
                    local_cases.append(
                        {
                            "k": k_rest,
                            "best_found": None,
                            "conjectured_value": None,
                            "verdict": "inconclusive",
                            "best_found_at": None,
                            "starts": 0,
                        }
                    )
                break

    ok = all(c["equal"] for c in exhaustive_cases) and all(
        c["verdict"] == "supported" for c in local_cases
    )
    return {
        "conjecture": "t3",
        "k_min": k_min,
        "k_max": k_max,
        "mode": mode,
        "seed": seed,
        "exhaustive_cases": exhaustive_cases,
        "local_cases": local_cases,
        "ok": ok,
        "note": (
            "exhaustive cases are proved maxima; local-search cases are "
            "evidence only"
        ),
    }


def check_conjecture_leading(
    t: int,
    k_min: int,
    k_max: int,
    budget: int | None = DEFAULT_SWEEP_BUDGET,
) -> dict:
    """Check that the integer maximum of the top-degree part equals the
    near-equal product on a projective basis, for each k in [k_min, k_max].

    Value equality proves a maximizer of the conjectured shape exists; the
    report also says whether the lexicographically smallest argmax itself
    sits on a projective basis with parts differing by at most one.
    """
    if t not in (2, 3):
        raise DomainError(f"leading-term check supports t in {{2, 3}}, got {t}")
    if not 0 <= k_min <= k_max:
        raise DomainError(f"bad range [{k_min}, {k_max}]")
    best, wit, _, truncated = _run_sweep(t, k_max, True, budget)
    if truncated:
        raise BudgetError(
            f"sweep budget {budget} too small for leading-term check to k={k_max}"
        )
    bases = {
        frozenset(s) for s in build_catalog(t).int_sets_by_size()[t + 1]
    }
    cases = []
    for k in range(k_min, k_max + 1):
        expected_parts = [(k + i) // (t + 1) for i in range(t + 1)]
        expected = math.prod(expected_parts)
        max_val = best[k]
        tail = wit[k]
        assert tail is not None
        dense = [0] + list(tail)
        on_base: bool | None = None
        if max_val > 0:
            support = frozenset(i for i, v in enumerate(dense) if v > 0)
            positive = [v for v in dense if v > 0]
            on_base = support in bases and max(positive) - min(positive) <= 1
        cases.append(
            {
                "k": k,
                "max": max_val,
                "expected": expected,
                "equal": max_val == expected,
                "argmax": dense,
                "argmax_on_near_equal_base": on_base,
            }
        )
    return {
        "conjecture": f"leading-t{t}",
        "t": t,
        "k_min": k_min,
        "k_max": k_max,
        "cases": cases,
        "ok": all(c["equal"] for c in cases),
    }


def _permute_dense(dense: Sequence[int], perm: Sequence[int], t: int) -> tuple[int, ...]:
    out = [0] * len(dense)
    for tau, c in enumerate(dense):
        new_tau = 0
        for j in range(t):
            if tau >> j & 1:
                new_tau |= 1 << perm[j]
        out[new_tau] = c
    return tuple(out)


def canonicalize_avector(a: AVector) -> AVector:
    """Lexicographically smallest dense form over all coordinate
    permutations of the t bit positions. Guarded to t <= 5.
    """
    if a.t > MAX_T:
        raise DomainError(f"canonicalization guarded to t <= {MAX_T}")
    dense = a.as_tuple()
    best = min(_permute_dense(dense, perm, a.t) for perm in permutations(range(a.t)))
    return AVector.make(a.t, list(best))


def is_canonical_avector(a: AVector) -> bool:
    return canonicalize_avector(a).items == a.items


def _max_feasible_k(t: int, k_needed: int, budget: int | None) -> int:
    if budget is None:
        return k_needed
    k = k_needed
    while k >= 0 and predicted_sweep_leaves(t, k) > budget:
        k -= 1
    return k


def table(
    n_max: int,
    t_cap: int = MAX_T,
    budget: int | None = DEFAULT_SWEEP_BUDGET,
    threads: int = 1,
) -> dict[tuple[int, int], MaxMinResult | None]:
    """Grid of maximum counts for 1 <= k <= n <= n_max.

    Cells with t = n-k <= t_cap use closed forms (t <= 2) or one shared
    composition sweep per t; cells beyond t_cap fall back to the folded
    census when it fits its envelope (k <= 3 at any n, else n <= 10 and
    k <= 5). Remaining cells are None. Sweeps larger than the budget make
    the affected cells census-or-None rather than returning partial values.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    t_cap = min(t_cap, MAX_T)
    out: dict[tuple[int, int], MaxMinResult | None] = {}
    sweeps: dict[int, tuple[list[int], list[tuple[int, ...] | None], int]] = {}
    for t in range(3, t_cap + 1):
        k_needed = n_max - t
        if k_needed < 1:
            continue
        k_fit = _max_feasible_k(t, k_needed, budget)
        if k_fit >= 1:
            best, wit, _, truncated = _run_sweep(t, k_fit, False, None)
            assert not truncated
            sweeps[t] = (best, wit, k_fit)
    census_cache: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            t = n - k
            cell: MaxMinResult | None = None
            if t == 0:
                cell = MaxMinResult(
                    n, k, 0, k, AVector.make(0, [k]), "closed-form-t0", True
                )
            elif t == 1:
                cell = MaxMinResult(
                    n, k, 1, maxmin_closed_t1(k), _closed_t1_witness(k),
                    "closed-form-t1", True,
                )
            elif t == 2:
                cell = MaxMinResult(
                    n, k, 2, maxmin_closed_t2(k), _closed_t2_witness(k),
                    "closed-form-t2", True,
                )
            elif t <= t_cap and t in sweeps and k <= sweeps[t][2]:
                best, wit, _ = sweeps[t]
                j_star = 0
                val_star = best[0]
                for j in range(1, k + 1):
                    if best[j] >= val_star:
                        val_star = best[j]
                        j_star = j
                tail = wit[j_star]
                assert tail is not None
                cell = MaxMinResult(
                    n, k, t, k + val_star,
                    _witness_from(t, j_star, tail, k),
                    "formula-max", True,
                )
            elif k <= 3 or (k <= 5 and n <= 10):
                cap = min(n, (1 << k) - 1)
                key = (cap, k)
                if key not in census_cache:
                    value, _ = census_max_folded(cap, k, None, threads)
                    census_cache[key] = value
                cell = MaxMinResult(
                    n, k, t, census_cache[key], None, "census", True
                )
            out[(n, k)] = cell
    return out
