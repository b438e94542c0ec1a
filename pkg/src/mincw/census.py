"""Independent oracle: exhaustive scan of small binary codes, plus the two
explicit code constructions whose counts have closed forms.

The scan iterates n-element subsets of the nonzero vectors of GF(2)^k as
generator columns (distinct nonzero columns make projectivity automatic),
keeps the rank-k ones, and counts minimal codewords for each. Zero and
duplicate columns never raise the count, so the table-facing maximum for
length n is the fold: max over n' from k to min(n, 2^k - 1) of the raw scan.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from .errors import BudgetError, DomainError
from .gf2_core import BinaryCode, BitVec

__all__ = [
    "CensusResult",
    "census_max",
    "census_max_folded",
    "construct_projective_base_code",
    "construct_double_unit_code",
]

MAX_K = 5
MAX_N = 10


@dataclass(frozen=True)
class CensusResult:
    """Outcome of one raw scan at exactly n columns."""

    n: int
    k: int
    max_m: int
    witness_columns: frozenset[BitVec]
    codes_scanned: int

    def witness_strings(self) -> list[str]:
        return sorted(v.to_string() for v in self.witness_columns)


def census_max(
    n: int, k: int, budget: int | None = None, threads: int = 1
) -> CensusResult:
    """Maximum minimal-codeword count over all codes generated by n distinct
    nonzero k-bit columns, with the lexicographically smallest maximizing
    column set. Supported envelope: k <= 5, n <= 10, k <= n <= 2^k - 1.

    budget caps the number of rank-k subsets counted; exceeding it raises.
    The scan is partitioned by leading column across ``threads`` workers and
    merged in column order, so results do not depend on the thread count.
    """
    if not 1 <= k <= MAX_K:
        raise DomainError(f"census supports 1 <= k <= {MAX_K}, got k={k}")
    if not k <= n <= MAX_N:
        raise DomainError(f"census supports k <= n <= {MAX_N}, got n={n}")
    top = (1 << k) - 1
    if n > top:
        raise DomainError(
            f"no length-{n} code with {k} dimensions has distinct nonzero columns"
        )
    total_subsets = math.comb(top, n)
    if budget is not None and total_subsets > budget:
        raise BudgetError(
            f"census at (n={n}, k={k}) needs {total_subsets} subsets, "
            f"over budget {budget}"
        )
    first_cols = list(range(1, top - n + 2))
    if threads > 1 and len(first_cols) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(lambda c: kernels.census_scan(n, k, None, c), first_cols)
            )
    else:
        results = [kernels.census_scan(n, k, None, c) for c in first_cols]
    best = -1
    witness: tuple[int, ...] = ()
    scanned = 0
    for max_m, wit, part_scanned, _ in results:
        scanned += part_scanned
        if max_m > best:
            best = max_m
            witness = wit
    if best < 0:
        raise DomainError(f"no rank-{k} column set of size {n} exists")
    return CensusResult(
        n, k, best, frozenset(BitVec(k, c) for c in witness), scanned
    )


def census_max_folded(
    n: int, k: int, budget: int | None = None, threads: int = 1
) -> tuple[int, CensusResult]:
    """Table-facing maximum for length n: fold raw scans over all lengths
    n' from k to min(n, 2^k - 1). Exact because zero and duplicate columns
    never change the count, so every [n, k] code reduces to distinct nonzero
    columns at some such n'. Returns (value, raw result attaining it).
    """
    cap = min(n, (1 << k) - 1)
    if cap > MAX_N:
        raise DomainError(
            f"fold at (n={n}, k={k}) needs scans up to n'={cap}, over the "
            f"n <= {MAX_N} envelope"
        )
    best: CensusResult | None = None
    for n_prime in range(k, cap + 1):
        res = census_max(n_prime, k, budget, threads)
        if best is None or res.max_m > best.max_m:
            best = res
    assert best is not None
    return best.max_m, best


def _systematic_from_info(k: int, t: int, info_rows: list[int]) -> BinaryCode:
    """Code with generator [I_k | A] from integer info rows."""
    n = k + t
    rows = tuple(
        BitVec(n, (1 << i) | (info_rows[i] << k)) for i in range(k)
    )
    return BinaryCode(n, k, rows)


def construct_projective_base_code(k: int, t: int) -> BinaryCode:
    """[k+t, k] code whose info rows split k as evenly as possible over the
    unit vectors and the all-ones vector; every part is >= floor(k/(t+1)).
    Requires k >= t+1 (every part positive).
    """
    if t < 1:
        raise DomainError("construction requires t >= 1")
    if k < t + 1:
        raise DomainError(f"construction requires k >= t+1, got k={k}, t={t}")
    taus = [1 << i for i in range(t)] + [(1 << t) - 1]
    parts = [(k + i) // (t + 1) for i in range(t + 1)]
    info: list[int] = []
    for tau, part in zip(taus, parts):
        info.extend([tau] * part)
    return _systematic_from_info(k, t, info)


def construct_double_unit_code(k: int, t: int) -> BinaryCode:
    """[k+t, k] code whose info rows are two copies of each unit vector plus
    k - 2t zero rows; its count is exactly k + t. Requires k >= 2t.
    """
    if t < 0:
        raise DomainError("construction requires t >= 0")
    if k < 2 * t:
        raise DomainError(f"construction requires k >= 2t, got k={k}, t={t}")
    info: list[int] = []
    for i in range(t):
        info.extend([1 << i, 1 << i])
    info.extend([0] * (k - 2 * t))
    return _systematic_from_info(k, t, info)
