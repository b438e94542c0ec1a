"""Minimal codewords: a definition-based enumerator, a fast systematic-form
enumerator, and count-preserving reductions.

A nonzero codeword is minimal when no other nonzero codeword's support is a
proper subset of its support. The two enumerators are independent: the brute
path compares all nonzero codewords pairwise, the systematic path tests only
row subsets of size at most t+1 against a local acceptance rule.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from . import kernels
from .counting import AVector
from .errors import BudgetError, DomainError
from .gf2_core import (
    BinaryCode,
    BitVec,
    SystematicCode,
    to_systematic,
)

__all__ = [
    "MinimalSet",
    "ReductionTrace",
    "is_minimal_in",
    "minimal_codewords_bruteforce",
    "minimal_codewords_systematic",
    "reduce_code",
    "a_vector",
    "minimal_set_json",
    "minimal_set_text",
]

BRUTE_GUARD = 20
SUBSET_BUDGET = 10_000_000


@dataclass(frozen=True)
class MinimalSet:
    """The minimal codewords of a code and their count."""

    code: BinaryCode
    words: frozenset[BitVec]
    count: int

    def __post_init__(self) -> None:
        if self.count != len(self.words):
            raise DomainError("count does not match word set")

    def sorted_strings(self) -> list[str]:
        return sorted(w.to_string() for w in self.words)


@dataclass(frozen=True)
class ReductionTrace:
    """Reduction log: (kind, detail) steps and the count to add back, so
    that the original count equals the components' counts plus delta.
    Coordinate numbers in details refer to the code as of that step.
    """

    steps: tuple[tuple[str, str], ...]
    delta: int


def _membership_info(code: BinaryCode, word: BitVec) -> None:
    if word.length != code.n:
        raise DomainError(f"word length {word.length} does not match n={code.n}")
    basis: list[int] = []
    for row in code.row_ints():
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    residue = word.bits
    for b in basis:
        residue = min(residue, residue ^ b)
    if residue:
        raise DomainError("word is not a codeword of the given code")


def is_minimal_in(word: BitVec, code: BinaryCode) -> bool:
    """True iff ``word`` is a nonzero codeword of ``code`` and no nonzero
    codeword's support is properly contained in its support. Guarded to
    k <= 20 (scans all codewords).
    """
    if code.k > BRUTE_GUARD:
        raise DomainError(f"is_minimal_in guarded to k <= {BRUTE_GUARD}")
    _membership_info(code, word)
    if word.is_zero():
        return False
    rows = code.row_ints()
    w = 0
    g = 0
    inv = ~word.bits
    for x in range(1, 1 << code.k):
        gx = x ^ (x >> 1)
        w ^= rows[(gx ^ g).bit_length() - 1]
        g = gx
        if w != word.bits and w & inv == 0:
            return False
    return True


def minimal_codewords_bruteforce(code: BinaryCode) -> MinimalSet:
    """Enumerate all nonzero codewords and keep the minimal ones by direct
    support comparison. Guarded to k <= 20.
    """
    if code.k > BRUTE_GUARD:
        raise DomainError(f"brute-force enumeration guarded to k <= {BRUTE_GUARD}")
    words = kernels.bruteforce_minimal(code.row_ints())
    vecs = frozenset(BitVec(code.n, w) for w in words)
    return MinimalSet(code, vecs, len(vecs))


def minimal_codewords_systematic(
    code: BinaryCode, budget: int | None = SUBSET_BUDGET
) -> MinimalSet:
    """Enumerate minimal codewords through the systematic form: only row
    subsets S of size at most t+1 can sum to a minimal word, and acceptance
    depends only on the information parts of the rows of S.

    The subset count sum(C(k, j) for j <= t+1) must fit the budget;
    otherwise a BudgetError suggests minimal_codewords_bruteforce.
    """
    sc = to_systematic(code)
    k, t = sc.k, sc.t
    max_card = min(k, t + 1)
    work = sum(math.comb(k, j) for j in range(1, max_card + 1))
    if budget is not None and work > budget:
        raise BudgetError(
            f"subset enumeration needs {work} tests, over budget {budget}; "
            "raise the budget or use minimal_codewords_bruteforce"
        )
    accepted, _, truncated = kernels.systematic_subsets(
        list(sc.info_ints()), max_card, budget
    )
    if truncated:
        raise BudgetError(
            f"subset enumeration exceeded budget {budget}; "
            "raise the budget or use minimal_codewords_bruteforce"
        )
    vecs = frozenset(
        BitVec(code.n, sc.systematic_word(mask, info)) for mask, info in accepted
    )
    return MinimalSet(code, vecs, len(vecs))


def a_vector(sc: SystematicCode) -> AVector:
    """Multiplicity of each information-part value among the k rows."""
    return AVector.make(sc.t, Counter(sc.info_ints()))


def _rref(rows: list[int]) -> list[int]:
    """Reduced row echelon form of full-rank int rows (bit j = coordinate
    j+1, pivots on lowest set bits), rows ordered by pivot.
    """
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    basis.sort(key=lambda r: r & -r)
    for i in range(len(basis) - 1, -1, -1):
        piv = basis[i] & -basis[i]
        for j in range(i):
            if basis[j] & piv:
                basis[j] ^= basis[i]
    return basis


def _drop_columns(rows: list[int], cols: list[int], n: int) -> list[int]:
    """Remove 0-based columns from n-column int rows, compacting the rest."""
    drop = set(cols)
    out = []
    for r in rows:
        packed = 0
        pos = 0
        for j in range(n):
            if j in drop:
                continue
            if r >> j & 1:
                packed |= 1 << pos
            pos += 1
        out.append(packed)
    return out


def reduce_code(code: BinaryCode) -> tuple[tuple[BinaryCode, ...], ReductionTrace]:
    """Shrink a code without losing its count: drop zero and duplicate
    columns (count unchanged), peel coordinates carrying a weight-1 codeword
    (count drops by one each), and split direct sums over disjoint
    coordinate supports. Components with t=0 are terminal.

    Returns indecomposable components and a trace whose delta satisfies
    count(code) = sum of component counts + delta.
    """
    steps: list[tuple[str, str]] = []
    delta = 0
    final: list[BinaryCode] = []
    stack: list[tuple[int, list[int]]] = [(code.n, list(code.row_ints()))]
    while stack:
        n, rows = stack.pop()
        k = len(rows)
        while True:
            if n == k:
                break
            occupied = 0
            for r in rows:
                occupied |= r
            zero_cols = [j for j in range(n) if not occupied >> j & 1]
            if zero_cols:
                steps.append(
                    ("zero-column",
                     "columns " + ", ".join(str(j + 1) for j in zero_cols))
                )
                rows = _drop_columns(rows, zero_cols, n)
                n -= len(zero_cols)
                continue
            seen: dict[tuple[int, ...], int] = {}
            dup_cols = []
            for j in range(n):
                pattern = tuple(r >> j & 1 for r in rows)
                if pattern in seen:
                    dup_cols.append(j)
                else:
                    seen[pattern] = j
            if dup_cols:
                steps.append(
                    ("duplicate-column",
                     "columns " + ", ".join(str(j + 1) for j in dup_cols))
                )
                rows = _drop_columns(rows, dup_cols, n)
                n -= len(dup_cols)
                continue
            basis: list[int] = []
            for r in rows:
                red = r
                for b in basis:
                    red = min(red, red ^ b)
                if red:
                    basis.append(red)
            unit_col = None
            for j in range(n):
                residue = 1 << j
                for b in basis:
                    residue = min(residue, residue ^ b)
                if residue == 0:
                    unit_col = j
                    break
            if unit_col is not None:
                steps.append(("weight-one-coordinate", f"coordinate {unit_col + 1}"))
                delta += 1
                carriers = [r for r in rows if r >> unit_col & 1]
                others = [r for r in rows if not r >> unit_col & 1]
                merged = others + [r ^ carriers[0] for r in carriers[1:]]
                rows = _drop_columns(merged, [unit_col], n)
                n -= 1
                k -= 1
                continue
            rref = _rref(rows)
            parent = list(range(n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for r in rref:
                first = (r & -r).bit_length() - 1
                for j in range(first + 1, n):
                    if r >> j & 1:
                        ra, rb = find(first), find(j)
                        if ra != rb:
                            parent[rb] = ra
            groups: dict[int, list[int]] = {}
            for j in range(n):
                groups.setdefault(find(j), []).append(j)
            comps = sorted(groups.values())
            if len(comps) > 1:
                steps.append(
                    ("direct-sum-split",
                     "coordinate blocks " + " | ".join(
                         ", ".join(str(j + 1) for j in comp) for comp in comps
                     ))
                )
                for comp in reversed(comps):
                    comp_set = set(comp)
                    comp_rows = [r for r in rref if (r & -r).bit_length() - 1 in comp_set]
                    drop = [j for j in range(n) if j not in comp_set]
                    stack.append((len(comp), _drop_columns(comp_rows, drop, n)))
                rows = []
                break
            break
        if rows:
            final.append(
                BinaryCode(n, k, tuple(BitVec(n, r) for r in rows))
            )
    return tuple(final), ReductionTrace(tuple(steps), delta)


def minimal_set_json(ms: MinimalSet) -> dict:
    """JSON-ready report: dimensions, count, sorted words, multiplicities."""
    av = a_vector(to_systematic(ms.code))
    return {
        "n": ms.code.n,
        "k": ms.code.k,
        "t": ms.code.t,
        "count": ms.count,
        "words": ms.sorted_strings(),
        "a_vector": av.to_json_obj(),
    }


def minimal_set_text(ms: MinimalSet) -> str:
    """One sorted '0'/'1' line per word plus a trailing count line."""
    lines = ms.sorted_strings()
    lines.append(f"count = {ms.count}")
    return "\n".join(lines) + "\n"
