"""Pure-Python kernels: reference implementations of the hot enumeration loops.

The compiled twin in _speedups.pyx implements the same functions with the
same iteration orders, budgets, and tie-breaks; results must be identical.
All vectors are plain ints (bit i = coordinate i+1).
"""

from __future__ import annotations

import itertools
import math

__all__ = [
    "composition_sweep",
    "census_scan",
    "systematic_subsets",
    "bruteforce_minimal",
    "catalog_scan",
]

BACKEND_NAME = "python"

_UNLIMITED = float("inf")


def subset_accept(vals: list[int]) -> tuple[bool, int]:
    """Decide whether summing one generator row per value in ``vals`` yields a
    minimal codeword; returns (accepted, xor_total).

    Rules: a singleton is always accepted; any zero value or any vanishing
    proper nonempty subset rejects; otherwise accept iff the total is zero or
    has no nonzero strict-subset support inside the span of ``vals``.
    """
    s = len(vals)
    total = 0
    for v in vals:
        total ^= v
    if s == 1:
        return True, total
    for v in vals:
        if v == 0:
            return False, total
    if s == 2:
        a, b = vals
        if a == b:
            return True, 0
        return (a & b) != 0, total
    for i in range(s):
        vi = vals[i]
        for j in range(i + 1, s):
            if vi == vals[j]:
                return False, total
    m = 1 << s
    full = m - 1
    sums = [0] * m
    g = 0
    cur = 0
    for x in range(1, m):
        gx = x ^ (x >> 1)
        cur ^= vals[(gx ^ g).bit_length() - 1]
        g = gx
        sums[gx] = cur
        if cur == 0 and gx != full:
            return False, total
    if total == 0:
        return True, 0
    inv = ~total
    for x in range(1, m):
        v = sums[x]
        if v and v != total and v & inv == 0:
            return False, total
    return True, total


def composition_sweep(
    nvals: int,
    k_max: int,
    pair_terms: bool,
    by_last: list[list[tuple[int, ...]]],
    budget: int | None = None,
) -> tuple[list[int], list[tuple[int, ...] | None], int, bool]:
    """Enumerate all compositions (a_1..a_nvals) with sum <= k_max and record,
    per total j, the best objective and its lexicographically smallest argmax.

    Objective: sum over d of C(a_d, 2) (if pair_terms) plus, for every term
    in by_last[d], a_d times the product of a over the term's earlier indices.
    Returns (best, witnesses, leaves, truncated); best[j] is -1 only if the
    sweep was truncated before reaching total j.
    """
    limit = _UNLIMITED if budget is None else budget
    best = [-1] * (k_max + 1)
    wit: list[tuple[int, ...] | None] = [None] * (k_max + 1)
    a = [0] * (nvals + 1)
    state = [0, False]  # leaves, truncated
    term_sets = [set(terms) for terms in by_last]
    max_e = max((len(tm) for terms in by_last for tm in terms), default=0)
    # nonempty subsets of size <= max_e in a support of each size; when a
    # depth has more terms than that, probing support subsets is cheaper
    # than iterating the terms
    combo_count = [
        sum(math.comb(sz, i) for i in range(1, min(max_e, sz) + 1))
        for sz in range(k_max + 1)
    ]
    support: list[int] = []

    def eval_terms(d: int) -> int:
        terms = by_last[d]
        ns = len(support)
        if not terms or ns == 0:
            return 0
        s = 0
        if len(terms) <= combo_count[ns]:
            for term in terms:
                prod = 1
                for j in term:
                    aj = a[j]
                    if not aj:
                        prod = 0
                        break
                    prod *= aj
                s += prod
            return s
        tset = term_sets[d]
        for size in range(1, min(max_e, ns) + 1):
            for combo in itertools.combinations(support, size):
                if combo in tset:
                    prod = 1
                    for j in combo:
                        prod *= a[j]
                    s += prod
        return s

    def rec(d: int, used: int, val: int) -> None:
        if state[1]:
            return
        rem = k_max - used
        if d == nvals:
            if state[0] >= limit:
                state[1] = True
                return
            p = eval_terms(d)
            cur = val
            v = 0
            while True:
                tot = used + v
                if cur > best[tot]:
                    a[d] = v
                    best[tot] = cur
                    wit[tot] = tuple(a[1:])
                if v == rem:
                    break
                cur += (v if pair_terms else 0) + p
                v += 1
            a[d] = 0
            state[0] += rem + 1
            return
        rec(d + 1, used, val)
        if rem == 0 or state[1]:
            return
        s = eval_terms(d)
        support.append(d)
        for v in range(1, rem + 1):
            a[d] = v
            contrib = v * (v - 1) // 2 if pair_terms else 0
            rec(d + 1, used + v, val + contrib + v * s)
            if state[1]:
                break
        support.pop()
        a[d] = 0

    rec(1, 0, 0)
    return best, wit, state[0], state[1]


def _count_minimal_words(words: list[int]) -> int:
    """Count minimal elements of the support-containment order (distinct words)."""
    ws = sorted(words, key=lambda w: (w.bit_count(), w))
    minimal: list[int] = []
    for w in ws:
        inv = ~w
        for m in minimal:
            if m & inv == 0:
                break
        else:
            minimal.append(w)
    return len(minimal)


def census_scan(
    n: int,
    k: int,
    budget: int | None = None,
    first_col: int = 0,
) -> tuple[int, tuple[int, ...], int, bool]:
    """Scan n-element column subsets of the nonzero vectors of GF(2)^k in
    ascending order; for each rank-k subset count minimal codewords.

    Returns (max_m, witness_columns, rank_k_subsets_scanned, truncated);
    max_m is -1 when no rank-k subset exists in the scanned range. With
    first_col > 0 only subsets whose smallest column equals it are scanned.
    """
    top = (1 << k) - 1
    size = 1 << k
    limit = _UNLIMITED if budget is None else budget
    par = [[(u & c).bit_count() & 1 for c in range(size)] for u in range(size)]
    cols = [0] * n
    state = [-1, (), 0, False]  # best, witness, scanned, truncated

    def rec(d: int, start: int, words: list[int], basis: list[int], rk: int) -> None:
        slots = n - d
        for c in range(start, top - slots + 2):
            if state[3]:
                return
            red = c
            for b in basis:
                red = min(red, red ^ b)
            nrk = rk + (1 if red else 0)
            if nrk + slots - 1 < k:
                continue
            cols[d] = c
            pu = par
            nwords = [words[u] | pu[u][c] << d for u in range(size)]
            if d + 1 == n:
                if state[2] >= limit:
                    state[3] = True
                    return
                state[2] += 1
                m = _count_minimal_words(nwords[1:])
                if m > state[0]:
                    state[0] = m
                    state[1] = tuple(cols)
            else:
                if red:
                    basis.append(red)
                rec(d + 1, c + 1, nwords, basis, nrk)
                if red:
                    basis.pop()

    if first_col:
        if first_col <= top - n + 1:
            cols[0] = first_col
            words = [par[u][first_col] for u in range(size)]
            if n == 1:
                if k == 1:
                    state[0] = _count_minimal_words(words[1:])
                    state[1] = (first_col,)
                    state[2] = 1
            else:
                rec(1, first_col + 1, words, [first_col], 1)
    else:
        rec(0, 1, [0] * size, [], 0)
    return state[0], state[1], state[2], state[3]


def systematic_subsets(
    info: list[int],
    max_card: int,
    budget: int | None = None,
) -> tuple[list[tuple[int, int]], int, bool]:
    """Enumerate subsets S of row indices in colex order by cardinality
    1..max_card and keep those passing subset_accept on their information
    parts. Returns ([(index_mask, info_total)], subsets_tested, truncated).
    """
    k = len(info)
    limit = _UNLIMITED if budget is None else budget
    accepted: list[tuple[int, int]] = []
    tested = 0
    for i in range(k):
        if tested >= limit:
            return accepted, tested, True
        tested += 1
        accepted.append((1 << i, info[i]))
    for card in range(2, max_card + 1):
        if card > k:
            break
        idx = list(range(card))
        while True:
            if tested >= limit:
                return accepted, tested, True
            tested += 1
            vals = [info[c] for c in idx]
            ok, total = subset_accept(vals)
            if ok:
                mask = 0
                for c in idx:
                    mask |= 1 << c
                accepted.append((mask, total))
            for i in range(card):
                nxt = idx[i] + 1
                ceil = idx[i + 1] if i + 1 < card else k
                if nxt < ceil:
                    idx[i] = nxt
                    for j in range(i):
                        idx[j] = j
                    break
            else:
                break
    return accepted, tested, False


def bruteforce_minimal(rows: list[int]) -> list[int]:
    """All minimal codewords of the code spanned by full-rank ``rows``,
    by direct support comparison over every nonzero codeword; sorted ints.
    """
    k = len(rows)
    total = 1 << k
    words = [0] * total
    w = 0
    g = 0
    for x in range(1, total):
        gx = x ^ (x >> 1)
        w ^= rows[(gx ^ g).bit_length() - 1]
        g = gx
        words[gx] = w
    ws = sorted(words[1:], key=lambda t: (t.bit_count(), t))
    minimal: list[int] = []
    for w in ws:
        inv = ~w
        for m in minimal:
            if m & inv == 0:
                break
        else:
            minimal.append(w)
    minimal.sort()
    return minimal


def catalog_scan(t: int) -> list[tuple[int, ...]]:
    """All subsets of the nonzero vectors of GF(2)^t, sizes 2..t+1, passing
    subset_accept; ordered by (size, lexicographic tuple).
    """
    top = (1 << t) - 1
    out: list[tuple[int, ...]] = []
    for size in range(2, t + 2):
        if size > top:
            break
        for combo in itertools.combinations(range(1, top + 1), size):
            if subset_accept(list(combo))[0]:
                out.append(combo)
    return out
