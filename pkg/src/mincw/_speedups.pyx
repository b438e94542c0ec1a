# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: the same functions, iteration orders, budgets, and
tie-breaks as the pure-Python twins in _kernels_py; outputs are identical
bit for bit. All vectors are plain ints (bit i = coordinate i+1).
"""

import itertools
import math

from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcount(unsigned int x) nogil
    int __builtin_popcountll(unsigned long long x) nogil

BACKEND_NAME = "c"

__all__ = [
    "composition_sweep",
    "census_scan",
    "systematic_subsets",
    "bruteforce_minimal",
    "catalog_scan",
]

cdef long long _NO_LIMIT = 0x7FFFFFFFFFFFFFFF


# ------------------------------------------------------------ subset_accept


cdef int _accept_c(unsigned long long* vals, Py_ssize_t s,
                   unsigned long long* sums,
                   unsigned long long* total_out) nogil:
    """Shared acceptance core; sums needs 2^s slots when s >= 3."""
    cdef unsigned long long total = 0
    cdef Py_ssize_t i, j
    cdef unsigned long long m, full, g, gx, x, cur, inv, v, diff
    cdef int idx
    for i in range(s):
        total ^= vals[i]
    total_out[0] = total
    if s == 1:
        return 1
    for i in range(s):
        if vals[i] == 0:
            return 0
    if s == 2:
        if vals[0] == vals[1]:
            total_out[0] = 0
            return 1
        return 1 if (vals[0] & vals[1]) != 0 else 0
    for i in range(s):
        for j in range(i + 1, s):
            if vals[i] == vals[j]:
                return 0
    m = (<unsigned long long>1) << s
    full = m - 1
    g = 0
    cur = 0
    sums[0] = 0
    for x in range(1, m):
        gx = x ^ (x >> 1)
        diff = gx ^ g
        idx = 0
        while not (diff & 1):
            diff >>= 1
            idx += 1
        cur ^= vals[idx]
        g = gx
        sums[gx] = cur
        if cur == 0 and gx != full:
            return 0
    if total == 0:
        return 1
    inv = ~total
    for x in range(1, m):
        v = sums[x]
        if v != 0 and v != total and (v & inv) == 0:
            return 0
    return 1


def subset_accept(vals):
    """Decide whether summing one generator row per value in ``vals`` yields a
    minimal codeword; returns (accepted, xor_total).

    Rules: a singleton is always accepted; any zero value or any vanishing
    proper nonempty subset rejects; otherwise accept iff the total is zero or
    has no nonzero strict-subset support inside the span of ``vals``.
    """
    cdef Py_ssize_t s = len(vals)
    cdef Py_ssize_t i
    cdef unsigned long long total = 0
    cdef unsigned long long* vs
    cdef unsigned long long* sums = NULL
    cdef int ok
    if s == 0:
        return True, 0
    vs = <unsigned long long*> malloc(s * sizeof(unsigned long long))
    if vs == NULL:
        raise MemoryError()
    try:
        for i in range(s):
            vs[i] = vals[i]
        if s >= 3:
            sums = <unsigned long long*> malloc(
                ((<size_t>1) << s) * sizeof(unsigned long long))
            if sums == NULL:
                raise MemoryError()
        ok = _accept_c(vs, s, sums, &total)
        return ok != 0, total
    finally:
        free(vs)
        if sums != NULL:
            free(sums)


# -------------------------------------------------------- composition_sweep


cdef struct SweepCtx:
    int nvals
    long long k_max
    bint pair_terms
    long long limit
    long long leaves
    bint truncated
    long long* a            # nvals + 1
    long long* best         # k_max + 1
    int* support            # indices with a > 0, ascending
    int ns
    int max_e
    int* dt_start           # term index range per depth, size nvals + 2
    int* term_off           # offsets into term_idx, size n_terms + 1
    int* term_idx
    unsigned long long* dmask_data  # per depth: sorted masks of its terms
    int* dmask_start        # size nvals + 2
    long long* combo_count  # size k_max + 1


cdef long long _combo_rec(SweepCtx* C, unsigned long long* masks, int cnt,
                          int start, int left, unsigned long long mask,
                          long long prod) nogil:
    cdef long long s = 0
    cdef long long nprod
    cdef int i, j, lo, hi, mid
    cdef unsigned long long nm
    for i in range(start, C.ns):
        j = C.support[i]
        nm = mask | ((<unsigned long long>1) << (j - 1))
        nprod = prod * C.a[j]
        lo = 0
        hi = cnt
        while lo < hi:
            mid = (lo + hi) >> 1
            if masks[mid] < nm:
                lo = mid + 1
            else:
                hi = mid
        if lo < cnt and masks[lo] == nm:
            s += nprod
        if left > 1:
            s += _combo_rec(C, masks, cnt, i + 1, left - 1, nm, nprod)
    return s


cdef long long _sweep_eval(SweepCtx* C, int d) nogil:
    cdef int ts = C.dt_start[d]
    cdef int te = C.dt_start[d + 1]
    cdef int ns = C.ns
    cdef long long s = 0
    cdef long long prod, aj
    cdef int i, u
    if ts == te or ns == 0:
        return 0
    if te - ts <= C.combo_count[ns]:
        for i in range(ts, te):
            prod = 1
            for u in range(C.term_off[i], C.term_off[i + 1]):
                aj = C.a[C.term_idx[u]]
                if aj == 0:
                    prod = 0
                    break
                prod *= aj
            s += prod
        return s
    return _combo_rec(C, C.dmask_data + C.dmask_start[d],
                      C.dmask_start[d + 1] - C.dmask_start[d],
                      0, C.max_e, 0, 1)


cdef int _sweep_rec(SweepCtx* C, int d, long long used, long long val,
                    list wit) except -1:
    cdef long long rem = C.k_max - used
    cdef long long p, cur, v, tot, s, contrib
    cdef int i
    if d == C.nvals:
        if C.leaves >= C.limit:
            C.truncated = True
            return 0
        p = _sweep_eval(C, d)
        cur = val
        v = 0
        while True:
            tot = used + v
            if cur > C.best[tot]:
                C.a[d] = v
                C.best[tot] = cur
                wit[tot] = tuple([C.a[i] for i in range(1, C.nvals + 1)])
            if v == rem:
                break
            cur += (v if C.pair_terms else 0) + p
            v += 1
        C.a[d] = 0
        C.leaves += rem + 1
        return 0
    _sweep_rec(C, d + 1, used, val, wit)
    if rem == 0 or C.truncated:
        return 0
    s = _sweep_eval(C, d)
    C.support[C.ns] = d
    C.ns += 1
    for v in range(1, rem + 1):
        C.a[d] = v
        contrib = (v * (v - 1)) // 2 if C.pair_terms else 0
        _sweep_rec(C, d + 1, used + v, val + contrib + v * s, wit)
        if C.truncated:
            break
    C.ns -= 1
    C.a[d] = 0
    return 0


def composition_sweep(int nvals, long long k_max, bint pair_terms,
                      list by_last, budget=None):
    """Enumerate all compositions (a_1..a_nvals) with sum <= k_max and record,
    per total j, the best objective and its lexicographically smallest argmax.

    Objective: sum over d of C(a_d, 2) (if pair_terms) plus, for every term
    in by_last[d], a_d times the product of a over the term's earlier indices.
    Returns (best, witnesses, leaves, truncated); best[j] is -1 only if the
    sweep was truncated before reaching total j.
    """
    if nvals < 1:
        raise ValueError("nvals must be positive")
    if nvals > 63:
        raise OverflowError("compiled sweep supports at most 63 indices")
    if len(by_last) != nvals + 1:
        raise ValueError("by_last must have nvals + 1 entries")
    cdef SweepCtx C
    cdef int d, i, u, n_terms = 0, n_idx = 0, max_e = 0
    cdef list terms
    cdef tuple term
    for d in range(1, nvals + 1):
        terms = by_last[d]
        n_terms += len(terms)
        for term in terms:
            n_idx += len(term)
            if len(term) > max_e:
                max_e = len(term)
    C.nvals = nvals
    C.k_max = k_max
    C.pair_terms = pair_terms
    C.limit = _NO_LIMIT if budget is None else <long long> min(budget, _NO_LIMIT)
    C.leaves = 0
    C.truncated = False
    C.ns = 0
    C.max_e = max_e
    C.a = <long long*> malloc((nvals + 1) * sizeof(long long))
    C.best = <long long*> malloc((k_max + 1) * sizeof(long long))
    C.support = <int*> malloc((k_max + 1) * sizeof(int))
    C.dt_start = <int*> malloc((nvals + 2) * sizeof(int))
    C.term_off = <int*> malloc((n_terms + 1) * sizeof(int))
    C.term_idx = <int*> malloc((n_idx if n_idx else 1) * sizeof(int))
    C.dmask_data = <unsigned long long*> malloc(
        (n_terms if n_terms else 1) * sizeof(unsigned long long))
    C.dmask_start = <int*> malloc((nvals + 2) * sizeof(int))
    C.combo_count = <long long*> malloc((k_max + 1) * sizeof(long long))
    if (C.a == NULL or C.best == NULL or C.support == NULL
            or C.dt_start == NULL or C.term_off == NULL or C.term_idx == NULL
            or C.dmask_data == NULL or C.dmask_start == NULL
            or C.combo_count == NULL):
        _sweep_free(&C)
        raise MemoryError()
    try:
        for i in range(nvals + 1):
            C.a[i] = 0
        for i in range(k_max + 1):
            C.best[i] = -1
            C.combo_count[i] = sum(
                math.comb(i, sz) for sz in range(1, min(max_e, i) + 1))
        wit = [None] * (k_max + 1)
        n_terms = 0
        n_idx = 0
        C.term_off[0] = 0
        for d in range(1, nvals + 1):
            C.dt_start[d] = n_terms
            C.dmask_start[d] = n_terms
            terms = by_last[d]
            masks = []
            one = 1  # Python int: mask bits may exceed the C int range
            for term in terms:
                mask = 0
                for u in range(len(term)):
                    i = term[u]
                    C.term_idx[n_idx] = i
                    n_idx += 1
                    mask |= one << (i - 1)
                masks.append(mask)
                n_terms += 1
                C.term_off[n_terms] = n_idx
            masks.sort()
            for u in range(len(masks)):
                C.dmask_data[C.dmask_start[d] + u] = masks[u]
        C.dt_start[0] = 0
        C.dmask_start[0] = 0
        C.dt_start[nvals + 1] = n_terms
        C.dmask_start[nvals + 1] = n_terms
        _sweep_rec(&C, 1, 0, 0, wit)
        best = [C.best[i] for i in range(k_max + 1)]
        return best, wit, C.leaves, C.truncated
    finally:
        _sweep_free(&C)


cdef void _sweep_free(SweepCtx* C):
    free(C.a)
    free(C.best)
    free(C.support)
    free(C.dt_start)
    free(C.term_off)
    free(C.term_idx)
    free(C.dmask_data)
    free(C.dmask_start)
    free(C.combo_count)


# -------------------------------------------------------------- census_scan


cdef struct CensusCtx:
    int n, k, top, size
    long long limit
    long long best
    long long scanned
    bint truncated
    bint have_wit
    unsigned char* par      # size * size parity table
    int* cols               # n
    int* wit_cols           # n
    unsigned int* words     # (n + 1) levels * size
    int* basis              # k
    unsigned int* sortbuf   # size
    unsigned int* minimal   # size


cdef long long _count_min_c(CensusCtx* C, unsigned int* words) nogil:
    cdef int cnt = C.size - 1
    cdef int i, j, mcount
    cdef unsigned int w, inv, key
    for i in range(cnt):
        w = words[i + 1]
        C.sortbuf[i] = (<unsigned int>__builtin_popcount(w) << 16) | w
    for i in range(1, cnt):
        key = C.sortbuf[i]
        j = i - 1
        while j >= 0 and C.sortbuf[j] > key:
            C.sortbuf[j + 1] = C.sortbuf[j]
            j -= 1
        C.sortbuf[j + 1] = key
    mcount = 0
    for i in range(cnt):
        w = C.sortbuf[i] & 0xFFFF
        inv = ~w
        for j in range(mcount):
            if (C.minimal[j] & inv) == 0:
                break
        else:
            C.minimal[mcount] = w
            mcount += 1
    return mcount


cdef void _census_rec(CensusCtx* C, int d, int start, int nb, int rk) nogil:
    cdef int slots = C.n - d
    cdef int c, i, u, red, nrk
    cdef unsigned int* cur = C.words + d * C.size
    cdef unsigned int* nxt = C.words + (d + 1) * C.size
    cdef long long m
    for c in range(start, C.top - slots + 2):
        if C.truncated:
            return
        red = c
        for i in range(nb):
            if (red ^ C.basis[i]) < red:
                red ^= C.basis[i]
        nrk = rk + (1 if red else 0)
        if nrk + slots - 1 < C.k:
            continue
        C.cols[d] = c
        for u in range(C.size):
            nxt[u] = cur[u] | (<unsigned int>C.par[u * C.size + c]) << d
        if d + 1 == C.n:
            if C.scanned >= C.limit:
                C.truncated = True
                return
            C.scanned += 1
            m = _count_min_c(C, nxt)
            if m > C.best:
                C.best = m
                for i in range(C.n):
                    C.wit_cols[i] = C.cols[i]
                C.have_wit = True
        else:
            if red:
                C.basis[nb] = red
                _census_rec(C, d + 1, c + 1, nb + 1, nrk)
            else:
                _census_rec(C, d + 1, c + 1, nb, nrk)


def census_scan(int n, int k, budget=None, int first_col=0):
    """Scan n-element column subsets of the nonzero vectors of GF(2)^k in
    ascending order; for each rank-k subset count minimal codewords.

    Returns (max_m, witness_columns, rank_k_subsets_scanned, truncated);
    max_m is -1 when no rank-k subset exists in the scanned range. With
    first_col > 0 only subsets whose smallest column equals it are scanned.
    """
    cdef CensusCtx C
    cdef int u, c, i
    C.n = n
    C.k = k
    C.top = (1 << k) - 1
    C.size = 1 << k
    C.limit = _NO_LIMIT if budget is None else <long long> min(budget, _NO_LIMIT)
    C.best = -1
    C.scanned = 0
    C.truncated = False
    C.have_wit = False
    C.par = <unsigned char*> malloc(C.size * C.size)
    C.cols = <int*> malloc(n * sizeof(int))
    C.wit_cols = <int*> malloc(n * sizeof(int))
    C.words = <unsigned int*> malloc((n + 1) * C.size * sizeof(unsigned int))
    C.basis = <int*> malloc((k if k else 1) * sizeof(int))
    C.sortbuf = <unsigned int*> malloc(C.size * sizeof(unsigned int))
    C.minimal = <unsigned int*> malloc(C.size * sizeof(unsigned int))
    if (C.par == NULL or C.cols == NULL or C.wit_cols == NULL
            or C.words == NULL or C.basis == NULL or C.sortbuf == NULL
            or C.minimal == NULL):
        _census_free(&C)
        raise MemoryError()
    try:
        for u in range(C.size):
            for c in range(C.size):
                C.par[u * C.size + c] = <unsigned char>(
                    __builtin_popcount(<unsigned int>(u & c)) & 1)
        memset(C.words, 0, (n + 1) * C.size * sizeof(unsigned int))
        if first_col:
            if first_col <= C.top - n + 1:
                C.cols[0] = first_col
                for u in range(C.size):
                    C.words[C.size + u] = C.par[u * C.size + first_col]
                if n == 1:
                    if k == 1:
                        with nogil:
                            C.best = _count_min_c(&C, C.words + C.size)
                        C.wit_cols[0] = first_col
                        C.have_wit = True
                        C.scanned = 1
                else:
                    C.basis[0] = first_col
                    with nogil:
                        _census_rec(&C, 1, first_col + 1, 1, 1)
        else:
            with nogil:
                _census_rec(&C, 0, 1, 0, 0)
        witness = tuple([C.wit_cols[i] for i in range(n)]) if C.have_wit else ()
        return C.best, witness, C.scanned, C.truncated
    finally:
        _census_free(&C)


cdef void _census_free(CensusCtx* C):
    free(C.par)
    free(C.cols)
    free(C.wit_cols)
    free(C.words)
    free(C.basis)
    free(C.sortbuf)
    free(C.minimal)


# -------------------------------------------------------- systematic_subsets


def systematic_subsets(info, int max_card, budget=None):
    """Enumerate subsets S of row indices in colex order by cardinality
    1..max_card and keep those passing subset_accept on their information
    parts. Returns ([(index_mask, info_total)], subsets_tested, truncated).
    """
    cdef Py_ssize_t k = len(info)
    cdef long long limit = (
        _NO_LIMIT if budget is None else <long long> min(budget, _NO_LIMIT))
    cdef long long tested = 0
    cdef int card, i, j, nxt, ceil
    cdef bint advanced
    cdef unsigned long long total = 0
    cdef unsigned long long* vi
    cdef unsigned long long* vals
    cdef unsigned long long* sums = NULL
    cdef int* idx
    cdef int sums_card
    cdef object one = 1  # Python int: masks may need bits past the C range
    accepted = []
    if max_card >= 28:
        raise MemoryError("subset cardinality too large for the scratch table")
    vi = <unsigned long long*> malloc((k if k else 1) * sizeof(unsigned long long))
    vals = <unsigned long long*> malloc(
        (max_card if max_card else 1) * sizeof(unsigned long long))
    idx = <int*> malloc((max_card if max_card else 1) * sizeof(int))
    sums_card = max_card if max_card >= 3 else 3
    sums = <unsigned long long*> malloc(
        ((<size_t>1) << sums_card) * sizeof(unsigned long long))
    if vi == NULL or vals == NULL or idx == NULL or sums == NULL:
        free(vi)
        free(vals)
        free(idx)
        free(sums)
        raise MemoryError()
    try:
        for i in range(k):
            vi[i] = info[i]
        for i in range(k):
            if tested >= limit:
                return accepted, tested, True
            tested += 1
            accepted.append((one << i, vi[i]))
        for card in range(2, max_card + 1):
            if card > k:
                break
            for i in range(card):
                idx[i] = i
            while True:
                if tested >= limit:
                    return accepted, tested, True
                tested += 1
                for i in range(card):
                    vals[i] = vi[idx[i]]
                if _accept_c(vals, card, sums, &total):
                    mask = 0
                    for i in range(card):
                        mask |= one << idx[i]
                    accepted.append((mask, total))
                advanced = False
                for i in range(card):
                    nxt = idx[i] + 1
                    ceil = idx[i + 1] if i + 1 < card else <int>k
                    if nxt < ceil:
                        idx[i] = nxt
                        for j in range(i):
                            idx[j] = j
                        advanced = True
                        break
                if not advanced:
                    break
        return accepted, tested, False
    finally:
        free(vi)
        free(vals)
        free(idx)
        free(sums)


# -------------------------------------------------------- bruteforce_minimal


cdef int _word_cmp(const void* pa, const void* pb) noexcept nogil:
    cdef unsigned long long a = (<const unsigned long long*> pa)[0]
    cdef unsigned long long b = (<const unsigned long long*> pb)[0]
    cdef int pca = __builtin_popcountll(a)
    cdef int pcb = __builtin_popcountll(b)
    if pca != pcb:
        return -1 if pca < pcb else 1
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


cdef int _ull_cmp(const void* pa, const void* pb) noexcept nogil:
    cdef unsigned long long a = (<const unsigned long long*> pa)[0]
    cdef unsigned long long b = (<const unsigned long long*> pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def bruteforce_minimal(rows):
    """All minimal codewords of the code spanned by full-rank ``rows``,
    by direct support comparison over every nonzero codeword; sorted ints.
    """
    cdef Py_ssize_t k = len(rows)
    cdef Py_ssize_t total = (<Py_ssize_t>1) << k
    cdef Py_ssize_t x, i, j, nmin
    cdef unsigned long long w, g, gx, diff, inv
    cdef int idx
    cdef unsigned long long* rws
    cdef unsigned long long* words
    cdef unsigned long long* minimal
    if k > 62:
        raise OverflowError("too many rows for the compiled kernel")
    rws = <unsigned long long*> malloc((k if k else 1) * sizeof(unsigned long long))
    words = <unsigned long long*> malloc(total * sizeof(unsigned long long))
    minimal = <unsigned long long*> malloc(total * sizeof(unsigned long long))
    if rws == NULL or words == NULL or minimal == NULL:
        free(rws)
        free(words)
        free(minimal)
        raise MemoryError()
    try:
        for i in range(k):
            rws[i] = rows[i]
        with nogil:
            words[0] = 0
            w = 0
            g = 0
            for x in range(1, total):
                gx = x ^ (x >> 1)
                diff = gx ^ g
                idx = 0
                while not (diff & 1):
                    diff >>= 1
                    idx += 1
                w ^= rws[idx]
                g = gx
                words[gx] = w
            qsort(words + 1, total - 1, sizeof(unsigned long long), _word_cmp)
            nmin = 0
            for x in range(1, total):
                w = words[x]
                inv = ~w
                for j in range(nmin):
                    if (minimal[j] & inv) == 0:
                        break
                else:
                    minimal[nmin] = w
                    nmin += 1
            qsort(minimal, nmin, sizeof(unsigned long long), _ull_cmp)
        return [minimal[j] for j in range(nmin)]
    finally:
        free(rws)
        free(words)
        free(minimal)


# ------------------------------------------------------------- catalog_scan


def catalog_scan(int t):
    """All subsets of the nonzero vectors of GF(2)^t, sizes 2..t+1, passing
    subset_accept; ordered by (size, lexicographic tuple).
    """
    cdef int top = (1 << t) - 1
    cdef int size, i
    cdef unsigned long long total = 0
    cdef unsigned long long* vals
    cdef unsigned long long* sums
    cdef tuple combo
    if t > 26:
        raise MemoryError("catalog scan scratch table too large")
    vals = <unsigned long long*> malloc((t + 2) * sizeof(unsigned long long))
    sums = <unsigned long long*> malloc(
        ((<size_t>1) << (t + 1 if t >= 2 else 3)) * sizeof(unsigned long long))
    if vals == NULL or sums == NULL:
        free(vals)
        free(sums)
        raise MemoryError()
    try:
        out = []
        for size in range(2, t + 2):
            if size > top:
                break
            for combo in itertools.combinations(range(1, top + 1), size):
                for i in range(size):
                    vals[i] = combo[i]
                if _accept_c(vals, size, sums, &total):
                    out.append(combo)
        return out
    finally:
        free(vals)
        free(sums)
