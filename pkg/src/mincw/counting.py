"""Evaluate minimal-codeword counts from row-multiplicity vectors.

The count of a [k+t, k] binary code depends only on how often each value
of GF(2)^t occurs among the information parts of its systematic generator
rows. This module evaluates that count: the general catalog-driven form,
independent closed forms for t = 1, 2, 3 and for vectors supported on the
canonical projective base, and the top-degree part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainError
from .mgsets import MGCatalog, build_catalog

__all__ = [
    "AVector",
    "tau_to_string",
    "tau_from_string",
    "count_general",
    "count_t1",
    "count_t2",
    "count_t3",
    "count_t3_dense",
    "count_canonical_base",
    "leading_term",
    "leading_term_ordered",
    "breakdown",
]

DENSE_GUARD = 20


def tau_to_string(tau: int, t: int) -> str:
    """Bitstring of a multiplicity index; character j is coordinate j+1."""
    return "".join("1" if tau >> j & 1 else "0" for j in range(t))


def tau_from_string(s: str, t: int) -> int:
    """Inverse of tau_to_string."""
    if len(s) != t or set(s) - {"0", "1"}:
        raise DomainError(f"bad multiplicity index {s!r} for t={t}")
    return sum(1 << j for j, ch in enumerate(s) if ch == "1")


@dataclass(frozen=True)
class AVector:
    """Multiplicity vector: how often each value of GF(2)^t occurs among the
    information parts of the k systematic generator rows.

    items holds (index, count) pairs with count > 0, sorted by index;
    absent indices have count 0. k is the sum of all counts.
    """

    t: int
    items: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.t < 0:
            raise DomainError(f"negative t {self.t}")
        last = -1
        for tau, count in self.items:
            if not 0 <= tau < 1 << self.t:
                raise DomainError(f"index {tau} out of range for t={self.t}")
            if count <= 0:
                raise DomainError(f"non-positive count {count} at index {tau}")
            if tau <= last:
                raise DomainError("items must be sorted by index without repeats")
            last = tau

    @classmethod
    def make(
        cls, t: int, counts: Mapping[int | str, int] | Sequence[int]
    ) -> "AVector":
        """Build from a dense sequence of length 2^t or a mapping whose keys
        are indices as ints or bitstrings; zero counts may be omitted.
        """
        if t < 0:
            raise DomainError(f"negative t {t}")
        if isinstance(counts, Mapping):
            pairs = {}
            for key, count in counts.items():
                tau = tau_from_string(key, t) if isinstance(key, str) else key
                if tau in pairs:
                    raise DomainError(f"repeated index {key!r}")
                pairs[tau] = count
        else:
            if t > DENSE_GUARD:
                raise DomainError(f"dense form limited to t <= {DENSE_GUARD}")
            if len(counts) != 1 << t:
                raise DomainError(
                    f"dense form needs {1 << t} entries for t={t}, got {len(counts)}"
                )
            pairs = dict(enumerate(counts))
        if any(c < 0 for c in pairs.values()):
            raise DomainError("negative count")
        return cls(t, tuple(sorted((tau, c) for tau, c in pairs.items() if c > 0)))

    @property
    def k(self) -> int:
        return sum(c for _, c in self.items)

    @property
    def counts(self) -> dict[int, int]:
        """Nonzero counts as a plain dict keyed by index."""
        return dict(self.items)

    def get(self, tau: int) -> int:
        if not 0 <= tau < 1 << self.t:
            raise DomainError(f"index {tau} out of range for t={self.t}")
        return dict(self.items).get(tau, 0)

    def as_tuple(self) -> tuple[int, ...]:
        """Dense counts (index order 0..2^t-1); guarded for small t."""
        if self.t > DENSE_GUARD:
            raise DomainError(f"dense form limited to t <= {DENSE_GUARD}")
        dense = [0] * (1 << self.t)
        for tau, c in self.items:
            dense[tau] = c
        return tuple(dense)

    def to_json_obj(self) -> dict[str, int]:
        """Nonzero counts keyed by bitstring, sorted by index."""
        return {tau_to_string(tau, self.t): c for tau, c in self.items}


def _pair_sum(a: AVector) -> int:
    return sum(math.comb(c, 2) for tau, c in a.items if tau != 0)


def _require_t(a: AVector, t: int, op: str) -> None:
    if a.t != t:
        raise DomainError(f"{op} requires t={t}, got t={a.t}")


def count_general(a: AVector, catalog: MGCatalog | None = None) -> int:
    """Minimal-codeword count of any code whose rows realize ``a``:
    k, plus one pair term per repeated nonzero index, plus one monomial per
    catalog set fully supported by ``a``.

    The catalog may be passed to amortize construction; when omitted it is
    built for ``a.t``. Degenerate cases: t=0 gives k, t=1 needs no catalog.
    """
    t = a.t
    k = a.k
    if t == 0:
        return k
    total = k + _pair_sum(a)
    if t == 1:
        return total
    if catalog is None:
        catalog = build_catalog(t)
    elif catalog.t != t:
        raise DomainError(f"catalog t={catalog.t} does not match vector t={t}")
    dense = [0] * (1 << t)
    for tau, c in a.items:
        dense[tau] = c
    for subset in catalog.all_int_sets():
        prod = 1
        for tau in subset:
            prod *= dense[tau]
            if prod == 0:
                break
        total += prod
    return total


def count_t1(a: AVector) -> int:
    """Closed form for t=1: k + C(a_1, 2)."""
    _require_t(a, 1, "count_t1")
    return a.k + math.comb(a.get(1), 2)


def count_t2(a: AVector) -> int:
    """Closed form for t=2 in the published shape:
    k + C(k - a_00, 2) - a_10*a_01 + a_10*a_01*a_11.
    """
    _require_t(a, 2, "count_t2")
    k = a.k
    a00, a10, a01, a11 = a.get(0), a.get(1), a.get(2), a.get(3)
    return k + math.comb(k - a00, 2) - a10 * a01 + a10 * a01 * a11


_T3_BAD_PAIRS = ((1, 2), (1, 4), (2, 4), (1, 6), (2, 5), (3, 4))

_T3_TRIPLES = (
    (1, 2, 3), (1, 2, 7), (1, 3, 6), (1, 4, 5), (1, 4, 7), (1, 5, 6),
    (1, 6, 7), (2, 3, 5), (2, 4, 6), (2, 4, 7), (2, 5, 6), (2, 5, 7),
    (3, 4, 5), (3, 4, 6), (3, 4, 7), (3, 5, 6), (3, 5, 7), (3, 6, 7),
    (5, 6, 7),
)

_T3_QUADS = (
    (1, 2, 4, 7), (1, 2, 5, 6), (1, 3, 4, 6), (1, 3, 5, 7),
    (2, 3, 4, 5), (2, 3, 6, 7), (4, 5, 6, 7),
)


def count_t3_dense(dense: Sequence[int]) -> int:
    """count_t3 on a plain dense length-8 count sequence (search fast path)."""
    k = sum(dense)
    rest = k - dense[0]
    total = k + rest * (rest - 1) // 2
    for i, j in _T3_BAD_PAIRS:
        total -= dense[i] * dense[j]
    for i, j, l in _T3_TRIPLES:
        total += dense[i] * dense[j] * dense[l]
    for i, j, l, m in _T3_QUADS:
        total += dense[i] * dense[j] * dense[l] * dense[m]
    return total


def count_t3(a: AVector) -> int:
    """Closed form for t=3: k + C(k - a_000, 2) minus the six
    disjoint-support pair products, plus the 19 triple and 7 quadruple
    monomials, with hard-coded index sets.
    """
    _require_t(a, 3, "count_t3")
    return count_t3_dense(a.as_tuple())


def count_canonical_base(a: AVector) -> int:
    """Closed form for vectors supported on the unit vectors and the
    all-ones vector (zero-index rows allowed, they only enlarge k):
    k + sum of pair terms + a_ones * (prod_i (1 + a_unit_i) - 1).
    """
    t = a.t
    if t < 1:
        raise DomainError("count_canonical_base requires t >= 1")
    ones = (1 << t) - 1
    allowed = {0, ones} | {1 << i for i in range(t)}
    for tau, _ in a.items:
        if tau not in allowed:
            raise DomainError(
                f"count supported off the canonical base at index {tau}"
            )
    total = a.k + _pair_sum(a)
    if t == 1:
        return total
    prod = 1
    for i in range(t):
        prod *= 1 + a.get(1 << i)
    return total + a.get(ones) * (prod - 1)


def leading_term(a: AVector, catalog: MGCatalog | None = None) -> int:
    """Top-degree part of count_general: the sum over all size-(t+1)
    catalog sets of the product of their counts. Requires 2 <= t <= 5.
    """
    t = a.t
    if not 2 <= t <= 5:
        raise DomainError(f"leading_term requires 2 <= t <= 5, got {t}")
    if catalog is None:
        catalog = build_catalog(t)
    elif catalog.t != t:
        raise DomainError(f"catalog t={catalog.t} does not match vector t={t}")
    dense = [0] * (1 << t)
    for tau, c in a.items:
        dense[tau] = c
    total = 0
    for subset in catalog.sets_by_size[t + 1]:
        prod = 1
        for v in subset:
            prod *= dense[v.bits]
            if prod == 0:
                break
        total += prod
    return total


def leading_term_ordered(a: AVector) -> Fraction:
    """The same top-degree part computed the independent way: sum over
    ordered tuples (v_1..v_t) of vectors outside the span of their
    predecessors of count(v_1)*..*count(v_t)*count(v_1 ^ .. ^ v_t),
    divided by (t+1)!. Always an integer-valued Fraction.
    """
    t = a.t
    if not 2 <= t <= 5:
        raise DomainError(f"leading_term_ordered requires 2 <= t <= 5, got {t}")
    dense = [0] * (1 << t)
    for tau, c in a.items:
        dense[tau] = c
    size = 1 << t

    def rec(depth: int, span: frozenset[int], xor: int, prod: int) -> int:
        if depth == t:
            return prod * dense[xor]
        total = 0
        for v in range(1, size):
            if v in span or dense[v] == 0:
                continue
            total += rec(
                depth + 1,
                span | frozenset(s ^ v for s in span),
                xor ^ v,
                prod * dense[v],
            )
        return total

    return Fraction(rec(0, frozenset({0}), 0, 1), math.factorial(t + 1))


def breakdown(a: AVector, catalog: MGCatalog | None = None) -> dict:
    """JSON-ready report: total count plus its singleton, pair, and
    per-size monomial contributions.
    """
    t = a.t
    k = a.k
    pair = _pair_sum(a) if t >= 1 else 0
    by_size: dict[str, int] = {}
    if t >= 2:
        if catalog is None:
            catalog = build_catalog(t)
        elif catalog.t != t:
            raise DomainError(f"catalog t={catalog.t} does not match vector t={t}")
        dense = [0] * (1 << t)
        for tau, c in a.items:
            dense[tau] = c
        for size, sets in sorted(catalog.int_sets_by_size().items()):
            acc = 0
            for subset in sets:
                prod = 1
                for tau in subset:
                    prod *= dense[tau]
                    if prod == 0:
                        break
                acc += prod
            by_size[str(size)] = acc
    total = k + pair + sum(by_size.values())
    return {
        "t": t,
        "k": k,
        "a_vector": a.to_json_obj(),
        "M": total,
        "breakdown": {
            "singletons": k,
            "pair_term": pair,
            "mg_terms_by_size": by_size,
        },
    }
