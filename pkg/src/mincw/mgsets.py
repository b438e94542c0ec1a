"""Minimal generating subsets of GF(2)^t: predicate, catalog, projective bases.

A finite set of vectors is minimal generating when XOR-summing all of them
yields either zero while no nonempty proper subset sums to zero, or a vector
that is minimal (for strict support containment) within the span of the set.
These sets of size 2..t+1 are the monomial supports of the counting formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels
from .errors import DomainError
from .gf2_core import BitVec, bitvec_parse

__all__ = [
    "MGCatalog",
    "is_minimal_generating",
    "is_mg_pair",
    "build_catalog",
    "projective_bases",
]

MIN_T = 2
MAX_T = 5


@dataclass(frozen=True)
class MGCatalog:
    """All minimal generating subsets of GF(2)^t of sizes 2..t+1.

    sets_by_size maps each size to a tuple of subsets; each subset is a tuple
    of BitVec(t) sorted by integer value, and subsets are listed in
    lexicographic order of their integer encodings.
    """

    t: int
    sets_by_size: Mapping[int, tuple[tuple[BitVec, ...], ...]]

    def sizes(self) -> dict[int, int]:
        """Number of catalog sets per size, for sizes 2..t+1."""
        return {s: len(v) for s, v in sorted(self.sets_by_size.items())}

    def int_sets_by_size(self) -> dict[int, tuple[tuple[int, ...], ...]]:
        """The catalog with vectors as plain ints (bit i = coordinate i+1)."""
        return {
            s: tuple(tuple(v.bits for v in subset) for subset in sets)
            for s, sets in sorted(self.sets_by_size.items())
        }

    def all_int_sets(self) -> list[tuple[int, ...]]:
        """Every catalog set as an int tuple, ordered by (size, lex)."""
        out: list[tuple[int, ...]] = []
        for s in sorted(self.sets_by_size):
            for subset in self.sets_by_size[s]:
                out.append(tuple(v.bits for v in subset))
        return out


def _normalize(s_hat: Iterable[BitVec | str]) -> tuple[int, set[int]]:
    """Validate a vector collection and return (t, set of int encodings)."""
    vecs = [bitvec_parse(v) if isinstance(v, str) else v for v in s_hat]
    if not vecs:
        raise DomainError("empty vector set")
    lengths = {v.length for v in vecs}
    if len(lengths) != 1:
        raise DomainError(f"mixed vector lengths {sorted(lengths)}")
    return lengths.pop(), {v.bits for v in vecs}


def is_minimal_generating(s_hat: Iterable[BitVec | str]) -> bool:
    """True iff the set of vectors is minimal generating.

    Accepts BitVec values or '0'/'1' strings, all of one length t >= 1.
    Duplicates collapse (set semantics). A singleton {x} qualifies iff x is
    nonzero; any set of size > t+1 contains a vanishing proper subset and
    never qualifies.
    """
    t, vals = _normalize(s_hat)
    if len(vals) == 1:
        return vals != {0}
    if len(vals) > t + 1:
        return False
    return kernels.subset_accept(sorted(vals))[0]


def is_mg_pair(a: BitVec, b: BitVec) -> bool:
    """True iff {a, b} is minimal generating: supports intersect.

    Requires two distinct nonzero vectors of equal length.
    """
    if a.length != b.length:
        raise DomainError(f"mixed vector lengths {a.length} and {b.length}")
    if a.bits == 0 or b.bits == 0:
        raise DomainError("zero vector in pair")
    if a.bits == b.bits:
        raise DomainError("equal vectors in pair")
    return (a.bits & b.bits) != 0


@lru_cache(maxsize=None)
def build_catalog(t: int) -> MGCatalog:
    """Catalog of all minimal generating subsets of GF(2)^t, sizes 2..t+1.

    Supported for 2 <= t <= 5 (subset enumeration budget). The result is
    cached and must be treated as read-only.
    """
    if not MIN_T <= t <= MAX_T:
        raise DomainError(f"catalog supports {MIN_T} <= t <= {MAX_T}, got {t}")
    by_size: dict[int, list[tuple[BitVec, ...]]] = {s: [] for s in range(2, t + 2)}
    for combo in kernels.catalog_scan(t):
        by_size[len(combo)].append(tuple(BitVec(t, v) for v in combo))
    return MGCatalog(t, {s: tuple(v) for s, v in by_size.items()})


def projective_bases(t: int) -> tuple[tuple[BitVec, ...], ...]:
    """The size-(t+1) catalog entries: sets with zero total sum and no
    vanishing proper nonempty subset sum.
    """
    return build_catalog(t).sets_by_size[t + 1]
