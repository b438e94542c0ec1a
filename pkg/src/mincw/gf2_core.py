"""Bit-level linear algebra over GF(2): vectors, codes, rank, systematic form, spans.

Vectors live in a single machine word: bit i of ``bits`` is coordinate i+1,
so coordinates are 1-indexed in all user-facing I/O. Lengths are capped at 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetError, FormatError, InvalidCodeError

__all__ = [
    "MAX_LENGTH",
    "BitVec",
    "BinaryCode",
    "SystematicCode",
    "bitvec_parse",
    "support",
    "support_strictly_contained",
    "rank",
    "to_systematic",
    "span_enumerate",
    "parse_matrix",
    "read_matrix_file",
]

MAX_LENGTH = 64

SPAN_GUARD = 20


@dataclass(frozen=True)
class BitVec:
    """Fixed-length vector over GF(2); bit i of ``bits`` is coordinate i+1."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise FormatError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise FormatError("bits outside the declared length")

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.length != other.length:
            raise FormatError("length mismatch")
        return BitVec(self.length, self.bits ^ other.bits)

    def weight(self) -> int:
        """Number of nonzero coordinates."""
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_string(self) -> str:
        """Bit string, coordinate 1 first."""
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def __str__(self) -> str:
        return self.to_string()


def bitvec_parse(text: str) -> BitVec:
    """Parse a '0'/'1' string; character i+1 is coordinate i+1."""
    if not text:
        raise FormatError("empty bit string")
    if len(text) > MAX_LENGTH:
        raise FormatError(f"bit string longer than {MAX_LENGTH}")
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise FormatError(f"illegal character {ch!r} at position {i + 1}")
    return BitVec(len(text), bits)


def support(v: BitVec) -> frozenset[int]:
    """1-indexed set of nonzero coordinates."""
    return frozenset(i + 1 for i in range(v.length) if v.bits >> i & 1)


def support_strictly_contained(a: BitVec, b: BitVec) -> bool:
    """True iff supp(a) is a proper subset of supp(b)."""
    if a.length != b.length:
        raise FormatError("length mismatch")
    return a.bits != b.bits and a.bits & ~b.bits == 0


def rank(rows: Sequence[BitVec]) -> int:
    """GF(2) row rank by elimination."""
    lengths = {r.length for r in rows}
    if len(lengths) > 1:
        raise FormatError("length mismatch")
    return _rank_ints([r.bits for r in rows])


def _rank_ints(rows: Iterable[int]) -> int:
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    return len(basis)


def _reduce_by_basis(row: int, basis: Iterable[int]) -> int:
    for b in basis:
        row = min(row, row ^ b)
    return row


@dataclass(frozen=True)
class BinaryCode:
    """Binary linear code given by a full-rank generator matrix."""

    n: int
    k: int
    rows: tuple[BitVec, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n <= MAX_LENGTH:
            raise InvalidCodeError(f"need 1 <= k <= n <= {MAX_LENGTH}, got k={self.k}, n={self.n}")
        if len(self.rows) != self.k:
            raise InvalidCodeError(f"expected {self.k} rows, got {len(self.rows)}")
        if any(r.length != self.n for r in self.rows):
            raise InvalidCodeError("row length differs from n")
        if _rank_ints(r.bits for r in self.rows) != self.k:
            raise InvalidCodeError("rows dependent: generator matrix is not full rank")

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BinaryCode":
        vecs = tuple(bitvec_parse(r) for r in rows)
        if not vecs:
            raise InvalidCodeError("no generator rows")
        return cls(vecs[0].length, len(vecs), vecs)

    def row_ints(self) -> list[int]:
        return [r.bits for r in self.rows]

    @property
    def t(self) -> int:
        return self.n - self.k


@dataclass(frozen=True)
class SystematicCode:
    """Systematic view [I_k | A] of a code plus the column permutation back to it.

    ``col_perm[i]`` is the original 1-indexed column shown at systematic
    position i+1; positions 1..k are the pivot columns, k+1..k+t the rest.
    """

    k: int
    t: int
    info_rows: tuple[BitVec, ...]
    col_perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.t < 0:
            raise InvalidCodeError("negative redundancy")
        if self.t == 0:
            if self.info_rows:
                raise InvalidCodeError("t=0 admits no information columns")
        elif len(self.info_rows) != self.k:
            raise InvalidCodeError("wrong number of information rows")
        elif any(r.length != self.t for r in self.info_rows):
            raise InvalidCodeError("information row length differs from t")
        if sorted(self.col_perm) != list(range(1, self.k + self.t + 1)):
            raise InvalidCodeError("col_perm is not a permutation of 1..n")

    @property
    def n(self) -> int:
        return self.k + self.t

    def info_ints(self) -> list[int]:
        if self.t == 0:
            return [0] * self.k
        return [r.bits for r in self.info_rows]

    def systematic_word(self, mask: int, info: int) -> int:
        """Map a word given in systematic coordinates back to original ones."""
        word = 0
        combined = mask | info << self.k
        for pos in range(self.n):
            if combined >> pos & 1:
                word |= 1 << (self.col_perm[pos] - 1)
        return word

    def to_code(self) -> BinaryCode:
        """Regenerate a generator matrix in the original coordinate order."""
        rows = []
        for i in range(self.k):
            info = 0 if self.t == 0 else self.info_rows[i].bits
            rows.append(BitVec(self.n, self.systematic_word(1 << i, info)))
        return BinaryCode(self.n, self.k, tuple(rows))


def to_systematic(code: BinaryCode) -> SystematicCode:
    """Row-by-row elimination; each row pivots on its leftmost available column."""
    rows = code.row_ints()
    pivots: list[int] = []
    for i in range(code.k):
        for j, p in enumerate(pivots):
            if rows[i] >> p & 1:
                rows[i] ^= rows[j]
        if rows[i] == 0:
            raise InvalidCodeError("rows dependent: generator matrix is not full rank")
        p = (rows[i] & -rows[i]).bit_length() - 1
        for j in range(i):
            if rows[j] >> p & 1:
                rows[j] ^= rows[i]
        pivots.append(p)
    others = [c for c in range(code.n) if c not in pivots]
    col_perm = tuple(p + 1 for p in pivots) + tuple(c + 1 for c in others)
    t = code.n - code.k
    if t == 0:
        return SystematicCode(code.k, 0, tuple(), col_perm)
    info_rows = tuple(
        BitVec(t, sum((rows[i] >> c & 1) << j for j, c in enumerate(others)))
        for i in range(code.k)
    )
    return SystematicCode(code.k, t, info_rows, col_perm)


def span_enumerate(vectors: Sequence[BitVec], length: int | None = None) -> set[BitVec]:
    """All GF(2) linear combinations, including zero; cardinality 2^rank."""
    if len(vectors) > SPAN_GUARD:
        raise BudgetError(f"span enumeration capped at {SPAN_GUARD} vectors")
    if length is None:
        if not vectors:
            raise FormatError("empty input needs an explicit length")
        length = vectors[0].length
    if any(v.length != length for v in vectors):
        raise FormatError("length mismatch")
    basis: list[int] = []
    for v in vectors:
        r = _reduce_by_basis(v.bits, basis)
        if r:
            basis.append(r)
    span = {0}
    for b in basis:
        span |= {x ^ b for x in span}
    return {BitVec(length, x) for x in span}


def parse_matrix(text: str, source: str = "<string>") -> BinaryCode:
    """Parse the matrix file format: one '0'/'1' row per line.

    Blank lines and lines starting with '#' are ignored. Errors carry
    1-indexed line numbers.
    """
    rows: list[BitVec] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            vec = bitvec_parse(line)
        except FormatError as exc:
            raise FormatError(f"{source}:{lineno}: {exc}") from None
        if width is None:
            width = vec.length
        elif vec.length != width:
            raise FormatError(
                f"{source}:{lineno}: row length {vec.length} differs from {width}"
            )
        rows.append(vec)
    if not rows:
        raise FormatError(f"{source}: no generator rows found")
    try:
        return BinaryCode(rows[0].length, len(rows), tuple(rows))
    except InvalidCodeError as exc:
        raise InvalidCodeError(f"{source}: {exc}") from None


def read_matrix_file(path: str) -> BinaryCode:
    """Read a generator matrix file (format of parse_matrix)."""
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix(fh.read(), source=path)
