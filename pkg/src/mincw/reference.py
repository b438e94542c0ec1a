"""Reference grid of previously reported maximum minimal-codeword counts
for 1 <= k <= n <= 15, used to cross-check computed tables.

One cell of the grid is known to be wrong: (n, k) = (15, 14) is recorded as
196, but every code of codimension 1 obeys the closed form C(n, 2), which
gives 105. Comparisons flag that cell instead of matching the recorded
value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

__all__ = [
    "REPORTED_MAX",
    "KNOWN_BAD_CELLS",
    "ReferenceDiff",
    "reported_value",
    "diff_against_reference",
]

_ROWS: dict[int, tuple[int, ...]] = {
    1: (1,),
    2: (1, 2),
    3: (1, 3, 3),
    4: (1, 3, 6, 4),
    5: (1, 3, 6, 10, 5),
    6: (1, 3, 7, 11, 15, 6),
    7: (1, 3, 7, 14, 17, 21, 7),
    8: (1, 3, 7, 14, 22, 25, 28, 8),
    9: (1, 3, 7, 15, 26, 33, 36, 36, 9),
    10: (1, 3, 7, 15, 30, 42, 48, 48, 45, 10),
    11: (1, 3, 7, 15, 30, 52, 66, 69, 63, 55, 11),
    12: (1, 3, 7, 15, 30, 54, 90, 103, 95, 82, 66, 12),
    13: (1, 3, 7, 15, 31, 58, 94, 151, 149, 130, 102, 78, 13),
    14: (1, 3, 7, 15, 31, 62, 106, 159, 245, 217, 175, 126, 91, 14),
    15: (1, 3, 7, 15, 31, 63, 110, 183, 257, 385, 308, 221, 155, 196, 15),
}

REPORTED_MAX: dict[tuple[int, int], int] = {
    (n, k): v for n, row in _ROWS.items() for k, v in enumerate(row, start=1)
}

# cell -> corrected value (from the codimension-1 closed form C(n, 2))
KNOWN_BAD_CELLS: dict[tuple[int, int], int] = {(15, 14): 105}


@dataclass(frozen=True)
class ReferenceDiff:
    """Outcome of comparing a computed grid against the reference grid.

    mismatches and flagged hold (n, k, computed, reported) tuples; flagged
    collects known-bad reference cells where the computation agrees with the
    correction instead.
    """

    checked: int
    matches: int
    mismatches: tuple[tuple[int, int, int, int], ...]
    flagged: tuple[tuple[int, int, int, int], ...]
    skipped: tuple[tuple[int, int], ...]

    @property
    def clean(self) -> bool:
        return not self.mismatches


def reported_value(n: int, k: int) -> int | None:
    return REPORTED_MAX.get((n, k))


def diff_against_reference(
    computed: Mapping[tuple[int, int], int | None],
) -> ReferenceDiff:
    """Compare computed values cell by cell with the reference grid.

    Cells absent from the reference or computed as None are skipped. A
    known-bad cell counts as flagged when the computed value equals the
    correction, and as a mismatch only when it equals neither number.
    """
    checked = 0
    matches = 0
    mismatches: list[tuple[int, int, int, int]] = []
    flagged: list[tuple[int, int, int, int]] = []
    skipped: list[tuple[int, int]] = []
    for cell in sorted(computed):
        reported = REPORTED_MAX.get(cell)
        value = computed[cell]
        if reported is None or value is None:
            skipped.append(cell)
            continue
        checked += 1
        corrected = KNOWN_BAD_CELLS.get(cell)
        if corrected is not None and value == corrected:
            flagged.append((*cell, value, reported))
        elif value == reported:
            matches += 1
        else:
            mismatches.append((*cell, value, reported))
    return ReferenceDiff(
        checked=checked,
        matches=matches,
        mismatches=tuple(mismatches),
        flagged=tuple(flagged),
        skipped=tuple(skipped),
    )
