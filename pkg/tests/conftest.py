"""Shared helpers: deterministic random full-rank code generation."""

from __future__ import annotations

import random

import pytest

from mincw.gf2_core import BinaryCode, BitVec


def random_full_rank_code(rng: random.Random, n: int, k: int) -> BinaryCode:
    """Rejection-sample a random [n, k] binary code with full-rank rows."""
    while True:
        bits = [rng.randrange(1, 1 << n) for _ in range(k)]
        basis: list[int] = []
        ok = True
        for row in bits:
            for b in basis:
                row = min(row, row ^ b)
            if not row:
                ok = False
                break
            basis.append(row)
        if ok:
            return BinaryCode(n, k, tuple(BitVec(n, b) for b in bits))


@pytest.fixture
def make_code():
    """Factory fixture: make_code(rng, n, k) -> random full-rank code."""
    return random_full_rank_code
