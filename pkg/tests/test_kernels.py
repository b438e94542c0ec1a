"""Backend parity: the compiled kernels must match the pure-Python twins
bit for bit, including truncation behaviour, and the MINCW_BACKEND variable
must select the implementation.
"""

import os
import random
import subprocess
import sys

import pytest

from mincw import _kernels_py as pure
from mincw.optimize import _sweep_plan

compiled = pytest.importorskip(
    "mincw._speedups", reason="compiled backend not built"
)

BUDGETS = (None, 0, 3, 10**9)


def test_backend_names():
    assert pure.BACKEND_NAME == "python"
    assert compiled.BACKEND_NAME == "c"


def test_subset_accept_parity():
    rng = random.Random(11)
    cases = [(), (5,), (3, 3), (1, 2, 3), (1, 2, 4, 7)]
    for _ in range(400):
        size = rng.randrange(0, 7)
        bits = rng.choice((8, 30, 60))
        cases.append(
            tuple(rng.randrange(1, 1 << bits) for _ in range(size))
        )
    for vals in cases:
        assert pure.subset_accept(list(vals)) == compiled.subset_accept(
            list(vals)
        ), vals


def test_catalog_scan_parity():
    for t in (2, 3, 4):
        assert pure.catalog_scan(t) == compiled.catalog_scan(t)


def test_composition_sweep_parity():
    for t, k_max in ((1, 6), (2, 6), (3, 5)):
        for leading_only in (False, True):
            nvals, pair_terms, by_last = _sweep_plan(t, leading_only)
            for budget in BUDGETS:
                got_p = pure.composition_sweep(
                    nvals, k_max, pair_terms, by_last, budget
                )
                got_c = compiled.composition_sweep(
                    nvals, k_max, pair_terms, by_last, budget
                )
                assert got_p == got_c, (t, k_max, leading_only, budget)


def test_census_scan_parity():
    for k in (1, 2, 3):
        for n in range(k, min(6, (1 << k) - 1) + 1):
            for budget in (None, 5):
                for first_col in (0, 1, 2):
                    got_p = pure.census_scan(n, k, budget, first_col)
                    got_c = compiled.census_scan(n, k, budget, first_col)
                    assert got_p == got_c, (n, k, budget, first_col)


def test_systematic_subsets_parity():
    rng = random.Random(12)
    for _ in range(30):
        k = rng.randrange(1, 13)
        t = rng.randrange(1, 6)
        info = [rng.randrange(1 << t) for _ in range(k)]
        for max_card in (1, 2, 3):
            for budget in BUDGETS:
                got_p = pure.systematic_subsets(list(info), max_card, budget)
                got_c = compiled.systematic_subsets(list(info), max_card, budget)
                assert got_p == got_c, (info, max_card, budget)


def test_systematic_subsets_parity_wide_rows():
    # row indices past bit 31 must still produce correct masks
    info = [1] * 40
    got_p = pure.systematic_subsets(list(info), 2)
    got_c = compiled.systematic_subsets(list(info), 2)
    assert got_p == got_c
    assert got_p[0][39][0] == 1 << 39


def test_bruteforce_minimal_parity():
    rng = random.Random(13)
    for _ in range(40):
        k = rng.randrange(1, 9)
        n = rng.randrange(k, 13)
        while True:
            rows = [rng.randrange(1, 1 << n) for _ in range(k)]
            span = [0]
            for r in rows:
                span += [x ^ r for x in span]
            if len(set(span)) == 1 << k:
                break
        assert pure.bruteforce_minimal(list(rows)) == compiled.bruteforce_minimal(
            list(rows)
        ), rows


def _backend_in_subprocess(value):
    env = dict(os.environ)
    if value is None:
        env.pop("MINCW_BACKEND", None)
    else:
        env["MINCW_BACKEND"] = value
    proc = subprocess.run(
        [sys.executable, "-c", "import mincw; print(mincw.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    return proc


def test_backend_env_selection():
    assert _backend_in_subprocess("python").stdout.strip() == "python"
    assert _backend_in_subprocess("c").stdout.strip() == "c"
    assert _backend_in_subprocess(None).stdout.strip() == "c"
    bad = _backend_in_subprocess("fortran")
    assert bad.returncode != 0
    assert "MINCW_BACKEND" in bad.stderr
