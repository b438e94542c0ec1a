"""Backend selection for the enumeration kernels.

The compiled extension (mincw._speedups) is used when importable; otherwise
the pure-Python twin (mincw._kernels_py) is used. Set MINCW_BACKEND=python
or MINCW_BACKEND=c to force a backend explicitly.
"""

from __future__ import annotations

import os

from . import _kernels_py

__all__ = [
    "BACKEND",
    "composition_sweep",
    "census_scan",
    "systematic_subsets",
    "bruteforce_minimal",
    "catalog_scan",
    "subset_accept",
]

_choice = os.environ.get("MINCW_BACKEND", "").strip().lower()
if _choice in ("", "auto"):
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py
elif _choice in ("python", "py", "pure"):
    _impl = _kernels_py
elif _choice in ("c", "cython", "compiled", "speedups"):
    from . import _speedups as _impl  # type: ignore[attr-defined,no-redef]
else:
    raise ImportError(
        f"unknown MINCW_BACKEND value {_choice!r}; use 'python' or 'c'"
    )

BACKEND: str = getattr(_impl, "BACKEND_NAME", "c")

composition_sweep = _impl.composition_sweep
census_scan = _impl.census_scan
systematic_subsets = _impl.systematic_subsets
bruteforce_minimal = _impl.bruteforce_minimal
# Catalog construction is a cached one-shot job; the compiled twin may omit it.
catalog_scan = getattr(_impl, "catalog_scan", _kernels_py.catalog_scan)
subset_accept = getattr(_impl, "subset_accept", _kernels_py.subset_accept)
