"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set FFHYPER_PURE_PYTHON=1 to force the fallback (useful for benchmarking
and for debugging the compiled path against the reference).
"""
from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("FFHYPER_PURE_PYTHON") == "1":
    _speedups = None
else:
    try:
        from . import _speedups  # type: ignore[attr-defined]
    except ImportError:
        _speedups = None

HAVE_SPEEDUPS = _speedups is not None


def make_kernel_rings(N: int, phi: int, red: list[list[int]]):
    """Return (pure, fast) kernel rings; fast is None without the extension."""
    pure = _kernel_py.KernelRing(N, phi, red)
    fast = None
    if _speedups is not None:
        try:
            fast = _speedups.KernelRing(N, phi, red)
        except OverflowError:
            fast = None  # reduction rows exceed int64; stay on the pure path
    return pure, fast
