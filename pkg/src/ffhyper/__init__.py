"""Exact hypergeometric character sums over small finite fields."""

from ._kernel import HAVE_SPEEDUPS

__version__ = "0.1.0"
__all__ = ["HAVE_SPEEDUPS", "__version__"]
