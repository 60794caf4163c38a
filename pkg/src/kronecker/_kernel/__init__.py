"""Kernel selection: compiled extension when available, pure Python otherwise.

Set KRONECKER_PURE=1 to force the pure-Python kernels (used by the benchmark
and by tests that cross-check the two implementations).
"""

import os

if os.environ.get("KRONECKER_PURE"):
    from kronecker._kernel.pure import IMPL, add_scaled_terms, mul_terms
else:
    try:
        from kronecker._kernel.fast import IMPL, add_scaled_terms, mul_terms
    except ImportError:
        from kronecker._kernel.pure import IMPL, add_scaled_terms, mul_terms

__all__ = ["IMPL", "mul_terms", "add_scaled_terms"]
