"""Backend selection for the enumeration kernel.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Setting ``PRYMCALC_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

# magnitude guard so the compiled backend never overflows 64-bit arithmetic
_MAX_ABS = 1 << 20

if os.environ.get("PRYMCALC_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"


def norm_vectors(lo, hi, weights, target, masks=(), parities=(), backend=None):
    """Enumerate integer vectors in a box with a fixed weighted square norm.

    ``masks`` are bitmasks over coordinates, ``parities`` the required parity
    (0 or 1) of the coordinate sum under each mask.
    """
    n = len(lo)
    if len(hi) != n or len(weights) != n:
        raise ValueError("lo, hi and weights must have equal length")
    if n > 63:
        raise ValueError("at most 63 coordinates")
    if len(masks) != len(parities):
        raise ValueError("masks and parities must be parallel")
    lo = [int(v) for v in lo]
    hi = [int(v) for v in hi]
    weights = [int(w) for w in weights]
    target = int(target)
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    if any(abs(v) > _MAX_ABS for v in (*lo, *hi)) or abs(target) > _MAX_ABS ** 2:
        raise ValueError("enumeration box too large for the kernel")
    masks = [int(m) for m in masks]
    parities = [int(p) & 1 for p in parities]
    impl = _impl
    if backend == "python":
        impl = _kernels_py
    elif backend == "compiled":
        from . import _kernels as impl  # type: ignore[attr-defined,no-redef]
    return impl.norm_vectors(lo, hi, weights, target, masks, parities)
