"""Select the exact-solve kernel at import time.

The compiled ``_kernels`` extension (multi-modular elimination) is preferred;
the pure-Python Bareiss solver in ``_fallback`` is used when the extension is
not built or when ``NILGRAPH_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("NILGRAPH_PURE_PYTHON", "") not in ("", "0"):
    _impl = _fallback
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _fallback

BACKEND: str = _impl.BACKEND
solve_integer_system = _impl.solve_integer_system


def available_backends() -> dict:
    out = {"python": _fallback.solve_integer_system}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels.solve_integer_system
    return out
