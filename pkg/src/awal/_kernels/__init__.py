"""Kernel selection: compiled extension when available, pure Python otherwise.

Set AWAL_PURE_PYTHON=1 to force the fallback (used by the benchmark and to
debug suspected extension issues).
"""

import os

if os.environ.get("AWAL_PURE_PYTHON"):
    from awal._kernels import pure as _impl
else:
    try:
        from awal._kernels import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        from awal._kernels import pure as _impl  # type: ignore[no-redef]

levenshtein = _impl.levenshtein
script_scan = _impl.script_scan
BACKEND = _impl.BACKEND

__all__ = ["levenshtein", "script_scan", "BACKEND"]
