"""Kernel backend selection: compiled extension if importable, else pure Python.

Set ``UAVCIRCLE_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("UAVCIRCLE_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as kernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as kernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
