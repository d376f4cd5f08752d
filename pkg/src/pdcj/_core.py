"""Kernel selection: compiled extension when importable, else pure Python.

Set ``PDCJ_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("PDCJ_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

COMPILED = kernels.__name__.endswith("._kernels")
