"""Select the kernel implementation at import time.

The compiled ``_kernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` twin. Set ``BIGAMMA_PURE_PYTHON=1`` to force the
fallback.
"""
import os

if os.environ.get("BIGAMMA_PURE_PYTHON"):
    from . import _pykernels as kernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as kernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
