"""Kernel selection: compiled extension when available, numpy fallback otherwise.

Set GSPECHT_PURE=1 to force the fallback (used by the benchmark and tests).
"""

import os

if os.environ.get("GSPECHT_PURE") == "1":
    from gspecht._core.pykernels import IMPL, matmul_mod, rref_mod
else:
    try:
        from gspecht._core._kernels import IMPL, matmul_mod, rref_mod
    except ImportError:
        from gspecht._core.pykernels import IMPL, matmul_mod, rref_mod

__all__ = ["IMPL", "matmul_mod", "rref_mod"]
