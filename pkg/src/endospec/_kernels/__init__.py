"""Kernel backend selection.

Prefers the compiled extension when it built; falls back to the pure-Python
twin with identical semantics. Set ENDOSPEC_PURE=1 to force the fallback
(used by the benchmark and the parity tests).
"""

import os

if os.environ.get("ENDOSPEC_PURE"):
    from endospec._kernels import pure as _impl

    BACKEND = "pure"
else:
    try:
        from endospec._kernels import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        from endospec._kernels import pure as _impl

        BACKEND = "pure"

mat_mul_int = _impl.mat_mul_int
det_int = _impl.det_int
charpoly_int = _impl.charpoly_int
minor_dets_int = _impl.minor_dets_int
poly_mul_int = _impl.poly_mul_int
poly_scale_sub_int = _impl.poly_scale_sub_int
row_combine_int = _impl.row_combine_int
row_content_int = _impl.row_content_int
row_divide_int = _impl.row_divide_int

__all__ = [
    "BACKEND",
    "mat_mul_int",
    "det_int",
    "charpoly_int",
    "minor_dets_int",
    "poly_mul_int",
    "poly_scale_sub_int",
    "row_combine_int",
    "row_content_int",
    "row_divide_int",
]
