"""Hot loops: sparse column reduction for boundary matrices, and the
partial-basis test that dominates complex enumeration.

The compiled extension is used when it was built; otherwise, or when
ODDSYMP_PURE_PYTHON=1, the pure-Python twin is used. Both have the same
contract. Over Z the compiled path works in int64 and falls back to Python
integers on overflow, so results are always exact.
"""
from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_compiled = None
if os.environ.get("ODDSYMP_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _compiled = None


def reduce_columns(columns, nrows: int, modulus: int = 0):
    if _compiled is not None:
        try:
            return _compiled.reduce_columns(columns, nrows, modulus)
        except OverflowError:
            pass
    return _pykernels.reduce_columns(columns, nrows, modulus)


def is_primitive(rows, ncols: int) -> bool:
    if _compiled is not None:
        try:
            return _compiled.is_primitive(rows, ncols)
        except OverflowError:
            pass
    return _pykernels.is_primitive(rows, ncols)


__all__ = ["BACKEND", "is_primitive", "reduce_columns"]
