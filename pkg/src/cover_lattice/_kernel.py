"""Selects the belief-ranking kernel at import time.

The compiled extension is preferred; the pure-Python twin is used when the
extension is missing or when ``COVER_LATTICE_PURE=1`` is set.
"""

from __future__ import annotations

import os

from . import _fixpoint_py

if os.environ.get("COVER_LATTICE_PURE") == "1":
    _impl = _fixpoint_py
else:
    try:
        from . import _fixpoint as _impl
    except ImportError:
        _impl = _fixpoint_py

BACKEND: str = "pure" if _impl is _fixpoint_py else "compiled"
rank_table = _impl.rank_table
