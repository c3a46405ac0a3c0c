"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``ARCMODEL_PURE_PYTHON=1``
forces the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("ARCMODEL_PURE_PYTHON", "") not in ("", "0"):
    _backend = _pykernels
else:
    try:
        from . import _ckernels as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = _pykernels

BACKEND: str = _backend.BACKEND
saturate_indices = _backend.saturate_indices
is_saturated_indices = _backend.is_saturated_indices
saturated_masks = _backend.saturated_masks
arc_index_table = _pykernels.arc_index_table


def available_backends() -> dict:
    """Name -> kernel module for every backend importable in this process."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
