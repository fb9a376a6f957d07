"""Backend selection for the face kernels.

The compiled ``_speedups`` module is used when it imports and the vertex
count fits in 64 bits; otherwise the pure-Python ``_kernels_py`` runs.
Set ``EULERFACES_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from types import ModuleType
from typing import Sequence

from . import _kernels_py

_compiled: ModuleType | None
if os.environ.get("EULERFACES_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _speedups as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
MAX_COMPILED_VERTICES = 64


def _pick(n_vertices: int) -> ModuleType:
    if _compiled is not None and n_vertices <= MAX_COMPILED_VERTICES:
        return _compiled
    return _kernels_py


def face_masks(facets: Sequence[int], n_vertices: int) -> list[int]:
    return list(_pick(n_vertices).face_masks(list(facets)))


def size_counts(facets: Sequence[int], n_vertices: int) -> list[int]:
    return list(_pick(n_vertices).size_counts(list(facets)))


def link_euler(facets: Sequence[int], sigma: int, n_vertices: int) -> int:
    return int(_pick(n_vertices).link_euler(list(facets), sigma))


def link_eulers(facets: Sequence[int], sigmas: Sequence[int], n_vertices: int) -> list[int]:
    return list(_pick(n_vertices).link_eulers(list(facets), list(sigmas)))
