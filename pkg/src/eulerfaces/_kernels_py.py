"""Pure-Python face kernels over vertex bitmasks.

A face is an int whose set bits are vertex indices.  Masks may be of any
width here; the compiled twin in ``_speedups`` is limited to 64 vertices.
"""
from __future__ import annotations

from typing import Iterable, Sequence


def _submasks(facets: Iterable[int]) -> set[int]:
    seen: set[int] = set()
    for f in facets:
        sub = f
        while sub:
            seen.add(sub)
            sub = (sub - 1) & f
    return seen


def face_masks(facets: Sequence[int]) -> list[int]:
    """All nonempty faces of the downward closure, sorted by mask value."""
    return sorted(_submasks(facets))


def size_counts(facets: Sequence[int]) -> list[int]:
    """``out[k]`` is the number of faces with ``k + 1`` vertices."""
    top = max((f.bit_count() for f in facets), default=0)
    out = [0] * top
    for face in _submasks(facets):
        out[face.bit_count() - 1] += 1
    return out


def link_euler(facets: Sequence[int], sigma: int) -> int:
    """Euler characteristic of the link of ``sigma``; 0 for an empty link."""
    residues = [f & ~sigma for f in facets if f & sigma == sigma]
    chi = 0
    for face in _submasks(r for r in residues if r):
        chi += 1 if face.bit_count() & 1 else -1
    return chi


def link_eulers(facets: Sequence[int], sigmas: Sequence[int]) -> list[int]:
    return [link_euler(facets, s) for s in sigmas]
