"""Finite abstract simplicial complexes stored by their facets.

Faces are sorted tuples of non-negative vertex labels.  The empty face is
never stored; code that needs ``f_{-1} = 1`` adds it itself.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from . import kernels

__all__ = [
    "Face",
    "FVector",
    "SimplicialComplex",
    "FacetFormatError",
    "from_facets",
    "f_vector",
    "euler_classical",
    "link",
    "link_by_definition",
    "link_euler_characteristics",
    "boundary",
    "double",
    "is_pure",
    "parse_facets",
    "read_facet_file",
    "format_facets",
]

Face = tuple[int, ...]


def _as_face(vertices: Iterable[int]) -> Face:
    vs = list(vertices)
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex labels must be non-negative integers, got {v!r}")
    face = tuple(sorted(vs))
    if not face:
        raise ValueError("faces must be nonempty")
    if len(set(face)) != len(face):
        raise ValueError(f"facet {list(vs)} repeats a vertex")
    return face


class SimplicialComplex:
    """Downward closure of a set of facets.

    Duplicate and dominated facets are absorbed at construction.  An empty
    facet list gives the empty complex (dimension -1), which is how empty
    links and boundaries are represented.
    """

    __slots__ = ("_facets", "_vertices", "_index", "_masks", "_faces", "_lock")

    def __init__(self, facets: Iterable[Iterable[int]] = ()):
        raw = {_as_face(f) for f in facets}
        vertices = sorted({v for f in raw for v in f})
        index = {v: i for i, v in enumerate(vertices)}

        def mask(face: Face) -> int:
            m = 0
            for v in face:
                m |= 1 << index[v]
            return m

        kept: list[tuple[int, Face]] = []
        for f in sorted(raw, key=lambda f: (-len(f), f)):
            m = mask(f)
            if not any(m & k == m for k, _ in kept):
                kept.append((m, f))
        kept.sort(key=lambda t: t[1])
        self._facets: tuple[Face, ...] = tuple(f for _, f in kept)
        self._masks: tuple[int, ...] = tuple(m for m, _ in kept)
        self._vertices: tuple[int, ...] = tuple(vertices)
        self._index = index
        self._faces: dict[int, tuple[Face, ...]] | None = None
        self._lock = threading.Lock()

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self._facets

    def mask(self, face: Iterable[int]) -> int:
        m = 0
        for v in face:
            m |= 1 << self._index[v]
        return m

    def unmask(self, m: int) -> Face:
        out = []
        i = 0
        while m:
            if m & 1:
                out.append(self._vertices[i])
            m >>= 1
            i += 1
        return tuple(out)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._masks

    def _face_table(self) -> dict[int, tuple[Face, ...]]:
        if self._faces is None:
            with self._lock:
                if self._faces is None:
                    grouped: dict[int, list[Face]] = {}
                    for m in kernels.face_masks(self._masks, len(self._vertices)):
                        face = self.unmask(m)
                        grouped.setdefault(len(face) - 1, []).append(face)
                    self._faces = {k: tuple(sorted(v)) for k, v in sorted(grouped.items())}
        return self._faces

    def faces(self, dim: int | None = None) -> tuple[Face, ...]:
        """Faces of one dimension, or all faces ordered by dimension then lexicographically."""
        table = self._face_table()
        if dim is not None:
            return table.get(dim, ())
        return tuple(f for k in table for f in table[k])

    def __contains__(self, face: object) -> bool:
        try:
            vs = tuple(face)  # type: ignore[arg-type]
            if not vs or any(v not in self._index for v in vs):
                return False
            m = self.mask(vs)
        except TypeError:
            return False
        if m.bit_count() != len(vs):
            return False
        return any(m & f == m for f in self._masks)

    def __iter__(self) -> Iterator[Face]:
        return iter(self.faces())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dimension}, facets={len(self._facets)}, vertices={len(self._vertices)})"

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex([mapping.get(v, v) for v in f] for f in self._facets)


@dataclass(frozen=True)
class FVector:
    """Face counts ``f_0 .. f_d``; the empty complex has ``counts == ()``."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("face counts must be non-negative")
        if self.counts and self.counts[-1] == 0:
            raise ValueError("top face count must be positive")

    @property
    def dimension(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        """``f_n``; zero outside ``0..d`` and ``1`` for the empty face ``n = -1``."""
        if n == -1:
            return 1
        if 0 <= n < len(self.counts):
            return self.counts[n]
        return 0

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)


def from_facets(facets: Sequence[Sequence[int]]) -> SimplicialComplex:
    facets = list(facets)
    if not facets:
        raise ValueError("a complex needs at least one facet")
    return SimplicialComplex(facets)


def f_vector(C: SimplicialComplex) -> FVector:
    if C.is_empty():
        return FVector(())
    return FVector(tuple(kernels.size_counts(C.facet_masks, len(C.vertices))))


def euler_classical(C: SimplicialComplex) -> int:
    return sum((-1) ** n * f for n, f in enumerate(f_vector(C)))


def _require_face(C: SimplicialComplex, sigma: Iterable[int]) -> Face:
    face = tuple(sorted(sigma))
    if face not in C:
        raise ValueError(f"{list(face)} is not a face of the complex")
    return face


def link(C: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Link of ``sigma``, built from the facets that contain it."""
    face = set(_require_face(C, sigma))
    return SimplicialComplex(
        [v for v in f if v not in face] for f in C.facets if face <= set(f) and len(f) > len(face)
    )


def link_by_definition(C: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Link of ``sigma`` as ``{tau : tau & sigma empty, tau | sigma a face}``; slow, for cross-checks."""
    face = _require_face(C, sigma)
    fs = set(face)
    return SimplicialComplex(
        tau for tau in C.faces() if fs.isdisjoint(tau) and tuple(sorted(fs.union(tau))) in C
    )


def link_euler_characteristics(C: SimplicialComplex) -> dict[Face, int]:
    """``{face: euler_classical(link(C, face))}`` over every face, in face order."""
    faces = C.faces()
    chis = kernels.link_eulers(C.facet_masks, [C.mask(f) for f in faces], len(C.vertices))
    return dict(zip(faces, chis))


def is_pure(C: SimplicialComplex) -> bool:
    d = C.dimension
    return all(len(f) - 1 == d for f in C.facets)


def boundary(C: SimplicialComplex) -> SimplicialComplex:
    """Closure of the ridges that lie in exactly one facet."""
    if C.is_empty() or C.dimension < 1:
        raise ValueError("boundary needs a pure complex of dimension >= 1")
    if not is_pure(C):
        raise ValueError("boundary needs a pure complex")
    counts: dict[Face, int] = {}
    for f in C.facets:
        for ridge in combinations(f, len(f) - 1):
            counts[ridge] = counts.get(ridge, 0) + 1
    return SimplicialComplex(r for r, k in counts.items() if k == 1)


def double(M: SimplicialComplex) -> SimplicialComplex:
    """Two copies of ``M`` glued along its boundary.

    Interior vertices of the second copy get fresh labels ``max + 1, max + 2,
    ...`` in sorted order.  Gluing only works when no face of ``M`` outside
    the boundary has all its vertices on the boundary.
    """
    B = boundary(M)
    if B.is_empty():
        raise ValueError("double needs a nonempty boundary; the complex is closed")
    on_boundary = set(B.vertices)
    for face in M.faces():
        if on_boundary.issuperset(face) and face not in B:
            raise ValueError(
                f"face {list(face)} has all vertices on the boundary but is not a boundary face; "
                "the two copies would collide. Subdivide first (e.g. stellar_subdivision or a cone)."
            )
    interior = [v for v in M.vertices if v not in on_boundary]
    top = max(M.vertices)
    fresh = {v: top + 1 + i for i, v in enumerate(interior)}
    return SimplicialComplex(list(M.facets) + list(M.relabel(fresh).facets))


class FacetFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_facets(text: str) -> list[list[int]]:
    """Parse the facet file format: one facet per line, ``#`` comments."""
    facets = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        facet = []
        for tok in body.split():
            try:
                v = int(tok)
            except ValueError:
                raise FacetFormatError(line_no, f"not an integer vertex id: {tok!r}") from None
            if v < 0:
                raise FacetFormatError(line_no, f"negative vertex id {v}")
            facet.append(v)
        if len(set(facet)) != len(facet):
            raise FacetFormatError(line_no, "repeated vertex in facet")
        facets.append(facet)
    return facets


def read_facet_file(path: str | Path) -> SimplicialComplex:
    facets = parse_facets(Path(path).read_text(encoding="utf-8"))
    if not facets:
        raise FacetFormatError(0, "file contains no facets")
    return SimplicialComplex(facets)


def format_facets(C: SimplicialComplex, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.extend(" ".join(map(str, f)) for f in C.facets)
    return "\n".join(lines) + "\n"
