"""Triangulated spheres, balls and surfaces used as test subjects."""
from __future__ import annotations

from itertools import combinations, product

from .simplicial import SimplicialComplex, link

__all__ = [
    "simplex",
    "simplex_boundary",
    "cross_polytope_boundary",
    "point",
    "cone",
    "join",
    "suspension",
    "stellar_subdivision",
    "torus_7",
    "projective_plane_6",
    "bowtie",
    "FAMILIES",
    "generate",
]


def simplex(d: int) -> SimplicialComplex:
    """The full ``d``-simplex on ``0..d``."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return SimplicialComplex([range(d + 1)])


def point() -> SimplicialComplex:
    return simplex(0)


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``(d+1)``-simplex: a ``d``-sphere on ``d + 2`` vertices."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return SimplicialComplex(combinations(range(d + 2), d + 1))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``(d+1)``-dimensional cross-polytope; antipodal pairs ``(2i, 2i+1)``."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return SimplicialComplex(product(*[(2 * i, 2 * i + 1) for i in range(d + 1)]))


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Join with ``B`` relabeled to ``max(A) + 1, max(A) + 2, ...`` in sorted order."""
    if A.is_empty() or B.is_empty():
        raise ValueError("join needs two nonempty complexes")
    offset = max(A.vertices) + 1
    shift = {v: offset + i for i, v in enumerate(B.vertices)}
    return SimplicialComplex(fa + tuple(shift[v] for v in fb) for fa in A.facets for fb in B.facets)


def cone(C: SimplicialComplex) -> SimplicialComplex:
    """Apex ``max(C) + 1`` joined to every facet."""
    return join(C, point())


def suspension(C: SimplicialComplex) -> SimplicialComplex:
    """Join with two new vertices ``max(C) + 1`` and ``max(C) + 2``."""
    return join(C, simplex_boundary(0))


def stellar_subdivision(C: SimplicialComplex) -> SimplicialComplex:
    """Star every facet at a new interior vertex.

    Afterwards each facet has a vertex off the boundary, which is what
    :func:`eulerfaces.simplicial.double` needs for a single simplex.
    """
    if C.is_empty():
        return C
    top = max(C.vertices)
    facets = []
    for i, f in enumerate(C.facets):
        apex = top + 1 + i
        if len(f) == 1:
            facets.append((f[0], apex))
            continue
        facets.extend(ridge + (apex,) for ridge in combinations(f, len(f) - 1))
    return SimplicialComplex(facets)


def torus_7() -> SimplicialComplex:
    """Moebius' 7-vertex torus: ``{i, i+1, i+3}`` and ``{i, i+2, i+3}`` mod 7."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(facets)


# antipodal quotient of the icosahedron
_RP2_6 = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
)


def _is_cycle(C: SimplicialComplex) -> bool:
    if C.dimension != 1 or not C.facets:
        return False
    adj: dict[int, list[int]] = {v: [] for v in C.vertices}
    for a, b in C.facets:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(n) != 2 for n in adj.values()):
        return False
    start = C.vertices[0]
    prev, cur, steps = None, start, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == start:
            return steps == len(C.vertices)


def projective_plane_6() -> SimplicialComplex:
    C = SimplicialComplex(_RP2_6)
    edges = C.faces(1)
    if len(C.facets) != 10 or set(edges) != set(combinations(range(6), 2)):
        raise RuntimeError("embedded RP^2 data does not have a complete 1-skeleton")
    for v in C.vertices:
        if not _is_cycle(link(C, (v,))):
            raise RuntimeError(f"embedded RP^2 data: link of vertex {v} is not a 5-cycle")
    return C


def bowtie() -> SimplicialComplex:
    """Two triangles sharing the single vertex 0; not semi-Eulerian."""
    return SimplicialComplex([(0, 1, 2), (0, 3, 4)])


def _ball(d: int) -> SimplicialComplex:
    if d < 1:
        raise ValueError("ball needs d >= 1")
    return cone(simplex_boundary(d - 1))


FAMILIES = {
    "simplex-boundary": simplex_boundary,
    "cross-polytope": cross_polytope_boundary,
    "simplex": simplex,
    "ball": _ball,
    "torus": lambda d=None: torus_7(),
    "projective-plane": lambda d=None: projective_plane_6(),
    "bowtie": lambda d=None: bowtie(),
}
_NEEDS_DIM = {"simplex-boundary", "cross-polytope", "simplex", "ball"}


def generate(family: str, dim: int | None = None) -> SimplicialComplex:
    """Build a named family; ``dim`` is required for the dimensioned ones."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    if family in _NEEDS_DIM:
        if dim is None:
            raise ValueError(f"family {family!r} needs a dimension")
        return builder(dim)
    return builder()
