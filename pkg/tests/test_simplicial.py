import pytest

from eulerfaces.generators import (
    cone,
    cross_polytope_boundary,
    join,
    simplex,
    simplex_boundary,
    suspension,
    torus_7,
)
from eulerfaces.simplicial import (
    FacetFormatError,
    FVector,
    SimplicialComplex,
    boundary,
    double,
    euler_classical,
    f_vector,
    format_facets,
    from_facets,
    is_pure,
    link,
    link_by_definition,
    link_euler_characteristics,
    parse_facets,
    read_facet_file,
)
from oracles import all_faces, euler_brute, f_vector_brute, link_faces_brute

TORUS_FACETS = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [
    (i, (i + 2) % 7, (i + 3) % 7) for i in range(7)
]


def corpus(max_dim=4):
    out = []
    for d in range(max_dim + 1):
        out += [simplex_boundary(d), cross_polytope_boundary(d), simplex(d)]
    for d in range(max_dim):
        out.append(cone(simplex_boundary(d)))
    out += [torus_7(), join(simplex_boundary(1), cross_polytope_boundary(1))]
    return [C for C in out if C.dimension <= max_dim]


def test_from_facets_examples():
    C = from_facets([[0, 1, 2]])
    assert C.facets == ((0, 1, 2),) and C.dimension == 2
    assert from_facets([[0, 1], [1, 0], [0]]).facets == ((0, 1),)
    T = from_facets(TORUS_FACETS)
    assert T.dimension == 2 and len(T.facets) == 14


def test_from_facets_errors():
    with pytest.raises(ValueError):
        from_facets([])
    with pytest.raises(ValueError):
        from_facets([[0, 0, 1]])
    with pytest.raises(ValueError):
        from_facets([[0, -1]])


def test_from_facets_idempotent():
    for C in corpus():
        assert from_facets(C.facets) == C
        assert from_facets(C.facets).facets == C.facets


def test_noncontiguous_labels():
    C = from_facets([[10, 40, 7], [7, 99]])
    assert C.vertices == (7, 10, 40, 99)
    assert f_vector(C).counts == (4, 4, 1)
    assert (7, 99) in C and (10, 99) not in C


@pytest.mark.parametrize(
    "C,want",
    [
        (simplex_boundary(2), (4, 6, 4)),
        (simplex(2), (3, 3, 1)),
        (SimplicialComplex(TORUS_FACETS), (7, 21, 14)),
    ],
)
def test_f_vector_examples(C, want):
    assert f_vector(C).counts == want
    assert f_vector_brute(C.facets) == want


def test_f_vector_matches_enumeration_on_corpus():
    for C in corpus():
        assert f_vector(C).counts == f_vector_brute(C.facets)
        assert set(C.faces()) == all_faces(C.facets)


def test_fvector_type():
    fv = FVector((4, 6, 4))
    assert fv.dimension == 2 and fv[-1] == 1 and fv[5] == 0
    with pytest.raises(ValueError):
        FVector((1, 0))


@pytest.mark.parametrize(
    "C,want", [(simplex_boundary(2), 2), (SimplicialComplex(TORUS_FACETS), 0), (simplex(0), 1)]
)
def test_euler_classical(C, want):
    assert euler_classical(C) == want == euler_brute(C.facets)


@pytest.mark.parametrize("d", range(9))
def test_euler_of_simplex_boundaries(d):
    assert euler_classical(simplex_boundary(d)) == 1 + (-1) ** d


def test_link_examples():
    S = simplex_boundary(2)
    L = link(S, (0,))
    assert f_vector(L).counts == (3, 3) and euler_classical(L) == 0
    L = link(S, (0, 1))
    assert f_vector(L).counts == (2,) and euler_classical(L) == 2
    L = link(simplex(2), (0, 1, 2))
    assert L.is_empty() and euler_classical(L) == 0


def test_link_rejects_non_face():
    with pytest.raises(ValueError):
        link(simplex_boundary(2), (0, 1, 2, 3))
    with pytest.raises(ValueError):
        link(simplex(1), (5,))


def test_link_two_ways_on_corpus():
    for C in corpus():
        for face in C.faces():
            a, b = link(C, face), link_by_definition(C, face)
            assert a == b
            assert set(a.faces()) == link_faces_brute(C.facets, face)


def test_link_euler_characteristics_match_links():
    for C in corpus(3):
        chis = link_euler_characteristics(C)
        assert list(chis) == list(C.faces())
        for face, chi in chis.items():
            assert chi == euler_classical(link(C, face))


@pytest.mark.parametrize(
    "C,want",
    [
        (simplex(2), (3, 3)),
        (simplex_boundary(2), ()),
        (cone(simplex_boundary(1)), (3, 3)),
    ],
)
def test_boundary_examples(C, want):
    assert f_vector(boundary(C)).counts == want


def test_boundary_rejects_impure():
    with pytest.raises(ValueError):
        boundary(from_facets([[0, 1, 2], [3, 4]]))


def test_double_examples():
    D = double(cone(simplex_boundary(1)))
    assert f_vector(D).counts == (5, 9, 6)
    assert euler_classical(D) == 2
    assert euler_classical(double(cone(simplex_boundary(3)))) == 2
    with pytest.raises(ValueError, match="[Ss]ubdivide"):
        double(simplex(2))
    with pytest.raises(ValueError, match="closed"):
        double(simplex_boundary(2))


def test_double_rejects_interior_chord():
    # disk on the square 0-1-2-3 with interior vertices 4, 5; the chord (0, 2)
    # has both ends on the boundary although every triangle has an interior vertex
    M = from_facets([[0, 1, 4], [1, 2, 4], [0, 2, 4], [0, 2, 5], [2, 3, 5], [0, 3, 5]])
    assert f_vector(boundary(M)).counts == (4, 4)
    with pytest.raises(ValueError, match=r"\[0, 2\]"):
        double(M)


@pytest.mark.parametrize("d", range(1, 6))
def test_double_face_count_identity(d):
    for M in (cone(simplex_boundary(d - 1)), cone(cross_polytope_boundary(d - 1))):
        fm, fb, fd = f_vector(M), f_vector(boundary(M)), f_vector(double(M))
        assert fd.counts == tuple(2 * fm[n] - fb[n] for n in range(d + 1))
        assert boundary(double(M)).is_empty()


def test_is_pure():
    assert is_pure(simplex_boundary(2))
    assert not is_pure(from_facets([[0, 1, 2], [3, 4]]))
    assert is_pure(from_facets([[0, 1], [1, 2], [2, 0]]))


def test_parse_facets():
    text = "# header\n0 1 2\n\n 2 3 4  # trailing\n"
    assert parse_facets(text) == [[0, 1, 2], [2, 3, 4]]
    with pytest.raises(FacetFormatError) as exc:
        parse_facets("0 1\n1 x\n")
    assert exc.value.line_no == 2
    with pytest.raises(FacetFormatError, match="line 1"):
        parse_facets("0 0 1\n")
    with pytest.raises(FacetFormatError):
        parse_facets("-3 1\n")


def test_facet_file_roundtrip(tmp_path):
    T = torus_7()
    path = tmp_path / "torus.txt"
    path.write_text(format_facets(T, "seven vertex torus"), encoding="utf-8")
    assert read_facet_file(path) == T
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n")
    with pytest.raises(FacetFormatError):
        read_facet_file(empty)


def test_suspension_is_double_of_cone():
    for C in (simplex_boundary(1), simplex_boundary(2), simplex_boundary(3)):
        assert suspension(C) == double(cone(C))
