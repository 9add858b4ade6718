import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from simplicial_hausdorff.complex import (
    LabeledComplex,
    SimplicialComplex,
    closure,
    from_document,
    is_isomorphic,
    k_simplices,
    to_document,
)
from simplicial_hausdorff.errors import (
    AmbientDimMismatch,
    EmptyComplex,
    InvalidSimplex,
    NonInjective,
    NotDownwardClosed,
    ParseError,
    UnknownVertexInSimplex,
)

from helpers import random_complex, random_permutation_relabel

TRIANGLE = closure([(0, 1, 2)])


def test_closure_of_triangle():
    assert set(TRIANGLE.simplices()) == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)}
    assert TRIANGLE.dim == 2


def test_closure_of_vertices():
    K = closure([(0,), (1,)])
    assert set(K.simplices()) == {(0,), (1,)}
    assert K.dim == 0


def test_closure_never_adds_cofaces():
    K = closure([(0, 1), (1, 2), (0, 2)])
    assert K.f_vector() == (3, 3)


def test_closure_rejects_empty():
    with pytest.raises(EmptyComplex):
        closure([])


def test_generators_are_normalised():
    assert closure([[2, 0]]) == closure([(0, 2)])
    with pytest.raises(InvalidSimplex):
        closure([(1, 1)])
    with pytest.raises(InvalidSimplex):
        closure([()])


def test_k_simplices():
    assert k_simplices(TRIANGLE, 1) == {(0, 1), (0, 2), (1, 2)}
    assert k_simplices(TRIANGLE, 2) == {(0, 1, 2)}
    assert k_simplices(TRIANGLE, 5) == set()


def test_constructor_checks_downward_closure():
    with pytest.raises(NotDownwardClosed):
        SimplicialComplex((((0,), (1,)), ((0, 2),)))
    with pytest.raises(InvalidSimplex):
        SimplicialComplex((((1,), (0,)),))


def test_maximal_faces():
    K = closure([(0, 1, 2), (2, 3), (4,)])
    assert sorted(K.maximal_faces()) == [(0, 1, 2), (2, 3), (4,)]


simplex_lists = st.lists(
    st.lists(st.integers(0, 7), min_size=1, max_size=4, unique=True), min_size=1, max_size=8
)


@given(simplex_lists)
def test_closure_is_idempotent(gens):
    K = closure(gens)
    assert closure(K.simplices()) == K
    assert closure(K.maximal_faces()) == K


@given(simplex_lists)
def test_every_facet_of_every_face_present(gens):
    K = closure(gens)
    for k in range(1, K.dim + 1):
        for s in K.k_simplices(k):
            facets = list(itertools.combinations(s, k))
            assert len(facets) == k + 1
            assert all(f in K for f in facets)


# -- labeled complexes -------------------------------------------------------

def edge(p, q):
    return LabeledComplex.from_points([p, q], [(0, 1)])


def test_labeled_rejects_coincident_coords():
    with pytest.raises(NonInjective):
        LabeledComplex.from_points([(0, 0), (0, 0)])
    A = LabeledComplex.from_points([(0, 0), (0, 0)], allow_coincident=True)
    assert not A.is_injective


def test_labeled_rejects_wrong_dimension():
    with pytest.raises(AmbientDimMismatch):
        LabeledComplex(closure([(0,)]), {0: (1.0, 2.0)}, 3)


def test_isomorphic_under_permutation():
    A = LabeledComplex.from_points([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    B = A.relabel({0: 2, 1: 0, 2: 1})
    assert is_isomorphic(A, B)


def test_edge_not_isomorphic_to_two_vertices():
    A = edge((0, 0), (1, 0))
    B = LabeledComplex.from_points([(0, 0), (1, 0)])
    assert not is_isomorphic(A, B)


def test_translation_is_not_isomorphism():
    A = edge((0, 0), (1, 0))
    assert not is_isomorphic(A, edge((1, 0), (2, 0)))


def test_isomorphism_dimension_mismatch():
    with pytest.raises(AmbientDimMismatch):
        is_isomorphic(LabeledComplex.from_points([(0, 0)]), LabeledComplex.from_points([(0, 0, 0)]))


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1))
def test_isomorphism_is_an_equivalence(seed):
    rng = np.random.default_rng(seed)
    A = random_complex(rng, d=2)
    B = random_permutation_relabel(rng, A)
    C = random_permutation_relabel(rng, B)
    other = random_complex(rng, d=2)
    assert is_isomorphic(A, A)
    assert is_isomorphic(A, B) and is_isomorphic(B, A)
    assert is_isomorphic(B, C) and is_isomorphic(A, C)
    assert is_isomorphic(A, other) == is_isomorphic(other, A)


# -- document format ---------------------------------------------------------

def test_document_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(20):
        A = random_complex(rng)
        doc = to_document(A)
        assert from_document(doc) == A


def test_document_lists_maximal_faces_only():
    A = LabeledComplex.from_points([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    assert to_document(A)["simplices"] == [[0, 1, 2]]


def test_document_edge():
    doc = {"ambient_dim": 2, "vertices": [{"id": 0, "coords": [0, 0]}, {"id": 1, "coords": [1, 0]}],
           "simplices": [[0, 1]]}
    A = from_document(doc)
    assert A.complex.f_vector() == (2, 1)


def test_document_unknown_vertex():
    doc = {"ambient_dim": 1, "vertices": [{"id": 0, "coords": [0]}], "simplices": [[0, 7]]}
    with pytest.raises(UnknownVertexInSimplex):
        from_document(doc)


def test_document_duplicate_coordinates():
    doc = {"ambient_dim": 1, "vertices": [{"id": 0, "coords": [0]}, {"id": 1, "coords": [0]}],
           "simplices": []}
    with pytest.raises(NonInjective):
        from_document(doc)
    assert not from_document(doc, allow_coincident=True).is_injective


@pytest.mark.parametrize("doc", [
    [],
    {"vertices": []},
    {"ambient_dim": 2, "vertices": []},
    {"ambient_dim": 2, "vertices": [{"id": 0, "coords": [0]}]},
    {"ambient_dim": 1, "vertices": [{"id": 0, "coords": [0]}, {"id": 0, "coords": [1]}]},
    {"ambient_dim": 1, "vertices": [{"id": 0, "coords": ["x"]}]},
    {"ambient_dim": 1, "vertices": [{"id": 0, "coords": [0]}], "simplices": [[0, 0]]},
])
def test_document_parse_errors(doc):
    with pytest.raises(ParseError):
        from_document(doc)
