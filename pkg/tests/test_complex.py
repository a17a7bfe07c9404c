import pytest
from hypothesis import assume, given, settings, strategies as st

from simagg.complex import (
    ComplexLimitError,
    SimplexError,
    SimplicialComplex,
    as_simplex,
    candidate_simplexes,
    euler_characteristic,
    f_vector,
    faces,
    insert_with_closure,
    k_skeleton,
    maximal_simplexes,
    remove_with_cofaces,
)
from strategies import complexes, simplexes

A, B, C, D = 0, 1, 2, 3


def test_insert_triangle_gives_full_face_lattice():
    c = insert_with_closure(SimplicialComplex(), (A, B, C))
    assert set(c) == {(A,), (B,), (C,), (A, B), (A, C), (B, C), (A, B, C)}


def test_insert_single_vertex():
    c = insert_with_closure(SimplicialComplex(), (A,))
    assert list(c) == [(A,)]


def test_insert_is_idempotent():
    c = SimplicialComplex([(A,), (B,), (A, B)])
    assert insert_with_closure(c, (A, B)) == c
    assert len(insert_with_closure(c, (A, B))) == 3


@pytest.mark.parametrize("bad", [(1, 0), (0, 0), (), (-1, 2), (0.5,), (True,)])
def test_malformed_simplex_rejected(bad):
    with pytest.raises(SimplexError):
        insert_with_closure(SimplicialComplex(), bad)
    with pytest.raises(SimplexError):
        remove_with_cofaces(SimplicialComplex(), bad)


def test_faces_omit_each_vertex_in_turn():
    assert faces((4, 7, 9)) == [(7, 9), (4, 9), (4, 7)]
    assert faces((3,)) == []


def test_remove_edge_loses_triangle(triangle):
    c = remove_with_cofaces(triangle, (A, B))
    assert set(c) == {(A,), (B,), (C,), (A, C), (B, C)}


def test_remove_vertex_removes_star(triangle):
    c = remove_with_cofaces(triangle, (A,))
    assert set(c) == {(B,), (C,), (B, C)}


def test_remove_absent_is_noop():
    c = SimplicialComplex([(A, C), (B,)])
    assert remove_with_cofaces(c, (A, B)) == c


def test_remove_does_not_touch_input(triangle):
    remove_with_cofaces(triangle, (A,))
    assert len(triangle) == 7


@pytest.mark.parametrize(
    "k, expected",
    [
        (0, {(A,), (B,), (C,)}),
        (1, {(A,), (B,), (C,), (A, B), (A, C), (B, C)}),
        (5, {(A,), (B,), (C,), (A, B), (A, C), (B, C), (A, B, C)}),
    ],
)
def test_skeletons(triangle, k, expected):
    assert set(k_skeleton(triangle, k)) == expected


def test_candidates_hollow_triangle(hollow_triangle):
    assert candidate_simplexes(hollow_triangle, 2) == {(A, B, C)}


def test_candidates_path_has_no_triangle():
    path = SimplicialComplex([(A, B), (B, C)])
    assert candidate_simplexes(path, 2) == set()


def test_candidates_isolated_vertices_are_all_pairs():
    c = SimplicialComplex.from_vertices([A, B, C])
    assert candidate_simplexes(c, 1) == {(A, B), (A, C), (B, C)}


def test_candidates_require_positive_dimension():
    with pytest.raises(ValueError):
        candidate_simplexes(SimplicialComplex(), 0)


def test_counts_full_triangle(triangle):
    assert f_vector(triangle) == (3, 3, 1)
    assert euler_characteristic(triangle) == 1
    assert maximal_simplexes(triangle) == {(A, B, C)}


def test_counts_hollow_triangle(hollow_triangle):
    assert f_vector(hollow_triangle) == (3, 3)
    assert euler_characteristic(hollow_triangle) == 0


def test_counts_stepfamily():
    # D=0, M=1, C=2, S=3: strong family [M,C,S] plus the old ties [M,D], [C,D]
    c = SimplicialComplex([(1, 2, 3), (0, 1), (0, 2)])
    assert f_vector(c) == (4, 5, 1)
    assert euler_characteristic(c) == 0
    assert maximal_simplexes(c) == {(0, 1), (0, 2), (1, 2, 3)}


def test_empty_complex_dimension():
    assert SimplicialComplex().dimension() == -1
    assert f_vector(SimplicialComplex()) == ()


def test_dimension_cap():
    c = SimplicialComplex(max_dim=2)
    c.add((0, 1, 2))
    with pytest.raises(ComplexLimitError):
        c.add((0, 1, 2, 3))


def test_vertex_cap():
    c = SimplicialComplex(max_vertices=3)
    c.add((0, 1, 2))
    with pytest.raises(ComplexLimitError):
        c.add((3,))
    with pytest.raises(ComplexLimitError):
        SimplicialComplex.from_vertices(range(4), max_vertices=3)


def test_cofaces_and_face_set(triangle):
    assert triangle.cofaces((A,)) == [(A,), (A, B), (A, C), (A, B, C)]
    assert triangle.face_set((A, B)) == [(A,), (B,), (A, B)]


def test_as_simplex_returns_tuple():
    assert as_simplex([2, 5]) == (2, 5)


@given(st.lists(st.tuples(st.booleans(), simplexes()), max_size=15))
def test_closure_after_random_mutations(ops):
    c = SimplicialComplex()
    for insert, s in ops:
        if insert:
            c.add(s)
        else:
            c.discard(s)
        assert c.is_closed()
        for t in c:
            assert all(f in c for f in faces(t))


@given(complexes(), simplexes())
def test_insert_then_remove_fresh_maximal_restores(c, s):
    # only s itself may be new, otherwise its fresh faces would survive removal
    assume(s not in c and all(f in c for f in faces(s)))
    assert remove_with_cofaces(insert_with_closure(c, s), s) == c


@given(complexes(), st.integers(1, 3))
def test_candidates_are_absent_and_boundary_complete(c, k):
    for s in candidate_simplexes(c, k):
        assert s not in c
        grown = insert_with_closure(c, s)
        assert len(grown) == len(c) + 1
        assert grown.is_closed()


@given(complexes())
def test_candidates_match_brute_force(c):
    from itertools import combinations

    for k in (1, 2, 3):
        brute = {
            s for s in combinations(c.vertices, k + 1)
            if s not in c and all(f in c for f in faces(s))
        }
        assert candidate_simplexes(c, k) == brute


@settings(max_examples=50)
@given(complexes())
def test_maximal_simplexes_regenerate_complex(c):
    assert SimplicialComplex(c.maximal_simplexes()) == c
