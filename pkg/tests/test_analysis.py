import pytest
from hypothesis import given, settings

from simagg.analysis import channel_graph, diffusion, probe_matrix, q_components
from simagg.complex import SimplicialComplex, boundary_complex, full_simplex
from simagg.homology import dimension_census
from oracles import q_classes_brute, shortest_paths
from strategies import complexes

A, B, C, D, E = range(5)


def classes(qc):
    return {frozenset(cls) for cls in qc.classes}


def test_triangle_is_one_0_component(triangle):
    qc = q_components(triangle, 0)
    assert len(qc) == 1
    assert set(qc.classes[0]) == set(triangle)


def test_bowtie_splits_at_q1():
    c = SimplicialComplex([(A, B, C), (C, D, E)])
    qc = q_components(c, 1)
    assert qc.class_of((A, B, C)) != qc.class_of((C, D, E))
    assert classes(qc) == q_classes_brute(set(c), 1)


def test_glued_triangles_join_at_q1():
    c = SimplicialComplex([(A, B, C), (B, C, D)])
    qc = q_components(c, 1)
    assert qc.class_of((A, B, C)) == qc.class_of((B, C, D))
    assert classes(qc) == q_classes_brute(set(c), 1)


def test_filling_merges_edge_classes(hollow_triangle, triangle):
    hollow = q_components(hollow_triangle, 1)
    assert classes(hollow) == {frozenset({e}) for e in [(A, B), (A, C), (B, C)]}
    full = q_components(triangle, 1)
    assert classes(full) == {frozenset({(A, B), (A, C), (B, C), (A, B, C)})}


def test_q_above_dimension_is_empty(triangle):
    assert len(q_components(triangle, 3)) == 0


def test_negative_q():
    with pytest.raises(ValueError):
        q_components(SimplicialComplex(), -1)


def test_path_diffusion():
    path = SimplicialComplex([(A, B), (B, C)])
    rep = diffusion(path, A, C)
    assert rep.hop_count == 2
    assert rep.rounds == (1, 1, 1)


def test_source_is_target():
    assert diffusion(SimplicialComplex([(A, B)]), A, A).hop_count == 0


def test_disconnected_target():
    c = SimplicialComplex([(A, B), (C, D)])
    rep = diffusion(c, A, D)
    assert rep.hop_count is None and not rep.reachable
    assert rep.rounds == (1, 1)


def test_absent_vertex():
    with pytest.raises(ValueError):
        diffusion(SimplicialComplex([(A, B)]), A, E)
    with pytest.raises(ValueError):
        probe_matrix(SimplicialComplex([(A, B)]), [A], [E])


def test_group_channels():
    # A-B-C triangle filled, C-D just an edge; with min_dim=2 D is cut off
    c = SimplicialComplex([(A, B, C), (C, D)])
    assert diffusion(c, A, D).hop_count == 2
    assert diffusion(c, A, D, min_dim=2).hop_count is None
    assert channel_graph(c, 2)[A] == {B, C}


def test_probe_single():
    assert probe_matrix(SimplicialComplex([(A, B)]), [A], [A]) == [[0]]


def test_probe_path():
    path = SimplicialComplex([(A, B), (B, C)])
    assert probe_matrix(path, [A, C], [A, C]) == [[0, 2], [2, 0]]


def test_probe_star():
    star = SimplicialComplex([(A, B), (A, C), (A, D)])
    m = probe_matrix(star, [A], [A, B, C, D])
    assert m == [[0, 1, 1, 1]]


@given(complexes(max_vertex=11))
def test_hops_equal_shortest_paths(c):
    vs = c.vertices
    dist = shortest_paths(vs, c.simplexes(1))
    m = probe_matrix(c, vs, vs)
    for i, a in enumerate(vs):
        for j, b in enumerate(vs):
            assert m[i][j] == dist[a, b]
            assert m[i][j] == m[j][i]


@given(complexes(max_vertex=11))
def test_rounds_consistent(c):
    if not c.vertices:
        return
    src = c.vertices[0]
    for tgt in c.vertices:
        rep = diffusion(c, src, tgt)
        assert sum(rep.rounds) <= c.num_vertices
        if rep.hop_count is not None:
            assert rep.hop_count < len(rep.rounds)


@given(complexes())
def test_q_components_match_brute_force(c):
    for q in range(c.dimension() + 1):
        assert classes(q_components(c, q)) == q_classes_brute(set(c), q)


@given(complexes())
def test_q_components_refine(c):
    for q in range(c.dimension()):
        coarse = q_components(c, q)
        for cls in q_components(c, q + 1).classes:
            assert len({coarse.class_of(s) for s in cls}) == 1


@settings(max_examples=60)
@given(complexes())
def test_zero_components_are_census_components(c):
    qc = q_components(c, 0)
    from_q = {frozenset(s[0] for s in cls if len(s) == 1) for cls in qc.classes}
    from_census = {frozenset(r.vertices) for r in dimension_census(c)}
    assert from_q == from_census
