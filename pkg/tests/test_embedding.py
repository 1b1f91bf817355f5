from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import complete, cube, cycle, path, theta
from ibondage.embedding import (
    PlanarEmbedding,
    check_planar_embedding,
    compute_embedding,
    embedding_from_rotation,
    faces_of,
    is_planar,
)
from ibondage.errors import DisconnectedError, InconsistentRotation, NonPlanarError
from ibondage.graph import build_graph
from oracles import planar_by_rotations, trace_faces


def _canon(walk):
    """Face boundary up to the choice of starting dart."""
    k = walk.index(min(walk))
    return tuple(walk[k:] + walk[:k])


def test_c5_faces():
    e = compute_embedding(cycle(5))
    assert sorted(f.length for f in e.faces) == [5, 5]


def test_cube_faces():
    e = compute_embedding(cube())
    assert [f.length for f in e.faces] == [4] * 6
    r = check_planar_embedding(e)
    assert r.ok and (r.vertices, r.edges, r.faces) == (8, 12, 6)


def test_single_edge_face():
    e = compute_embedding(path(2))
    (f,) = e.faces
    assert f.length == 2
    assert f.edge_multiset() == {(0, 1): 2}
    assert sorted(f.walk) == [0, 1]


def test_k4_triangles():
    e = compute_embedding(complete(4))
    assert [f.length for f in e.faces] == [3, 3, 3, 3]


def test_k5_nonplanar():
    with pytest.raises(NonPlanarError):
        compute_embedding(complete(5))
    assert not is_planar(complete(5))


def test_k5_any_rotation_fails_euler():
    g = complete(5)
    rng = random.Random(3)
    for _ in range(30):
        rot = tuple(tuple(rng.sample(g.adj[v], len(g.adj[v]))) for v in range(5))
        r = check_planar_embedding(PlanarEmbedding(g, rot))
        assert not r.ok and any("Euler" in msg for msg in r.failures)


def test_disconnected_rejected():
    with pytest.raises(DisconnectedError):
        compute_embedding(build_graph(4, [(0, 1), (2, 3)]))


def test_rotation_must_permute_adjacency():
    g = cycle(5)
    with pytest.raises(InconsistentRotation):
        faces_of(((1, 2), (0, 2), (1, 3), (2, 4), (3, 0)), g)


def test_nonplanar_rotation_rejected():
    g = cube()
    rot = [list(r) for r in compute_embedding(g).rotation]
    rot[0] = rot[0][::-1]  # flipping one degree-3 vertex raises the genus
    with pytest.raises(InconsistentRotation):
        embedding_from_rotation(g, rot)


def test_faces_match_independent_trace():
    for g in (cube(), theta(5, 5, 6), complete(4), path(4)):
        e = compute_embedding(g)
        ours = sorted(_canon(list(f.darts)) for f in e.faces)
        ref = sorted(_canon(w) for w in trace_faces(e.rotation))
        assert ours == ref


def test_multiplicity_on_cut_vertex():
    # two triangles sharing vertex 0: the outer face passes 0 twice
    g = build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    e = compute_embedding(g)
    assert sum(f.length for f in e.faces) == 2 * g.m
    assert max(f.walk.count(0) for f in e.faces) == 2


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    parent = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i + 1) for i, p in enumerate(parent)}
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=3 * n)))
    return build_graph(n, edges)


@settings(max_examples=150, deadline=None)
@given(connected_graphs())
def test_embedding_properties(g):
    if not is_planar(g):
        return
    e = compute_embedding(g)
    assert check_planar_embedding(e).ok
    assert sum(f.length for f in e.faces) == 2 * g.m
    darts = [d for f in e.faces for d in f.darts]
    assert len(darts) == len(set(darts)) == 2 * g.m


def test_planarity_verdict_matches_rotation_oracle():
    rng = random.Random(2024)
    compared = planar = nonplanar = 0
    while compared < 150:
        n = rng.randint(4, 9)
        p = rng.choice([0.3, 0.45, 0.6])
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        verdict = planar_by_rotations(n, edges)
        if verdict is None:
            continue
        g = build_graph(n, edges)
        assert is_planar(g) == verdict, edges
        compared += 1
        planar += verdict
        nonplanar += not verdict
    assert planar > 20 and nonplanar > 5


def test_kuratowski_graphs_match_oracle():
    k33 = [(i, j) for i in range(3) for j in range(3, 6)]
    petersen = list(nx.petersen_graph().edges())
    # K3,3 with every edge subdivided once
    sub = []
    for k, (u, v) in enumerate(k33):
        sub += [(u, 6 + k), (6 + k, v)]
    for n, edges in ((6, k33), (10, petersen), (15, sub), (5, list(complete(5).edges))):
        assert planar_by_rotations(n, edges) is False
        assert not is_planar(build_graph(n, edges))
    # removing one edge of K3,3 leaves a planar graph
    assert planar_by_rotations(6, k33[1:]) is True
    assert is_planar(build_graph(6, k33[1:]))
