"""Claw detection, connectivity, cut enumeration, blocks."""

import random

import pytest

from cyclink.analysis import (
    articulation_points,
    biconnected_components,
    check_three_cut_structure,
    enumerate_cuts,
    find_claw,
    is_claw_free,
    vertex_connectivity,
)
from cyclink.families import (
    complete,
    cycle_graph,
    fig3_triangulation,
    inflate,
    k_bipartite,
    path_graph,
    petersen,
    petersen_inflated,
)
from cyclink.graph import Graph, GraphError, delete_vertices

from oracles import vertex_connectivity_brute


def test_claw_in_star():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    w = find_claw(g)
    assert w is not None
    assert w.center == 0
    assert w.leaves == (1, 2, 3)


def test_claw_witness_is_lexicographically_first():
    # two claws at center 0; leaves (1,2,3) beats (1,2,4)
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    w = find_claw(g)
    assert (w.center, w.leaves) == (0, (1, 2, 3))


def test_inflated_petersen_is_claw_free():
    assert find_claw(petersen_inflated(3)) is None


def test_k33_has_claw():
    w = find_claw(k_bipartite(3))
    assert w is not None
    g = k_bipartite(3)
    assert all(g.has_edge(w.center, leaf) for leaf in w.leaves)
    a, b, c = w.leaves
    assert not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c))


def test_deletion_preserves_claw_freeness():
    g = petersen_inflated(3)
    for v in (0, 7, 29):
        h, _ = delete_vertices(g, (v,))
        assert is_claw_free(h)


def test_connectivity_named_values():
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(k_bipartite(3)) == 3
    assert vertex_connectivity(path_graph(3)) == 1
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(complete(2)) == 1


def test_connectivity_disconnected_is_zero():
    g = Graph(4, [(0, 1), (2, 3)])
    assert vertex_connectivity(g) == 0


def test_connectivity_matches_brute_force():
    rng = random.Random(99)
    graphs = [petersen(), k_bipartite(2), cycle_graph(6), complete(4)]
    for _ in range(40):
        n = rng.randrange(2, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        graphs.append(Graph(n, edges))
    for g in graphs:
        assert vertex_connectivity(g) == vertex_connectivity_brute(g), f"mismatch on {g}"


def test_enumerate_cuts_on_c5():
    cuts = enumerate_cuts(cycle_graph(5), 2)
    assert len(cuts) == 5
    g = cycle_graph(5)
    for cut in cuts:
        u, v = cut.vertices
        assert not g.has_edge(u, v)
        assert len(cut.components) == 2


def test_enumerate_cuts_complete_graph_empty():
    assert enumerate_cuts(complete(5), 3) == []


def test_enumerate_cuts_size_guard():
    with pytest.raises(GraphError, match="guard"):
        enumerate_cuts(complete(6), 5)
    assert enumerate_cuts(complete(6), 5, allow_large=True) == []


def test_inflated_petersen_attachment_cuts():
    g = petersen_inflated(3)
    cuts = {c.vertices for c in enumerate_cuts(g, 3)}
    # the three outside attachment vertices of each triangle isolate it
    for tri in range(10):
        corners = [3 * tri, 3 * tri + 1, 3 * tri + 2]
        attachment = tuple(sorted(
            next(w for w in g.neighbors(c) if w // 3 != tri) for c in corners
        ))
        assert attachment in cuts


def test_three_cut_structure_on_inflated_petersen():
    g = petersen_inflated(3)
    for cut in enumerate_cuts(g, 3):
        verdict = check_three_cut_structure(g, cut.vertices)
        assert verdict.passed, f"cut {cut.vertices}: {verdict}"


def test_three_cut_structure_on_inflated_k4():
    g = inflate(complete(4), 3)
    for cut in enumerate_cuts(g, 3):
        assert check_three_cut_structure(g, cut.vertices).passed


def test_three_cut_structure_rejects_clawed_input():
    g = k_bipartite(3)
    cut = enumerate_cuts(g, 3)[0]
    with pytest.raises(GraphError, match="claw"):
        check_three_cut_structure(g, cut.vertices)


def test_three_cut_structure_rejects_non_cut():
    g = petersen_inflated(3)
    with pytest.raises(GraphError, match="not a cut"):
        check_three_cut_structure(g, (0, 1, 2))


def test_blocks_two_triangles_sharing_a_vertex():
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    blocks = biconnected_components(g)
    assert blocks == [(0, 1, 2), (2, 3, 4)]
    assert articulation_points(g) == (2,)


def test_blocks_of_two_connected_graph():
    assert biconnected_components(cycle_graph(7)) == [tuple(range(7))]
    assert articulation_points(cycle_graph(7)) == ()


def test_blocks_of_fig3():
    g = fig3_triangulation()
    assert biconnected_components(g) == [tuple(range(11))]


def test_blocks_cover_bridges_and_isolated_vertices():
    g = Graph(5, [(0, 1), (1, 2)])
    blocks = biconnected_components(g)
    assert (0, 1) in blocks and (1, 2) in blocks and (3,) in blocks and (4,) in blocks


def test_cut_enumeration_consistent_with_connectivity():
    rng = random.Random(123)
    for _ in range(25):
        n = rng.randrange(4, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6]
        g = Graph(n, edges)
        if g.m == n * (n - 1) // 2:
            continue
        kappa = vertex_connectivity(g)
        for size in range(0, min(4, n - 1)):
            nonempty = bool(enumerate_cuts(g, size))
            assert nonempty == (kappa <= size)
