"""Generators: construction gates, determinism, labels."""

import random

import pytest

from cyclink.analysis import is_claw_free, vertex_connectivity
from cyclink.cycles import find_cycle
from cyclink.families import (
    FIG1_SETS,
    FIG2_WITNESS,
    FIG3_C6_WITNESS,
    FIG3_EXTERIOR,
    FIG3_GRAYS,
    SIZE_CLASSES,
    antiprism,
    bipartition_classes,
    bipyramid,
    complete,
    fig1_graph,
    fig2_failing_configuration,
    fig3_stacked,
    fig3_triangulation,
    glued_cycles,
    inflate,
    k_bipartite,
    petersen,
    petersen_inflated,
    prism,
    q3,
    random_claw_free,
    stack_apex,
    wheel,
    _random_cubic,
)
from cyclink.graph import GraphError


def test_petersen_shape():
    g = petersen()
    assert g.n == 10 and g.m == 15
    assert g.is_regular(3)


def test_inflated_petersen_gates():
    g = petersen_inflated(3)
    assert g.n == 30 and g.m == 45
    assert g.is_regular(3)
    assert is_claw_free(g)
    assert vertex_connectivity(g) == 3


def test_larger_clique_inflation_keeps_gates():
    g = petersen_inflated(4)
    assert g.n == 40
    assert is_claw_free(g)
    assert vertex_connectivity(g) == 3


def test_inflate_k4():
    g = inflate(complete(4), 3)
    assert g.n == 12
    assert is_claw_free(g)
    assert vertex_connectivity(g) == 3


def test_inflate_requires_cubic():
    with pytest.raises(GraphError, match="cubic"):
        inflate(complete(5), 3)


def test_inflate_preserves_claw_freeness_on_random_cubes():
    rng = random.Random(808)
    for _ in range(8):
        base = _random_cubic(rng, 8)
        assert is_claw_free(inflate(base, 3))
        assert is_claw_free(inflate(base, 4))


def test_k_bipartite_and_q3_shapes():
    g = k_bipartite(3)
    assert g.n == 6 and vertex_connectivity(g) == 3
    assert g.label_of(0) == "A0" and g.label_of(3) == "B0"
    h = q3()
    assert h.n == 8 and h.m == 12
    even, odd = bipartition_classes(h)
    assert len(even) == 4 and len(odd) == 4


def test_wheel_and_prism_shapes():
    g = wheel(5)
    assert g.n == 6 and g.degree(5) == 5
    p = prism(4)
    assert p.n == 8 and p.m == 12 and vertex_connectivity(p) == 3
    a = antiprism(4)
    assert a.n == 8 and a.is_regular(4) and vertex_connectivity(a) >= 3
    b = bipyramid(4)
    assert b.n == 6 and vertex_connectivity(b) >= 3


def test_glued_cycles_have_a_two_cut():
    g = glued_cycles(4, 5)
    assert g.n == 7
    assert vertex_connectivity(g) == 2


def test_fig1_gates_run_at_construction():
    g = fig1_graph()
    assert g.n == 11 and g.m == 19
    assert g.label_of(0) == "x1" and g.label_of(10) == "x2"
    assert set(FIG1_SETS["T1"]) < set(FIG1_SETS["S1"])


def test_fig2_witness_matches_fresh_search():
    assert fig2_failing_configuration() == FIG2_WITNESS


def test_fig3_gates():
    g = fig3_triangulation()
    assert g.n == 11 and g.m == 27
    assert vertex_connectivity(g) == 3
    assert find_cycle(g, (1, 2, 3, 4), (5,)) is None
    assert find_cycle(g, FIG3_C6_WITNESS) is None
    assert set(FIG3_GRAYS) < set(FIG3_C6_WITNESS)
    # every degree-3 vertex of the witness really has degree 3
    assert all(g.degree(v) == 3 for v in FIG3_C6_WITNESS)


def test_fig3_five_subsets_of_witness_have_cycles():
    g = fig3_triangulation()
    for skip in FIG3_C6_WITNESS:
        five = tuple(v for v in FIG3_C6_WITNESS if v != skip)
        assert find_cycle(g, five) is not None


def test_stack_apex_preserves_gates():
    g = fig3_triangulation()
    for t in range(1, 6):
        stacked, ext = stack_apex(g, t, FIG3_EXTERIOR)
        assert stacked.n == 11 + t
        assert vertex_connectivity(stacked) == 3
        assert find_cycle(stacked, (1, 2, 3, 4), (5,)) is None
        a, b, c = ext
        assert stacked.has_edge(a, b) and stacked.has_edge(a, c) and stacked.has_edge(b, c)


def test_fig3_stacked_helper():
    assert fig3_stacked(2).n == 13
    assert fig3_stacked(0) == fig3_triangulation()


def test_stack_apex_validates_exterior():
    with pytest.raises(GraphError, match="triangle"):
        stack_apex(fig3_triangulation(), 1, (0, 1, 2))


def test_random_claw_free_gates_and_determinism():
    for cls in SIZE_CLASSES[:3]:
        g1 = random_claw_free(7, cls)
        g2 = random_claw_free(7, cls)
        assert g1 == g2
        assert is_claw_free(g1)
        assert vertex_connectivity(g1) >= 3


def test_random_claw_free_sizes():
    assert random_claw_free(1, "line-cubic-10").n == 15
    assert random_claw_free(1, "inflate-cubic-6").n == 18


def test_random_claw_free_rejects_bad_class():
    with pytest.raises(GraphError, match="size class"):
        random_claw_free(1, "mystery-12")
