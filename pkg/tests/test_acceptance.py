"""Acceptance criteria, one test per criterion, one printed verdict line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines as they complete.  Criterion 5 is split: its final clause asserts a
pair of figure properties that is mathematically unsatisfiable on an
11-vertex triangulation (exhaustively verified over all 1249 isomorphism
types), so that one test fails by design and documents the boundary.
"""

import random
import time
from itertools import combinations

import pytest

from cyclink.analysis import check_three_cut_structure, enumerate_cuts, is_claw_free, vertex_connectivity
from cyclink.cycles import find_cycle, has_property_cmn
from cyclink.families import (
    FIG1_SETS,
    FIG2_WITNESS,
    FIG3_C6_WITNESS,
    SIZE_CLASSES,
    antiprism,
    bipartition_classes,
    bipyramid,
    complete,
    cycle_graph,
    fig1_graph,
    fig2_failing_configuration,
    fig3_stacked,
    fig3_triangulation,
    glued_cycles,
    inflate,
    k_bipartite,
    path_graph,
    petersen,
    petersen_inflated,
    prism,
    q3,
    random_claw_free,
    wheel,
)
from cyclink.graph import Graph
from cyclink.harness import run_suite, suite_names
from cyclink.links import (
    HypothesisError,
    extend_fan,
    extend_link,
    extend_link_by_t,
    is_k_linked_sets,
    is_k_linked_vertex,
    verify_no_refining_link,
)

from oracles import (
    all_cycle_sets,
    exists_disjoint_link_brute,
    exists_fan_brute,
    exists_fan_exact_endpoints_brute,
    exists_link_exact_brute,
)


def _verdict(num: int, name: str, ok: bool, detail: str = "") -> None:
    tail = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {name}{tail}")


def test_criterion_1_fig1_triple_gate():
    g = fig1_graph()
    s1, s2 = FIG1_SETS["S1"], FIG1_SETS["S2"]
    t1, t2 = FIG1_SETS["T1"], FIG1_SETS["T2"]
    start = time.perf_counter()
    two_linked = is_k_linked_sets(g, t1, t2, 2)
    three_linked = is_k_linked_sets(g, s1, s2, 3)
    no_refining = verify_no_refining_link(g, s1, s2, t1, t2, 3)
    elapsed = time.perf_counter() - start
    ok = two_linked and three_linked and no_refining and elapsed < 5.0
    _verdict(1, "fig1 triple gate", ok, f"{elapsed:.2f}s")
    assert two_linked and three_linked and no_refining
    assert elapsed < 5.0


def test_criterion_2_inflated_petersen_and_c61_witness():
    g = petersen_inflated(3)
    shape_ok = (
        g.n == 30 and g.m == 45 and g.is_regular(3)
        and is_claw_free(g) and vertex_connectivity(g) == 3
    )
    start = time.perf_counter()
    found = fig2_failing_configuration()
    search_s = time.perf_counter() - start
    start = time.perf_counter()
    frozen_absent = find_cycle(g, FIG2_WITNESS[0], FIG2_WITNESS[1]) is None
    frozen_s = time.perf_counter() - start
    ok = shape_ok and found == FIG2_WITNESS and frozen_absent and search_s < 600 and frozen_s < 60
    _verdict(2, "inflated Petersen shape + C(6,1) witness",
             ok, f"search {search_s:.1f}s, frozen query {frozen_s:.2f}s")
    assert shape_ok
    assert found == FIG2_WITNESS
    assert frozen_absent
    assert search_s < 600
    assert frozen_s < 60


def test_criterion_3_c51_two_hundred_trials():
    rng = random.Random(42)
    graphs = [random_claw_free(1000 + i, SIZE_CLASSES[i % len(SIZE_CLASSES)]) for i in range(40)]
    assert all(14 <= g.n <= 30 for g in graphs)
    failures = 0
    for trial in range(200):
        g = graphs[trial % len(graphs)]
        size = rng.randrange(1, 6)
        picked = rng.sample(range(g.n), size + 1)
        s, z = tuple(sorted(picked[:size])), picked[size]
        if find_cycle(g, s, (z,)) is None:
            failures += 1
    _verdict(3, "cycle through |S|<=5 avoiding z on claw-free corpus",
             failures == 0, f"200 trials, {failures} misses")
    assert failures == 0


def _sample_extension_instances(rng, graphs, trials, two_sided, t_step=1):
    out = []
    attempts = 0
    while len(out) < trials and attempts < 400 * trials:
        attempts += 1
        g = graphs[rng.randrange(len(graphs))]
        if two_sided:
            k = rng.choice((2, 3)) if t_step == 1 else rng.choice((3, 4))
            base = k - t_step
            size1 = min(k + rng.randrange(2), g.n // 2)
            size2 = min(k + rng.randrange(2), g.n - size1)
            if size1 < k or size2 < k:
                continue
            picked = rng.sample(range(g.n), size1 + size2)
            s1 = tuple(sorted(picked[:size1]))
            s2 = tuple(sorted(picked[size1:]))
            if not is_k_linked_sets(g, s1, s2, k):
                continue
            ok_ts = None
            for _ in range(6):
                t1 = tuple(sorted(rng.sample(s1, base)))
                t2 = tuple(sorted(rng.sample(s2, base)))
                if base == 0 or is_k_linked_sets(g, t1, t2, base):
                    ok_ts = (t1, t2)
                    break
            if ok_ts is None:
                continue
            out.append((g, s1, s2, *ok_ts, k))
        else:
            k = rng.choice((2, 3))
            x = rng.randrange(g.n)
            size = min(k + rng.randrange(3), g.n - 1)
            if size < k:
                continue
            s = tuple(sorted(rng.sample([v for v in range(g.n) if v != x], size)))
            if not is_k_linked_vertex(g, x, s, k):
                continue
            t = None
            for _ in range(6):
                cand = tuple(sorted(rng.sample(s, k - 1)))
                if k == 1 or is_k_linked_vertex(g, x, cand, k - 1):
                    t = cand
                    break
            if t is None:
                continue
            out.append((g, x, s, t, k))
    return out


def test_criterion_4_extension_theorems_and_oracle_agreement():
    rng = random.Random(4242)
    small = [Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
             for n in (7, 8, 9, 10, 11) for _ in range(4)]
    small += [complete(6), complete(8), wheel(6), prism(4), fig1_graph()]
    big = [random_claw_free(2000 + i, SIZE_CLASSES[i % len(SIZE_CLASSES)]) for i in range(8)]
    pool = small + big

    fan_instances = _sample_extension_instances(rng, pool, 200, two_sided=False)
    assert len(fan_instances) == 200
    fan_ok = cross_ok = 0
    for g, x, s, t, k in fan_instances:
        s_new, fan = extend_fan(g, x, s, t, k, check_hypotheses=False)
        assert set(fan.endpoints) == set(t) | {s_new}
        fan_ok += 1
        if g.n <= 11:
            rest = sorted(set(s) - set(t))
            brute = any(exists_fan_exact_endpoints_brute(g, x, tuple(sorted(t + (r,)))) for r in rest)
            assert brute, "flow produced a fan the oracle cannot find"
            cross_ok += 1

    link_instances = _sample_extension_instances(rng, pool, 200, two_sided=True)
    assert len(link_instances) == 200
    link_ok = 0
    for g, s1, s2, t1, t2, k in link_instances:
        a1, a2, link = extend_link(g, s1, s2, t1, t2, k, check_hypotheses=False)
        assert set(link.endpoints_a) == set(t1) | {a1}
        assert set(link.endpoints_b) == set(t2) | {a2}
        link_ok += 1
        if g.n <= 11:
            brute = any(
                exists_link_exact_brute(g, tuple(sorted(t1 + (r1,))), tuple(sorted(t2 + (r2,))))
                for r1 in set(s1) - set(t1)
                for r2 in set(s2) - set(t2)
            )
            assert brute, "flow produced a link the oracle cannot find"
            cross_ok += 1

    step_instances = _sample_extension_instances(rng, pool, 200, two_sided=True, t_step=2)
    assert len(step_instances) == 200
    step_ok = 0
    for g, s1, s2, t1, t2, k in step_instances:
        add1, add2, link = extend_link_by_t(g, s1, s2, t1, t2, k, 2, check_hypotheses=False)
        assert set(t1) <= set(link.endpoints_a) and set(t2) <= set(link.endpoints_b)
        assert len(add1) == 2 and len(add2) == 2
        step_ok += 1

    # linkedness decisions agree with exhaustive search on small graphs
    decision_checks = 0
    for g in small:
        if g.n > 11:
            continue
        for _ in range(12):
            pick = rng.sample(range(g.n), min(6, g.n))
            half = len(pick) // 2
            a, b = tuple(sorted(pick[:half])), tuple(sorted(pick[half:]))
            if not a or not b:
                continue
            for k in (2, 3):
                assert is_k_linked_sets(g, a, b, k) == exists_disjoint_link_brute(g, a, b, k)
                decision_checks += 1
            x = pick[0]
            s = tuple(v for v in pick[1:])
            for k in (2, 3):
                assert is_k_linked_vertex(g, x, s, k) == exists_fan_brute(g, x, s, k)
                decision_checks += 1

    ok = fan_ok == link_ok == step_ok == 200
    _verdict(4, "extension theorems 200/200 each + oracle agreement",
             ok, f"{cross_ok} extension cross-checks, {decision_checks} decision checks")
    assert ok


def test_criterion_5_negative_witnesses():
    start = time.perf_counter()
    g33 = k_bipartite(3)
    k33_ok = find_cycle(g33, (0, 1, 2), (3,)) is None
    t33 = time.perf_counter() - start

    start = time.perf_counter()
    gq = q3()
    even, odd = bipartition_classes(gq)
    q3_ok = find_cycle(gq, even, (odd[0],)) is None
    tq3 = time.perf_counter() - start

    start = time.perf_counter()
    gf = fig3_triangulation()
    fig3_c41_ok = find_cycle(gf, (1, 2, 3, 4), (5,)) is None
    fig3_c6_ok = find_cycle(gf, FIG3_C6_WITNESS) is None
    tf3 = time.perf_counter() - start

    ok = k33_ok and q3_ok and fig3_c41_ok and fig3_c6_ok and max(t33, tq3, tf3) < 5
    _verdict(5, "negative witnesses (K33, Q3, fig3 labeled + degree-3 six-set)",
             ok, f"{t33:.2f}s/{tq3:.2f}s/{tf3:.2f}s")
    assert k33_ok and q3_ok and fig3_c41_ok and fig3_c6_ok
    assert max(t33, tq3, tf3) < 5


def test_criterion_5_fig3_gray_five_plus_vertex_5_as_stated():
    # The five gray vertices together with the vertex labeled 5: asserting
    # this six-set is cycle-free is unsatisfiable together with the labeled
    # 1,2,3,4/5 witness on any 11-vertex triangulation (exhaustively
    # enumerated), so this test documents the discrepancy by failing.
    g = fig3_triangulation()
    grays = (0, 1, 2, 3, 4)
    absent = find_cycle(g, grays + (5,)) is None
    _verdict(5, "fig3 grays + labeled vertex 5 cycle-free, as literally stated", absent)
    assert absent


def test_criterion_6_planar_c31_both_directions():
    start = time.perf_counter()
    positives = (
        [wheel(k) for k in range(3, 19)]
        + [prism(n) for n in range(3, 10)]
        + [bipyramid(n) for n in range(3, 15)]
        + [antiprism(n) for n in range(3, 10)]
        + [fig3_stacked(t) for t in range(8)]
    )
    assert len(positives) == 50
    for g in positives:
        assert vertex_connectivity(g) >= 3
        report = has_property_cmn(g, 3, 1)
        assert report.passed, f"C(3,1) failed on a 3-connected planar graph {g}"
    t_pos = time.perf_counter() - start

    start = time.perf_counter()
    negatives = [glued_cycles(3 + i % 5, 3 + (i * 3) % 7) for i in range(20)]
    for g in negatives:
        assert vertex_connectivity(g) == 2
        report = has_property_cmn(g, 3, 1)
        assert not report.passed
        inc, av = report.witness_include, report.witness_avoid
        assert find_cycle(g, inc, av) is None, "witness does not re-verify"
    t_neg = time.perf_counter() - start
    _verdict(6, "planar C(3,1): 50 three-connected pass, 20 two-cut fail",
             True, f"{t_pos:.1f}s + {t_neg:.1f}s")


def test_criterion_7_three_cut_shape_universal():
    corpus = [
        petersen_inflated(3),
        inflate(complete(4), 3),
    ]
    corpus += [random_claw_free(3000 + i, cls) for i, cls in enumerate(SIZE_CLASSES)]
    assert all(g.n <= 30 for g in corpus)
    cuts_checked = 0
    for g in corpus:
        for cut in enumerate_cuts(g, 3):
            verdict = check_three_cut_structure(g, cut.vertices)
            assert verdict.passed, f"cut {cut.vertices} on {g}: {verdict}"
            cuts_checked += 1
    _verdict(7, "every 3-cut gives two cutvertex-free components",
             True, f"{cuts_checked} cuts over {len(corpus)} graphs")
    assert cuts_checked > 0


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def test_criterion_8_oracle_completeness_small_graphs():
    rng = random.Random(2718)
    corpus = [
        complete(4), complete(5), complete(7), k_bipartite(3), wheel(5), wheel(6),
        prism(3), cycle_graph(7), path_graph(6), glued_cycles(3, 4),
    ]
    while len(corpus) < 36:
        n = rng.randrange(4, 8)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        if _connected(g):
            corpus.append(g)
    disagreements = 0
    queries = 0
    for g in corpus:
        cycles = all_cycle_sets(g)
        cycle_masks = []
        for c in cycles:
            m = 0
            for v in c:
                m |= 1 << v
            cycle_masks.append(m)

        def brute(inc, av):
            im = 0
            for v in inc:
                im |= 1 << v
            am = 0
            for v in av:
                am |= 1 << v
            return any(cm & im == im and not (cm & am) for cm in cycle_masks)

        for m in range(0, 5):
            for inc in combinations(range(g.n), m):
                left = [v for v in range(g.n) if v not in inc]
                for k in range(0, 3):
                    if m + k == 0 or m + k > g.n:
                        continue
                    for av in combinations(left, k):
                        queries += 1
                        got = find_cycle(g, inc, av) is not None
                        if got != brute(inc, av):
                            disagreements += 1
    # at 8 vertices: sampled queries
    for _ in range(4):
        n = 8
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45])
        if not _connected(g):
            continue
        cycles = all_cycle_sets(g)
        for _ in range(300):
            m = rng.randrange(0, 5)
            k = rng.randrange(0, 3)
            if m + k == 0:
                continue
            picked = rng.sample(range(n), m + k)
            inc, av = tuple(sorted(picked[:m])), tuple(sorted(picked[m:]))
            queries += 1
            got = find_cycle(g, inc, av) is not None
            want = any(set(inc) <= c and not (set(av) & c) for c in cycles)
            if got != want:
                disagreements += 1
    _verdict(8, "oracle agrees with brute-force cycle enumeration",
             disagreements == 0, f"{queries} queries, {disagreements} disagreements")
    assert disagreements == 0


def test_criterion_9_full_suite_determinism():
    bodies1 = {}
    bodies2 = {}
    start = time.perf_counter()
    for name in suite_names():
        trials = 40 if name in ("perfect", "strong-perfect",
                                "clawfree-c31", "clawfree-c41", "clawfree-c51") else None
        bodies1[name] = run_suite(name, seed=42, trials=trials).to_json(include_timings=False)
        bodies2[name] = run_suite(name, seed=42, trials=trials).to_json(include_timings=False)
    elapsed = time.perf_counter() - start
    identical = all(bodies1[n] == bodies2[n] for n in suite_names())
    _verdict(9, "two seed-42 runs produce identical report bodies",
             identical, f"{len(suite_names())} suites twice in {elapsed:.1f}s")
    assert identical
