"""Verification suites: seeded instance generation, expected-outcome
encoding, and deterministic structured reports.

Each suite knows what outcome each of its instances SHOULD have (some
suites exist to confirm a failure), so a report is green exactly when
every verdict matches its expectation; the properties themselves are
checked by the library, never by the reporting layer.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import families
from .analysis import check_three_cut_structure, enumerate_cuts
from .cycles import (
    BudgetExceededError,
    InsufficientDegreeError,
    WheelSubdivision,
    check_wheel,
    find_cycle,
    has_property_cmn,
)
from .graph import Graph
from .links import (
    extend_fan,
    extend_link,
    extend_link_by_t,
    find_fan,
    is_k_linked_sets,
    is_k_linked_vertex,
    verify_no_refining_link,
)

SCHEMA_VERSION = 1


@dataclass
class InstanceResult:
    name: str
    params: dict[str, Any]
    expected: str
    verdict: str
    witness: Optional[dict[str, Any]] = None
    detail: str = ""
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.verdict == self.expected

    def to_dict(self, include_timings: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "params": self.params,
            "expected": self.expected,
            "verdict": self.verdict,
            "witness": self.witness,
            "detail": self.detail,
        }
        if include_timings:
            out["elapsed_s"] = round(self.elapsed, 6)
        return out


@dataclass
class PropertyReport:
    suite: str
    seed: int
    schema_version: int = SCHEMA_VERSION
    instances: list[InstanceResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(inst.ok for inst in self.instances)

    @property
    def has_errors(self) -> bool:
        return any(inst.verdict == "ERROR" for inst in self.instances)

    def counts(self) -> dict[str, int]:
        out = {"PASS": 0, "FAIL": 0, "ERROR": 0}
        for inst in self.instances:
            out[inst.verdict] = out.get(inst.verdict, 0) + 1
        return out

    def to_dict(self, include_timings: bool = True) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "suite": self.suite,
            "seed": self.seed,
            "ok": self.ok,
            "counts": self.counts(),
            "instances": [i.to_dict(include_timings) for i in self.instances],
        }

    def to_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed}): {'ok' if self.ok else 'NOT OK'}"]
        for inst in self.instances:
            mark = "ok " if inst.ok else "BAD"
            extra = f"  {inst.detail}" if inst.detail else ""
            lines.append(
                f"  [{mark}] {inst.name}: verdict={inst.verdict} expected={inst.expected}{extra}"
            )
        return "\n".join(lines) + "\n"


def _run_instance(
    report: PropertyReport,
    name: str,
    params: dict[str, Any],
    expected: str,
    fn: Callable[[], tuple[str, Optional[dict[str, Any]], str]],
) -> None:
    start = time.perf_counter()
    try:
        verdict, witness, detail = fn()
    except BudgetExceededError as e:
        verdict, witness, detail = "ERROR", None, f"budget exhausted after {e.queries} queries"
    except Exception as e:  # anything unexpected surfaces, never a silent pass
        verdict, witness, detail = "ERROR", None, f"{type(e).__name__}: {e}"
    report.instances.append(
        InstanceResult(
            name=name,
            params=params,
            expected=expected,
            verdict=verdict,
            witness=witness,
            detail=detail,
            elapsed=time.perf_counter() - start,
        )
    )


def _corpus(seed: int, count: int, classes: Optional[list[str]] = None) -> list[tuple[dict[str, Any], Graph]]:
    """Deterministic rotation of seeded 3-connected claw-free graphs."""
    classes = classes or list(families.SIZE_CLASSES)
    out = []
    for i in range(count):
        cls = classes[i % len(classes)]
        g = families.random_claw_free(seed + i, cls)
        out.append(({"family": cls, "seed": seed + i}, g))
    return out


def _suite_fig1(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    g = families.fig1_graph()
    s1, s2 = families.FIG1_SETS["S1"], families.FIG1_SETS["S2"]
    t1, t2 = families.FIG1_SETS["T1"], families.FIG1_SETS["T2"]
    _run_instance(
        report, "t-sets-2-linked", {"t1": t1, "t2": t2}, "PASS",
        lambda: ("PASS" if is_k_linked_sets(g, t1, t2, 2) else "FAIL", None, ""),
    )
    _run_instance(
        report, "s-sets-3-linked", {"s1": s1, "s2": s2}, "PASS",
        lambda: ("PASS" if is_k_linked_sets(g, s1, s2, 3) else "FAIL", None, ""),
    )
    _run_instance(
        report, "no-refining-3-link", {"k": 3}, "PASS",
        lambda: ("PASS" if verify_no_refining_link(g, s1, s2, t1, t2, 3) else "FAIL", None, ""),
    )


def _sample_disjoint(rng: random.Random, n: int, sizes: list[int]) -> list[tuple[int, ...]]:
    picked = rng.sample(range(n), sum(sizes))
    out = []
    at = 0
    for s in sizes:
        out.append(tuple(sorted(picked[at : at + s])))
        at += s
    return out


def _suite_perfect(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    trials = trials or 200
    rng = random.Random(f"perfect:{seed}")
    pool = _corpus(seed, 6) + [
        ({"family": "complete", "n": 7}, families.complete(7)),
        ({"family": "wheel", "k": 6}, families.wheel(6)),
    ]
    accepted = 0
    attempts = 0
    while accepted < trials and attempts < 200 * trials:
        attempts += 1
        desc, g = pool[rng.randrange(len(pool))]
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
        accepted += 1
        params = {"graph": desc, "x": x, "s": s, "t": t, "k": k}

        def attempt(g=g, x=x, s=s, t=t, k=k):
            s_new, fan = extend_fan(g, x, s, t, k, check_hypotheses=False)
            if s_new not in set(s) - set(t):
                return "FAIL", None, f"new endpoint {s_new} lies outside s minus t"
            if set(fan.endpoints) != set(t) | {s_new}:
                return "FAIL", None, "fan endpoints differ from t plus the new vertex"
            return "PASS", {"s_new": s_new, "paths": [list(p.vertices) for p in fan.paths]}, ""

        _run_instance(report, f"extend-fan-{accepted:03d}", params, "PASS", attempt)
    if accepted < trials:
        _run_instance(
            report, "instance-sampling", {"accepted": accepted}, "PASS",
            lambda: ("ERROR", None, "could not sample enough hypothesis-satisfying instances"),
        )


def _suite_strong_perfect(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    trials = trials or 200
    rng = random.Random(f"strong-perfect:{seed}")
    pool = _corpus(seed + 1000, 6) + [
        ({"family": "complete", "n": 8}, families.complete(8)),
        ({"family": "k-bipartite", "k": 4}, families.k_bipartite(4)),
    ]
    accepted = 0
    attempts = 0
    while accepted < trials and attempts < 200 * trials:
        attempts += 1
        desc, g = pool[rng.randrange(len(pool))]
        iterated = accepted % 3 == 2  # every third instance exercises the t-step form
        k = rng.choice((3, 4)) if iterated else rng.choice((2, 3))
        t_step = 2 if iterated else 1
        base = k - t_step
        size1 = min(k + rng.randrange(2), g.n // 2)
        size2 = min(k + rng.randrange(2), g.n - size1)
        if size1 < k or size2 < k:
            continue
        s1, s2 = _sample_disjoint(rng, g.n, [size1, size2])
        if not is_k_linked_sets(g, s1, s2, k):
            continue
        ts = None
        for _ in range(6):
            t1 = tuple(sorted(rng.sample(s1, base)))
            t2 = tuple(sorted(rng.sample(s2, base)))
            if base == 0 or is_k_linked_sets(g, t1, t2, base):
                ts = (t1, t2)
                break
        if ts is None:
            continue
        t1, t2 = ts
        accepted += 1
        params = {"graph": desc, "s1": s1, "s2": s2, "t1": t1, "t2": t2, "k": k, "t": t_step}

        if t_step == 1:

            def attempt(g=g, s1=s1, s2=s2, t1=t1, t2=t2, k=k):
                a1, a2, link = extend_link(g, s1, s2, t1, t2, k, check_hypotheses=False)
                if set(link.endpoints_a) != set(t1) | {a1} or set(link.endpoints_b) != set(t2) | {a2}:
                    return "FAIL", None, "link endpoints differ from t plus the new vertices"
                return "PASS", {"s_new": [a1, a2]}, ""

        else:

            def attempt(g=g, s1=s1, s2=s2, t1=t1, t2=t2, k=k, t_step=t_step):
                add1, add2, link = extend_link_by_t(g, s1, s2, t1, t2, k, t_step, check_hypotheses=False)
                if len(add1) != t_step or len(add2) != t_step:
                    return "FAIL", None, "wrong number of added endpoints"
                if not (set(t1) <= set(link.endpoints_a) and set(t2) <= set(link.endpoints_b)):
                    return "FAIL", None, "an original endpoint was lost"
                return "PASS", {"added": [list(add1), list(add2)]}, ""

        _run_instance(report, f"extend-link-{accepted:03d}", params, "PASS", attempt)
    if accepted < trials:
        _run_instance(
            report, "instance-sampling", {"accepted": accepted}, "PASS",
            lambda: ("ERROR", None, "could not sample enough hypothesis-satisfying instances"),
        )


def _make_cmn_sample_suite(m: int):
    def suite(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
        trials = trials or 200
        rng = random.Random(f"cmn:{m}:{seed}")
        pool = _corpus(seed + 17 * m, 8) + [
            ({"family": "petersen-inflated", "clique": 3}, families.petersen_inflated(3))
        ]
        for i in range(trials):
            desc, g = pool[i % len(pool)]
            picked = rng.sample(range(g.n), m + 1)
            s = tuple(sorted(picked[:m]))
            z = picked[m]
            params = {"graph": desc, "include": s, "avoid": z}

            def attempt(g=g, s=s, z=z):
                cyc = find_cycle(g, s, (z,))
                if cyc is None:
                    return "FAIL", {"include": list(s), "avoid": [z]}, "no cycle found"
                return "PASS", {"cycle": list(cyc.vertices)}, ""

            _run_instance(report, f"c{m}1-{i:03d}", params, "PASS", attempt)

    return suite


def _suite_c61_sharp(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    frozen = families.FIG2_WITNESS
    g = families.petersen_inflated(3)

    def frozen_attempt():
        if frozen is None:
            return "ERROR", None, "no frozen witness recorded"
        inc, av = frozen
        cyc = find_cycle(g, inc, av)
        if cyc is not None:
            return "PASS", {"cycle": list(cyc.vertices)}, "frozen configuration unexpectedly has a cycle"
        return "FAIL", {"include": list(inc), "avoid": list(av)}, ""

    _run_instance(report, "frozen-witness", {"witness": frozen}, "FAIL", frozen_attempt)

    def search_attempt():
        inc, av = families.fig2_failing_configuration(budget=budget)
        if frozen is not None and (inc, av) != frozen:
            return "ERROR", None, f"search found {(inc, av)} instead of the frozen witness"
        return "FAIL", {"include": list(inc), "avoid": list(av)}, ""

    _run_instance(report, "witness-search", {}, "FAIL", search_attempt)


def _suite_planar_c31(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    positives = trials or 12
    negatives = max(2, (positives * 2) // 5)
    makers = [
        ("wheel", lambda i: families.wheel(3 + i)),
        ("prism", lambda i: families.prism(3 + (i % 5))),
        ("bipyramid", lambda i: families.bipyramid(3 + i)),
        ("antiprism", lambda i: families.antiprism(3 + (i % 5))),
        ("fig3-stacked", lambda i: families.fig3_stacked(i % 5)),
    ]
    for i in range(positives):
        name, make = makers[i % len(makers)]
        g = make(i // len(makers))
        params = {"family": name, "index": i, "n": g.n}

        def attempt(g=g):
            rep = has_property_cmn(g, 3, 1, budget=budget or 5_000_000)
            if rep.passed:
                return "PASS", None, f"{rep.queries} queries"
            return "FAIL", {"include": list(rep.witness_include), "avoid": list(rep.witness_avoid)}, ""

        _run_instance(report, f"three-connected-{i:02d}", params, "PASS", attempt)
    for i in range(negatives):
        a, b = 3 + i % 4, 3 + (i // 2) % 5
        g = families.glued_cycles(a, b)
        params = {"family": "glued-cycles", "a": a, "b": b, "n": g.n}

        def attempt(g=g):
            rep = has_property_cmn(g, 3, 1, budget=budget or 5_000_000)
            if rep.passed:
                return "PASS", None, "expected a missing cycle but all pairs passed"
            inc, av = rep.witness_include, rep.witness_avoid
            if find_cycle(g, inc, av) is not None:
                return "ERROR", None, "reported witness does not re-verify"
            return "FAIL", {"include": list(inc), "avoid": list(av)}, ""

        _run_instance(report, f"two-cut-{i:02d}", params, "FAIL", attempt)


def _suite_lemma_3cut(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    count = trials or 6
    graphs: list[tuple[dict[str, Any], Graph]] = [
        ({"family": "petersen-inflated", "clique": 3}, families.petersen_inflated(3)),
        ({"family": "inflate-k4"}, families.inflate(families.complete(4), 3)),
    ]
    graphs += _corpus(seed + 31, count, classes=["inflate-cubic-6", "line-cubic-10", "inflate-cubic-8", "line-cubic-12"])
    for idx, (desc, g) in enumerate(graphs):
        params = {"graph": desc, "n": g.n}

        def attempt(g=g):
            cuts = enumerate_cuts(g, 3)
            for cut in cuts:
                verdict = check_three_cut_structure(g, cut.vertices)
                if not verdict.passed:
                    return "FAIL", {
                        "cut": list(cut.vertices),
                        "components": verdict.component_count,
                        "cutvertices": [list(c) for c in verdict.cutvertices],
                    }, ""
            return "PASS", None, f"{len(cuts)} three-cuts checked"

        _run_instance(report, f"three-cut-shape-{idx:02d}", params, "PASS", attempt)


def _suite_wheel_minor(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    count = trials or 6
    rng = random.Random(f"wheel:{seed}")
    graphs = _corpus(seed + 71, count) + [
        ({"family": "petersen-inflated", "clique": 3}, families.petersen_inflated(3))
    ]
    from .cycles import find_wheel_subdivision

    for idx, (desc, g) in enumerate(graphs):
        zs = rng.sample(range(g.n), 3)
        for z in zs:
            k = min(g.degree(z), 5)
            params = {"graph": desc, "z": z, "k": k}

            def attempt(g=g, z=z, k=k):
                w = find_wheel_subdivision(g, z, k)
                if w is None:
                    return "FAIL", None, "no wheel subdivision found"
                return "PASS", {"rim": list(w.rim.vertices)}, ""

            _run_instance(report, f"hub-wheel-{idx:02d}-z{z}", params, "PASS", attempt)
        max_deg = max(g.degree(v) for v in range(g.n))
        if max_deg <= 4:
            z = zs[0]
            params = {"graph": desc, "z": z, "k": max_deg + 1}

            def attempt(g=g, z=z, k=max_deg + 1):
                try:
                    find_wheel_subdivision(g, z, k)
                except InsufficientDegreeError:
                    return "PASS", None, "degree requirement correctly enforced"
                return "FAIL", None, "hub degree below k was not rejected"

            _run_instance(report, f"degree-necessity-{idx:02d}", params, "PASS", attempt)
        six = rng.sample(range(g.n), 6)
        z, five = six[5], tuple(sorted(six[:5]))
        params = {"graph": desc, "five": five, "hub": z}

        def attempt(g=g, z=z, five=five):
            rim = find_cycle(g, five, (z,))
            if rim is None:
                return "FAIL", None, "no rim cycle through the five"
            fan = find_fan(g, z, rim.vertices, 3)
            if fan is None:
                return "FAIL", None, "no three spokes from the hub to the rim"
            w = WheelSubdivision(hub=z, rim=rim, spokes=fan.paths)
            check_wheel(g, w)
            return "PASS", {"rim": list(rim.vertices), "spokes": [list(p.vertices) for p in fan.paths]}, ""

        _run_instance(report, f"six-vertex-w3-{idx:02d}", params, "PASS", attempt)


def _suite_negatives(report: PropertyReport, seed: int, trials: Optional[int], budget: Optional[int]) -> None:
    for k in (3, 4):
        g = families.k_bipartite(k)
        side = tuple(range(k))
        other = k  # first vertex of the opposite class
        params = {"family": f"k{k}{k}", "include": side, "avoid": other}

        def attempt(g=g, side=side, other=other):
            if find_cycle(g, side, (other,)) is None:
                return "FAIL", {"include": list(side), "avoid": [other]}, ""
            return "PASS", None, "unexpected cycle through one side avoiding the other"

        _run_instance(report, f"k{k}{k}-side-query", params, "FAIL", attempt)
    g33 = families.k_bipartite(3)
    _run_instance(
        report, "k33-not-c31", {"m": 3, "n": 1}, "FAIL",
        lambda: _cmn_expect_fail(g33, 3, 1, budget),
    )
    gq = families.q3()
    even, odd = families.bipartition_classes(gq)
    params = {"family": "q3", "include": even, "avoid": odd[0]}

    def q3_attempt(g=gq, inc=even, z=odd[0]):
        if find_cycle(g, inc, (z,)) is None:
            return "FAIL", {"include": list(inc), "avoid": [z]}, ""
        return "PASS", None, "unexpected cycle through a bipartition class"

    _run_instance(report, "q3-class-query", params, "FAIL", q3_attempt)
    _run_instance(
        report, "q3-not-c41", {"m": 4, "n": 1}, "FAIL",
        lambda: _cmn_expect_fail(gq, 4, 1, budget),
    )
    gf = families.fig3_triangulation()
    _run_instance(
        report, "fig3-labeled-witness", {"include": (1, 2, 3, 4), "avoid": 5}, "FAIL",
        lambda: (
            ("FAIL", {"include": [1, 2, 3, 4], "avoid": [5]}, "")
            if find_cycle(gf, (1, 2, 3, 4), (5,)) is None
            else ("PASS", None, "unexpected cycle")
        ),
    )
    _run_instance(
        report, "fig3-six-degree-three", {"include": families.FIG3_C6_WITNESS}, "FAIL",
        lambda: (
            ("FAIL", {"include": list(families.FIG3_C6_WITNESS)}, "")
            if find_cycle(gf, families.FIG3_C6_WITNESS) is None
            else ("PASS", None, "unexpected cycle")
        ),
    )


def _cmn_expect_fail(g: Graph, m: int, n: int, budget: Optional[int]):
    rep = has_property_cmn(g, m, n, budget=budget or 5_000_000)
    if rep.passed:
        return "PASS", None, "property held but was expected to fail"
    inc, av = rep.witness_include, rep.witness_avoid
    if find_cycle(g, inc, av) is not None:
        return "ERROR", None, "reported witness does not re-verify"
    return "FAIL", {"include": list(inc), "avoid": list(av)}, ""


_SUITES: dict[str, Callable[[PropertyReport, int, Optional[int], Optional[int]], None]] = {
    "fig1": _suite_fig1,
    "perfect": _suite_perfect,
    "strong-perfect": _suite_strong_perfect,
    "clawfree-c31": _make_cmn_sample_suite(3),
    "clawfree-c41": _make_cmn_sample_suite(4),
    "clawfree-c51": _make_cmn_sample_suite(5),
    "c61-sharp": _suite_c61_sharp,
    "planar-c31": _suite_planar_c31,
    "lemma-3cut": _suite_lemma_3cut,
    "wheel-minor": _suite_wheel_minor,
    "negatives": _suite_negatives,
}


def suite_names() -> tuple[str, ...]:
    return tuple(_SUITES)


def run_suite(
    name: str,
    seed: int = 42,
    trials: Optional[int] = None,
    budget: Optional[int] = None,
) -> PropertyReport:
    """Run one named suite and return its report.

    ``trials`` scales the instance count where a suite is sampled;
    ``budget`` caps exhaustive sweeps (surfacing as ERROR verdicts when
    exceeded, never as a silent pass).
    """
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(_SUITES)}")
    report = PropertyReport(suite=name, seed=seed)
    _SUITES[name](report, seed, trials, budget)
    return report
