"""Command line front end.

Exit codes: 0 when every verdict matches what the command expects, 1 on an
unexpected verdict, 2 on usage errors, 3 when a budget runs out or an
instance errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath
from typing import Optional

from . import families
from .analysis import enumerate_cuts, find_claw, vertex_connectivity
from .cycles import (
    BudgetExceededError,
    InsufficientDegreeError,
    find_cycle,
    find_wheel_subdivision,
    has_property_cmn,
)
from .graph import Graph, GraphError
from .harness import run_suite, suite_names
from .io import GraphFormatError, parse_graph, write_graph
from .links import disjoint_paths, extend_fan, extend_link, find_fan

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        p = FsPath(path)
        if not p.exists():
            raise UsageError(f"input file {path!r} does not exist")
        text = p.read_text()
    return parse_graph(text)


def _parse_vertices(g: Graph, spec: Optional[str], name: str) -> tuple[int, ...]:
    if not spec:
        return ()
    out = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            out.append(int(token))
        except ValueError:
            try:
                out.append(g.vertex_by_label(token))
            except KeyError:
                raise UsageError(f"{name}: {token!r} is neither a vertex id nor a label") from None
    return tuple(out)


def _parse_vertex(g: Graph, token: str, name: str) -> int:
    vs = _parse_vertices(g, token, name)
    if len(vs) != 1:
        raise UsageError(f"{name}: expected exactly one vertex, got {token!r}")
    return vs[0]


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        for key, value in obj.items():
            print(f"{key}: {value}")


def _gen_graph(args) -> Graph:
    fam = args.family
    if fam == "petersen":
        return families.petersen()
    if fam == "petersen-inflated":
        return families.petersen_inflated(args.clique)
    if fam == "fig1":
        return families.fig1_graph()
    if fam == "fig3":
        return families.fig3_stacked(args.stack) if args.stack else families.fig3_triangulation()
    if fam == "random":
        if args.seed is None:
            raise UsageError("gen random needs --seed")
        return families.random_claw_free(args.seed, args.cls)
    if fam == "complete":
        return families.complete(_require(args.n, "--n"))
    if fam == "k-bipartite":
        return families.k_bipartite(_require(args.k, "--k"))
    if fam == "q3":
        return families.q3()
    if fam == "wheel":
        return families.wheel(_require(args.k, "--k"))
    if fam == "prism":
        return families.prism(_require(args.n, "--n"))
    raise UsageError(f"unknown family {fam!r}")


def _require(value, flag: str) -> int:
    if value is None:
        raise UsageError(f"this family needs {flag}")
    return value


def _cmd_gen(args) -> int:
    g = _gen_graph(args)
    text = write_graph(g, args.format if args.format in ("edgelist", "json") else "edgelist")
    if args.output:
        FsPath(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _read_graph(args.input)
    fmt = args.format
    if args.what == "claw-free":
        witness = find_claw(g)
        obj = {
            "check": "claw-free",
            "claw_free": witness is None,
            "witness": None if witness is None else {"center": witness.center, "leaves": list(witness.leaves)},
        }
        _emit(obj, fmt)
        return EXIT_OK
    if args.what == "connectivity":
        kappa = vertex_connectivity(g)
        _emit({"check": "connectivity", "vertex_connectivity": kappa}, fmt)
        return EXIT_OK
    if args.what == "cuts":
        cuts = enumerate_cuts(g, args.size, allow_large=args.allow_large)
        obj = {
            "check": "cuts",
            "size": args.size,
            "count": len(cuts),
            "cuts": [
                {"vertices": list(c.vertices), "components": [list(q) for q in c.components]}
                for c in cuts
            ],
        }
        _emit(obj, fmt)
        return EXIT_OK
    raise UsageError(f"unknown check {args.what!r}")


def _cmd_cycle(args) -> int:
    g = _read_graph(args.input)
    include = _parse_vertices(g, args.include, "--include")
    avoid = _parse_vertices(g, args.avoid, "--avoid")
    cyc = find_cycle(g, include, avoid)
    obj = {
        "query": "cycle-find",
        "include": list(include),
        "avoid": list(avoid),
        "found": cyc is not None,
        "cycle": None if cyc is None else list(cyc.vertices),
    }
    _emit(obj, args.format)
    return EXIT_OK


def _cmd_property(args) -> int:
    g = _read_graph(args.input)
    mode = args.mode
    kwargs = {}
    if mode.startswith("sample:"):
        try:
            _, seed_s, trials_s = mode.split(":")
            kwargs = {"seed": int(seed_s), "trials": int(trials_s)}
        except ValueError:
            raise UsageError("sample mode must look like sample:SEED:TRIALS") from None
        mode = "sample"
    elif mode != "exhaustive":
        raise UsageError(f"unknown mode {args.mode!r}")
    report = has_property_cmn(g, args.m, args.n, mode=mode, budget=args.budget, **kwargs)
    obj = {
        "property": f"C({args.m},{args.n})",
        "mode": report.mode,
        "holds": report.passed,
        "queries": report.queries,
        "witness_include": None if report.witness_include is None else list(report.witness_include),
        "witness_avoid": None if report.witness_avoid is None else list(report.witness_avoid),
    }
    _emit(obj, args.format)
    return EXIT_OK


def _cmd_link(args) -> int:
    if args.op == "verify-fig1":
        report = run_suite("fig1", seed=args.seed)
        if args.format == "json":
            sys.stdout.write(report.to_json())
        else:
            sys.stdout.write(report.to_text())
        return EXIT_OK if report.ok else EXIT_UNEXPECTED
    g = _read_graph(args.input)
    if args.op == "fan":
        x = _parse_vertex(g, _need(args.x, "--x"), "--x")
        s = _parse_vertices(g, _need(args.s, "--s"), "--s")
        fan = find_fan(g, x, s, args.k)
        obj = {
            "op": "fan",
            "found": fan is not None,
            "paths": None if fan is None else [list(p.vertices) for p in fan.paths],
        }
        _emit(obj, args.format)
        return EXIT_OK
    if args.op == "disjoint-paths":
        a = _parse_vertices(g, _need(args.a, "--a"), "--a")
        b = _parse_vertices(g, _need(args.b, "--b"), "--b")
        forbidden = _parse_vertices(g, args.forbidden, "--forbidden")
        link = disjoint_paths(g, a, b, args.k, forbidden)
        obj = {
            "op": "disjoint-paths",
            "found": link is not None,
            "paths": None if link is None else [list(p.vertices) for p in link.paths],
        }
        _emit(obj, args.format)
        return EXIT_OK
    if args.op == "extend-fan":
        x = _parse_vertex(g, _need(args.x, "--x"), "--x")
        s = _parse_vertices(g, _need(args.s, "--s"), "--s")
        t = _parse_vertices(g, _need(args.t, "--t"), "--t")
        s_new, fan = extend_fan(g, x, s, t, args.k)
        obj = {
            "op": "extend-fan",
            "s_new": s_new,
            "endpoints": list(fan.endpoints),
            "paths": [list(p.vertices) for p in fan.paths],
        }
        _emit(obj, args.format)
        return EXIT_OK
    if args.op == "extend-link":
        s1 = _parse_vertices(g, _need(args.s1, "--s1"), "--s1")
        s2 = _parse_vertices(g, _need(args.s2, "--s2"), "--s2")
        t1 = _parse_vertices(g, _need(args.t1, "--t1"), "--t1")
        t2 = _parse_vertices(g, _need(args.t2, "--t2"), "--t2")
        a1, a2, link = extend_link(g, s1, s2, t1, t2, args.k)
        obj = {
            "op": "extend-link",
            "s_new": [a1, a2],
            "endpoints_a": list(link.endpoints_a),
            "endpoints_b": list(link.endpoints_b),
            "paths": [list(p.vertices) for p in link.paths],
        }
        _emit(obj, args.format)
        return EXIT_OK
    raise UsageError(f"unknown link operation {args.op!r}")


def _need(value: Optional[str], flag: str) -> str:
    if value is None:
        raise UsageError(f"missing required {flag}")
    return value


def _cmd_wheel(args) -> int:
    g = _read_graph(args.input)
    z = _parse_vertex(g, args.hub, "--hub")
    try:
        w = find_wheel_subdivision(g, z, args.k)
    except InsufficientDegreeError as e:
        _emit({"op": "wheel", "found": False, "reason": str(e)}, args.format)
        return EXIT_OK
    obj = {
        "op": "wheel",
        "found": w is not None,
        "hub": z,
        "rim": None if w is None else list(w.rim.vertices),
        "spokes": None if w is None else [list(p.vertices) for p in w.spokes],
    }
    _emit(obj, args.format)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite == "all":
        names = suite_names()
    else:
        if args.suite not in suite_names():
            raise UsageError(f"unknown suite {args.suite!r}; available: {', '.join(suite_names())} or 'all'")
        names = (args.suite,)
    worst = EXIT_OK
    for name in names:
        report = run_suite(name, seed=args.seed, trials=args.trials, budget=args.budget)
        if args.format == "json":
            sys.stdout.write(report.to_json())
        else:
            sys.stdout.write(report.to_text())
        if report.has_errors:
            worst = max(worst, EXIT_BUDGET)
        elif not report.ok:
            worst = max(worst, EXIT_UNEXPECTED)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclink",
        description="Cycle-through/avoid oracle, link extension and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="graph file (edge list or JSON), '-' for stdin")
    common.add_argument("--format", default="text", choices=("text", "json"), help="verdict format")

    p_gen = sub.add_parser("gen", help="emit a named graph")
    p_gen.add_argument("family", choices=(
        "petersen", "petersen-inflated", "fig1", "fig3", "random",
        "complete", "k-bipartite", "q3", "wheel", "prism",
    ))
    p_gen.add_argument("--clique", type=int, default=3)
    p_gen.add_argument("--stack", type=int, default=0)
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--class", dest="cls", default="line-cubic-16")
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--format", default="edgelist", choices=("edgelist", "json"))
    p_gen.add_argument("--output")
    p_gen.set_defaults(fn=_cmd_gen)

    p_check = sub.add_parser("check", parents=[common], help="structural checks")
    p_check.add_argument("what", choices=("claw-free", "connectivity", "cuts"))
    p_check.add_argument("--size", type=int, default=3)
    p_check.add_argument("--allow-large", action="store_true")
    p_check.set_defaults(fn=_cmd_check)

    p_cycle = sub.add_parser("cycle", parents=[common], help="cycle queries")
    p_cycle.add_argument("op", choices=("find",))
    p_cycle.add_argument("--include", default="")
    p_cycle.add_argument("--avoid", default="")
    p_cycle.set_defaults(fn=_cmd_cycle)

    p_prop = sub.add_parser("property", parents=[common], help="C(m,n) sweeps")
    p_prop.add_argument("--m", type=int, required=True)
    p_prop.add_argument("--n", type=int, required=True)
    p_prop.add_argument("--mode", default="exhaustive", help="exhaustive or sample:SEED:TRIALS")
    p_prop.add_argument("--budget", type=int, default=5_000_000)
    p_prop.set_defaults(fn=_cmd_property)

    p_link = sub.add_parser("link", parents=[common], help="disjoint path operations")
    p_link.add_argument("op", choices=("fan", "disjoint-paths", "extend-fan", "extend-link", "verify-fig1"))
    p_link.add_argument("--x")
    p_link.add_argument("--s")
    p_link.add_argument("--t")
    p_link.add_argument("--a")
    p_link.add_argument("--b")
    p_link.add_argument("--s1")
    p_link.add_argument("--s2")
    p_link.add_argument("--t1")
    p_link.add_argument("--t2")
    p_link.add_argument("--forbidden", default="")
    p_link.add_argument("--k", type=int, default=3)
    p_link.add_argument("--seed", type=int, default=42)
    p_link.set_defaults(fn=_cmd_link)

    p_wheel = sub.add_parser("wheel", parents=[common], help="wheel subdivision search")
    p_wheel.add_argument("--hub", required=True)
    p_wheel.add_argument("--k", type=int, required=True)
    p_wheel.set_defaults(fn=_cmd_wheel)

    p_verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p_verify.add_argument("suite", help=f"one of: {', '.join(suite_names())}, or 'all'")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int)
    p_verify.add_argument("--budget", type=int)
    p_verify.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
