"""Vertex-disjoint path machinery and link extension.

Disjoint-path questions are answered exactly with a unit-capacity flow
network: every vertex is split into an in/out pair so vertex disjointness
becomes arc capacity, and "meets the terminal set exactly once" is wired
into the network (terminal-set vertices are enterable but not leavable,
or vice versa) rather than post-filtered.

The extension operations grow a fan (vertex to set) or a link (set to set)
by one endpoint per side while keeping every previous endpoint: the target
side is shrunk to the old endpoints plus one merged stand-in vertex, an
auxiliary terminal of degree exactly k is attached, and any k internally
disjoint terminal paths are then forced to use every old endpoint.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, GraphError, Path, as_vertex_tuple, check_path


class HypothesisError(GraphError):
    """An extension was attempted whose stated hypotheses do not hold."""


@dataclass(frozen=True)
class Fan:
    """k internally disjoint paths from one apex to distinct target vertices,
    each path meeting the target set exactly once (at its end)."""

    apex: int
    target: tuple[int, ...]
    paths: tuple[Path, ...]

    @property
    def endpoints(self) -> tuple[int, ...]:
        return tuple(sorted(p.end for p in self.paths))


@dataclass(frozen=True)
class Link:
    """k fully disjoint paths between two disjoint sets, each path meeting
    either side exactly once (at its first / last vertex)."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    paths: tuple[Path, ...]

    @property
    def endpoints_a(self) -> tuple[int, ...]:
        return tuple(sorted(p.start for p in self.paths))

    @property
    def endpoints_b(self) -> tuple[int, ...]:
        return tuple(sorted(p.end for p in self.paths))


def check_fan(g: Graph, fan: Fan) -> None:
    """Validate every Fan invariant; raised violations name the failure."""
    target = set(fan.target)
    if fan.apex in target:
        raise GraphError("fan apex lies in its own target set")
    seen_interior: set[int] = set()
    seen_ends: set[int] = set()
    for p in fan.paths:
        check_path(g, p)
        if p.start != fan.apex:
            raise GraphError(f"fan path {p.vertices} does not start at the apex")
        if p.end not in target:
            raise GraphError(f"fan path {p.vertices} ends outside the target set")
        body = set(p.vertices[1:])
        if len(body & target) != 1:
            raise GraphError(f"fan path {p.vertices} meets the target set more than once")
        if body & seen_interior or p.end in seen_ends:
            raise GraphError("fan paths are not internally disjoint")
        seen_interior |= body
        seen_ends.add(p.end)


def check_link(g: Graph, link: Link, shared_a: bool = False, shared_b: bool = False) -> None:
    """Validate every Link invariant; raised violations name the failure.

    ``shared_a``/``shared_b`` relax full disjointness on a singleton side
    whose lone vertex is a common terminal of all paths.
    """
    a, b = set(link.side_a), set(link.side_b)
    if a & b:
        raise GraphError("link sides overlap")
    used: set[int] = set()
    for p in link.paths:
        check_path(g, p)
        pv = set(p.vertices)
        if shared_a:
            pv.discard(p.start)
        if shared_b:
            pv.discard(p.end)
        if pv & used:
            raise GraphError("link paths are not disjoint")
        full = set(p.vertices)
        if p.start not in a or len(full & a) != 1:
            raise GraphError(f"link path {p.vertices} must meet side_a exactly at its start")
        if p.end not in b or len(full & b) != 1:
            raise GraphError(f"link path {p.vertices} must meet side_b exactly at its end")
        used |= pv


class _FlowNet:
    """Unit-capacity max flow with BFS augmentation in fixed arc order."""

    def __init__(self, nodes: int):
        self.adj: list[list[int]] = [[] for _ in range(nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(1)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _augment(self, s: int, t: int) -> bool:
        parent_arc = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for idx in self.adj[u]:
                w = self.to[idx]
                if self.cap[idx] > 0 and w not in parent_arc:
                    parent_arc[w] = idx
                    queue.append(w)
        if t not in parent_arc:
            return False
        u = t
        while u != s:
            idx = parent_arc[u]
            self.cap[idx] -= 1
            self.cap[idx ^ 1] += 1
            u = self.to[idx ^ 1]
        return True

    def max_flow(self, s: int, t: int, limit: int) -> int:
        value = 0
        while value < limit and self._augment(s, t):
            value += 1
        return value

    def flow_paths(self, s: int, t: int) -> list[list[int]]:
        """Decompose the current flow into node paths, lowest arc first."""
        succ: list[list[int]] = [[] for _ in self.adj]
        for u, arcs in enumerate(self.adj):
            for idx in arcs:
                if idx % 2 == 0 and self.cap[idx] == 0:
                    succ[u].append(self.to[idx])
        paths = []
        while succ[s]:
            node = s
            path = [s]
            while node != t:
                node = succ[node].pop(0)
                path.append(node)
            paths.append(path)
        return paths


def _nodes_to_vertices(node_path: Sequence[int], n: int) -> list[int]:
    out: list[int] = []
    for node in node_path:
        if node >= 2 * n:
            continue
        v = node // 2
        if not out or out[-1] != v:
            out.append(v)
    return out


def _link_flow(
    g: Graph,
    a: Sequence[int],
    b: Sequence[int],
    k: int,
    forbidden: Sequence[int] = (),
) -> Optional[list[list[int]]]:
    """k fully disjoint a-to-b paths (meets-once on both sides), or None."""
    aset, bset, fset = set(a), set(b), set(forbidden)
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    net = _FlowNet(2 * n + 2)
    for v in sorted(aset):
        if v not in fset:
            net.add_arc(src, 2 * v)
    for v in range(n):
        if v not in fset:
            net.add_arc(2 * v, 2 * v + 1)
    for v in sorted(bset):
        if v not in fset:
            net.add_arc(2 * v + 1, snk)
    for u in range(n):
        if u in fset or u in bset:
            continue
        for w in g.neighbors(u):
            if w in fset or w in aset:
                continue
            net.add_arc(2 * u + 1, 2 * w)
    if net.max_flow(src, snk, k) < k:
        return None
    return [_nodes_to_vertices(p, n) for p in net.flow_paths(src, snk)]


def _fan_flow(
    g: Graph,
    x: int,
    targets: Sequence[int],
    k: int,
    forbidden: Sequence[int] = (),
) -> Optional[list[list[int]]]:
    """k internally disjoint paths from apex x into distinct target vertices
    (each path meeting the target set exactly once), or None."""
    sset, fset = set(targets), set(forbidden)
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    net = _FlowNet(2 * n + 2)
    for w in g.neighbors(x):
        if w not in fset:
            net.add_arc(src, 2 * w)
    for v in range(n):
        if v != x and v not in fset:
            net.add_arc(2 * v, 2 * v + 1)
    for s in sorted(sset):
        if s not in fset:
            net.add_arc(2 * s + 1, snk)
    for u in range(n):
        if u == x or u in fset or u in sset:
            continue
        for w in g.neighbors(u):
            if w == x or w in fset:
                continue
            net.add_arc(2 * u + 1, 2 * w)
    if net.max_flow(src, snk, k) < k:
        return None
    return [[x] + _nodes_to_vertices(p, n) for p in net.flow_paths(src, snk)]


def _terminal_flow(
    g: Graph,
    x: int,
    y: int,
    limit: int,
    forbidden: Sequence[int] = (),
) -> tuple[int, list[list[int]]]:
    """Up to ``limit`` internally disjoint x-to-y paths; returns (count, paths)."""
    fset = set(forbidden)
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    net = _FlowNet(2 * n + 2)
    if g.has_edge(x, y):
        net.add_arc(src, snk)
    for w in g.neighbors(x):
        if w != y and w not in fset:
            net.add_arc(src, 2 * w)
    for v in range(n):
        if v not in (x, y) and v not in fset:
            net.add_arc(2 * v, 2 * v + 1)
    for w in g.neighbors(y):
        if w != x and w not in fset:
            net.add_arc(2 * w + 1, snk)
    for u in range(n):
        if u in (x, y) or u in fset:
            continue
        for w in g.neighbors(u):
            if w in (x, y) or w in fset:
                continue
            net.add_arc(2 * u + 1, 2 * w)
    value = net.max_flow(src, snk, limit)
    paths = [[x] + _nodes_to_vertices(p, n) + [y] for p in net.flow_paths(src, snk)]
    return value, paths


def max_internally_disjoint(g: Graph, x: int, y: int, forbidden: Sequence[int] = ()) -> int:
    """Maximum number of internally disjoint x-to-y paths (x, y distinct)."""
    if x == y:
        raise GraphError("terminal vertices must be distinct")
    value, _ = _terminal_flow(g, x, y, limit=g.n + 1, forbidden=forbidden)
    return value


def disjoint_paths(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    k: int,
    forbidden: Iterable[int] = (),
) -> Optional[Link]:
    """k disjoint a-to-b paths avoiding ``forbidden``, or None.

    Paths are fully vertex-disjoint and meet either side only at their
    endpoints.  A singleton side degenerates to a shared terminal: its one
    vertex is common to all paths, which are then internally disjoint
    (the usual Menger reading of a vertex-to-set or vertex-to-vertex
    query).
    """
    at = as_vertex_tuple(g, a, "side a")
    bt = as_vertex_tuple(g, b, "side b")
    ft = as_vertex_tuple(g, forbidden, "forbidden set")
    if set(at) & set(bt) or set(at) & set(ft) or set(bt) & set(ft):
        raise GraphError("side a, side b and forbidden set must be pairwise disjoint")
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    shared_a = len(at) == 1 and k > 1
    shared_b = len(bt) == 1 and k > 1
    if shared_a and shared_b:
        value, raw = _terminal_flow(g, at[0], bt[0], limit=k, forbidden=ft)
        raw_paths = raw if value >= k else None
    elif shared_a:
        raw_paths = _fan_flow(g, at[0], bt, k, ft)
    elif shared_b:
        back = _fan_flow(g, bt[0], at, k, ft)
        raw_paths = None if back is None else [list(reversed(p)) for p in back]
    else:
        if len(at) < k or len(bt) < k:
            return None
        raw_paths = _link_flow(g, at, bt, k, ft)
    if raw_paths is None:
        return None
    paths = tuple(sorted((Path(tuple(p)) for p in raw_paths), key=lambda p: p.vertices))
    link = Link(side_a=at, side_b=bt, paths=paths)
    check_link(g, link, shared_a=shared_a, shared_b=shared_b)
    return link


def find_fan(
    g: Graph,
    x: int,
    s: Iterable[int],
    k: int,
    forbidden: Iterable[int] = (),
) -> Optional[Fan]:
    """A fan of k internally disjoint paths from ``x`` into ``s``, or None."""
    st = as_vertex_tuple(g, s, "target set")
    ft = as_vertex_tuple(g, forbidden, "forbidden set")
    if x in set(st):
        raise GraphError("apex must not belong to the target set")
    if x in set(ft) or set(st) & set(ft):
        raise GraphError("forbidden set must avoid the apex and the target set")
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    if len(st) < k:
        return None
    raw = _fan_flow(g, x, st, k, ft)
    if raw is None:
        return None
    paths = tuple(sorted((Path(tuple(p)) for p in raw), key=lambda p: p.end))
    fan = Fan(apex=x, target=st, paths=paths)
    check_fan(g, fan)
    return fan


def is_k_linked_vertex(g: Graph, v: int, s: Iterable[int], k: int) -> bool:
    """True iff a k-fan from ``v`` into ``s`` exists."""
    st = as_vertex_tuple(g, s, "target set")
    if v in set(st):
        raise GraphError("vertex must not belong to the set it links to")
    if k <= 0:
        return True
    if len(st) < k:
        return False
    return _fan_flow(g, v, st, k) is not None


def is_k_linked_sets(g: Graph, s1: Iterable[int], s2: Iterable[int], k: int) -> bool:
    """True iff a k-link between the disjoint sets ``s1`` and ``s2`` exists."""
    t1 = as_vertex_tuple(g, s1, "side 1")
    t2 = as_vertex_tuple(g, s2, "side 2")
    if set(t1) & set(t2):
        raise GraphError("the two sides must be disjoint")
    if k <= 0:
        return True
    if len(t1) < k or len(t2) < k:
        return False
    return _link_flow(g, t1, t2, k) is not None


def _extension_flow_one_sided(
    g: Graph,
    x: int,
    t: Sequence[int],
    rest: Sequence[int],
    k: int,
) -> Optional[list[list[int]]]:
    """k internally disjoint paths from apex x, ending at every vertex of t
    plus exactly one vertex of ``rest``, each meeting that endpoint set only
    at its end.

    The sink has one unit arc per t vertex plus one through a shared
    collector for all of ``rest``, so a full flow of k is forced to use
    every old endpoint; vertices of ``rest`` stay ordinary otherwise and
    may appear inside paths.
    """
    n = g.n
    coll, src, snk = 2 * n, 2 * n + 1, 2 * n + 2
    net = _FlowNet(2 * n + 3)
    for w in g.neighbors(x):
        net.add_arc(src, 2 * w)
    for v in range(n):
        if v != x:
            net.add_arc(2 * v, 2 * v + 1)
    for ti in t:
        net.add_arc(2 * ti + 1, snk)
    for r in rest:
        net.add_arc(2 * r + 1, coll)
    net.add_arc(coll, snk)
    for u in range(n):
        if u == x:
            continue
        for w in g.neighbors(u):
            if w != x:
                net.add_arc(2 * u + 1, 2 * w)
    if net.max_flow(src, snk, k) < k:
        return None
    return [[x] + _nodes_to_vertices(p, n) for p in net.flow_paths(src, snk)]


def _extension_flow_two_sided(
    g: Graph,
    t1: Sequence[int],
    rest1: Sequence[int],
    t2: Sequence[int],
    rest2: Sequence[int],
    k: int,
) -> Optional[list[list[int]]]:
    """k fully disjoint paths starting at every vertex of t1 plus one vertex
    of rest1 and ending at every vertex of t2 plus one vertex of rest2.

    One collector per side bounds the new endpoints to one each; source and
    sink capacities are exactly k, so a full flow must keep every old
    endpoint.  Vertices of rest1/rest2 remain usable as path interiors.
    """
    n = g.n
    c1, c2, src, snk = 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3
    net = _FlowNet(2 * n + 4)
    for ti in t1:
        net.add_arc(src, 2 * ti)
    net.add_arc(src, c1)
    for r in rest1:
        net.add_arc(c1, 2 * r)
    for v in range(n):
        net.add_arc(2 * v, 2 * v + 1)
    for ti in t2:
        net.add_arc(2 * ti + 1, snk)
    for r in rest2:
        net.add_arc(2 * r + 1, c2)
    net.add_arc(c2, snk)
    for u in range(n):
        for w in g.neighbors(u):
            net.add_arc(2 * u + 1, 2 * w)
    if net.max_flow(src, snk, k) < k:
        return None
    return [_nodes_to_vertices(p, n) for p in net.flow_paths(src, snk)]


def extend_fan(
    g: Graph,
    x: int,
    s: Iterable[int],
    t: Iterable[int],
    k: int,
    check_hypotheses: bool = True,
) -> tuple[int, Fan]:
    """Grow a (k-1)-fan into a k-fan keeping all old endpoints.

    Given x k-linked to s and (k-1)-linked to the (k-1)-subset t of s,
    returns (s_new, fan) where s_new lies in s minus t and the fan joins x
    to exactly t plus s_new.
    """
    st = as_vertex_tuple(g, s, "set s")
    tt = as_vertex_tuple(g, t, "subset t")
    if x in set(st):
        raise GraphError("x must not belong to s")
    if not set(tt) < set(st):
        raise GraphError("t must be a proper subset of s")
    if len(tt) != k - 1:
        raise GraphError(f"t must have k-1 = {k - 1} vertices, got {len(tt)}")
    if len(st) < k:
        raise GraphError(f"s must have at least k = {k} vertices, got {len(st)}")
    if check_hypotheses:
        if not is_k_linked_vertex(g, x, st, k):
            raise HypothesisError(f"x={x} and s are not {k}-linked")
        if k >= 2 and not is_k_linked_vertex(g, x, tt, k - 1):
            raise HypothesisError(f"x={x} and t are not {k - 1}-linked")
    rest = sorted(set(st) - set(tt))
    raw = _extension_flow_one_sided(g, x, tt, rest, k)
    if raw is None:
        raise HypothesisError(
            f"no {k} internally disjoint extension paths exist; the stated hypotheses fail"
        )
    out_paths = [Path(tuple(p)) for p in raw]
    ends = {p.end for p in out_paths}
    s_new = next(iter(ends - set(tt)))
    fan = Fan(
        apex=x,
        target=tuple(sorted(tt + (s_new,))),
        paths=tuple(sorted(out_paths, key=lambda p: p.end)),
    )
    check_fan(g, fan)
    if len(set(fan.endpoints) & set(tt)) != k - 1:
        raise GraphError("internal error: an old fan endpoint was lost")
    return s_new, fan


def extend_link(
    g: Graph,
    s1: Iterable[int],
    s2: Iterable[int],
    t1: Iterable[int],
    t2: Iterable[int],
    k: int,
    check_hypotheses: bool = True,
) -> tuple[int, int, Link]:
    """Grow a (k-1)-link into a k-link keeping all old endpoints.

    Given disjoint sets s1, s2 that are k-linked and (k-1)-subsets
    t1, t2 that are (k-1)-linked, returns (s_new1, s_new2, link) where the
    link joins exactly t1 plus s_new1 to t2 plus s_new2.
    """
    s1t = as_vertex_tuple(g, s1, "set s1")
    s2t = as_vertex_tuple(g, s2, "set s2")
    t1t = as_vertex_tuple(g, t1, "subset t1")
    t2t = as_vertex_tuple(g, t2, "subset t2")
    if set(s1t) & set(s2t):
        raise GraphError("s1 and s2 must be disjoint")
    for name, st, tt in (("1", s1t, t1t), ("2", s2t, t2t)):
        if not set(tt) < set(st):
            raise GraphError(f"t{name} must be a proper subset of s{name}")
        if len(tt) != k - 1:
            raise GraphError(f"t{name} must have k-1 = {k - 1} vertices, got {len(tt)}")
        if len(st) < k:
            raise GraphError(f"s{name} must have at least k = {k} vertices, got {len(st)}")
    if check_hypotheses:
        if not is_k_linked_sets(g, s1t, s2t, k):
            raise HypothesisError(f"s1 and s2 are not {k}-linked")
        if k >= 2 and not is_k_linked_sets(g, t1t, t2t, k - 1):
            raise HypothesisError(f"t1 and t2 are not {k - 1}-linked")
    rest1 = sorted(set(s1t) - set(t1t))
    rest2 = sorted(set(s2t) - set(t2t))
    raw = _extension_flow_two_sided(g, t1t, rest1, t2t, rest2, k)
    if raw is None:
        raise HypothesisError(
            f"no {k} disjoint extension paths exist; the stated hypotheses fail"
        )
    out_paths = [Path(tuple(p)) for p in raw]
    s_new1 = next(iter({p.start for p in out_paths} - set(t1t)))
    s_new2 = next(iter({p.end for p in out_paths} - set(t2t)))
    link = Link(
        side_a=tuple(sorted(t1t + (s_new1,))),
        side_b=tuple(sorted(t2t + (s_new2,))),
        paths=tuple(sorted(out_paths, key=lambda p: p.start)),
    )
    check_link(g, link)
    if len(set(link.endpoints_a) & set(t1t)) != k - 1 or len(set(link.endpoints_b) & set(t2t)) != k - 1:
        raise GraphError("internal error: an old link endpoint was lost")
    return s_new1, s_new2, link


def extend_link_by_t(
    g: Graph,
    s1: Iterable[int],
    s2: Iterable[int],
    t1: Iterable[int],
    t2: Iterable[int],
    k: int,
    t: int,
    check_hypotheses: bool = True,
) -> tuple[tuple[int, ...], tuple[int, ...], Link]:
    """Grow a (k-t)-link into a k-link, one endpoint per side per round.

    Returns the two sets of t added endpoints and the final k-link, whose
    endpoint sets are exactly t_i plus the added vertices on each side.
    """
    s1t = as_vertex_tuple(g, s1, "set s1")
    s2t = as_vertex_tuple(g, s2, "set s2")
    t1t = as_vertex_tuple(g, t1, "subset t1")
    t2t = as_vertex_tuple(g, t2, "subset t2")
    if t < 1 or t > k:
        raise GraphError(f"t must be between 1 and k = {k}, got {t}")
    if len(t1t) != k - t or len(t2t) != k - t:
        raise GraphError(f"t1 and t2 must each have k-t = {k - t} vertices")
    if check_hypotheses:
        if not is_k_linked_sets(g, s1t, s2t, k):
            raise HypothesisError(f"s1 and s2 are not {k}-linked")
        if k - t >= 1 and not is_k_linked_sets(g, t1t, t2t, k - t):
            raise HypothesisError(f"t1 and t2 are not {k - t}-linked")
    cur1, cur2 = t1t, t2t
    added1: list[int] = []
    added2: list[int] = []
    link: Optional[Link] = None
    for step in range(1, t + 1):
        kj = k - t + step
        a1, a2, link = extend_link(g, s1t, s2t, cur1, cur2, kj, check_hypotheses=False)
        added1.append(a1)
        added2.append(a2)
        cur1 = tuple(sorted(cur1 + (a1,)))
        cur2 = tuple(sorted(cur2 + (a2,)))
    assert link is not None
    return tuple(sorted(added1)), tuple(sorted(added2)), link


def _side_paths(g: Graph, s1: set[int], s2: set[int]) -> list[tuple[int, ...]]:
    """All simple paths starting in s1, ending in s2, interiors avoiding
    both sets.  Exhaustive; meant for small graphs only."""
    blocked = s1 | s2
    out: list[tuple[int, ...]] = []

    def walk(path: list[int], used: set[int]) -> None:
        last = path[-1]
        for w in g.neighbors(last):
            if w in used:
                continue
            if w in s2:
                out.append(tuple(path) + (w,))
            elif w not in blocked:
                used.add(w)
                path.append(w)
                walk(path, used)
                path.pop()
                used.remove(w)

    for a in sorted(s1):
        walk([a], {a})
    return out


def verify_no_refining_link(
    g: Graph,
    s1: Iterable[int],
    s2: Iterable[int],
    t1: Iterable[int],
    t2: Iterable[int],
    k: int,
    max_vertices: int = 16,
) -> bool:
    """True iff no k-link between s1 and s2 contains a (k-1)-sublink whose
    endpoint sets are exactly t1 and t2.  Exhaustive search over all
    disjoint path systems; guarded to small graphs.
    """
    if g.n > max_vertices:
        raise GraphError(
            f"refinement check is exhaustive and limited to {max_vertices} vertices; "
            f"got {g.n} (raise max_vertices to override)"
        )
    s1t = as_vertex_tuple(g, s1, "set s1")
    s2t = as_vertex_tuple(g, s2, "set s2")
    t1t = as_vertex_tuple(g, t1, "subset t1")
    t2t = as_vertex_tuple(g, t2, "subset t2")
    if set(s1t) & set(s2t):
        raise GraphError("s1 and s2 must be disjoint")
    if len(t1t) != k - 1 or len(t2t) != k - 1:
        raise GraphError(f"t1 and t2 must each have k-1 = {k - 1} vertices")
    rest1 = sorted(set(s1t) - set(t1t))
    rest2 = set(s2t) - set(t2t)
    paths = _side_paths(g, set(s1t), set(s2t))
    by_start: dict[int, list[tuple[int, ...]]] = {}
    for p in paths:
        by_start.setdefault(p[0], []).append(p)

    t1_list = list(t1t)
    t2_set = set(t2t)

    def match_t(idx: int, used: set[int], ends_taken: set[int]) -> bool:
        if idx == len(t1_list):
            return True
        a = t1_list[idx]
        for p in by_start.get(a, ()):
            if p[-1] not in t2_set or p[-1] in ends_taken:
                continue
            pv = set(p)
            if pv & used:
                continue
            if match_t(idx + 1, used | pv, ends_taken | {p[-1]}):
                return True
        return False

    # a refining k-link = one extra path between the leftover sides plus a
    # perfect (k-1)-system exactly covering t1 -> t2, all disjoint
    for a in rest1:
        for p in by_start.get(a, ()):
            if p[-1] not in rest2:
                continue
            if match_t(0, set(p), set()):
                return False
    return True
