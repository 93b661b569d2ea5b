"""Exact cycle-through/avoid search and everything built on top of it.

``find_cycle`` is a complete decision procedure: it returns a witness cycle
through every requested vertex and none of the avoided ones, or None only
when no such cycle exists.  The search is an anchored backtracking walk
over bitmask adjacency with two sound pruning rules (every remaining
required vertex, and the anchor, must stay reachable from the walk's
growing end through unused vertices), so exhausting the tree proves
absence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .analysis import ClawWitness, biconnected_components
from .graph import (
    Cycle,
    Graph,
    GraphError,
    Path,
    as_vertex_tuple,
    check_cycle,
    check_path,
    delete_vertices,
)


class BudgetExceededError(RuntimeError):
    """An exhaustive sweep hit its query budget before finishing."""

    def __init__(self, message: str, queries: int):
        super().__init__(message)
        self.queries = queries


def _reach(masks, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    reach = 1 << start
    frontier = reach
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~reach
        reach |= nxt
        frontier = nxt
    return reach


def find_cycle(g: Graph, include: Iterable[int], avoid: Iterable[int] = ()) -> Optional[Cycle]:
    """A cycle through all of ``include`` and none of ``avoid``, or None.

    Complete and deterministic: candidate extensions are tried in
    ascending vertex order and the first witness found is returned.
    """
    inc = as_vertex_tuple(g, include, "include set")
    av = as_vertex_tuple(g, avoid, "avoid set")
    if set(inc) & set(av):
        raise GraphError("include and avoid sets overlap")
    if not inc:
        return _any_cycle(g, av)

    # any witness cycle lives inside one block of g minus the avoid set, so
    # the required vertices must share a block of at least three vertices;
    # a lone required vertex may be a cutvertex sitting in several blocks
    residual, old_to_new = _residual(g, av)
    new_ids = [old_to_new[v] for v in inc]
    new_to_old = {i: v for v, i in old_to_new.items()}
    candidate_blocks = [
        b
        for b in biconnected_components(residual)
        if len(b) >= 3 and all(v in b for v in new_ids)
    ]

    masks = g.neighbor_masks()
    anchor = inc[0]
    include_mask = 0
    for v in inc:
        include_mask |= 1 << v

    for block in candidate_blocks:
        block_mask = 0
        for v in block:
            block_mask |= 1 << new_to_old[v]
        path = [anchor]
        used = 1 << anchor
        rem = include_mask & ~used
        found = _extend(g, masks, block_mask, anchor, masks[anchor], path, used, rem)
        if found is not None:
            return Cycle(tuple(found))
    return None


def _extend(g, masks, allowed, anchor, anchor_adj, path, used, rem):
    end = path[-1]
    if not rem and len(path) >= 3 and (anchor_adj >> end) & 1:
        return list(path)
    avail = allowed & ~used
    reach = _reach(masks, end, avail)
    if rem & ~reach:
        return None
    if not (anchor_adj & reach):
        return None
    cands = masks[end] & avail
    while cands:
        low = cands & -cands
        v = low.bit_length() - 1
        cands ^= low
        path.append(v)
        result = _extend(g, masks, allowed, anchor, anchor_adj, path, used | low, rem & ~low)
        if result is not None:
            return result
        path.pop()
    return None


def _residual(g: Graph, av: tuple[int, ...]) -> tuple[Graph, dict[int, int]]:
    return delete_vertices(g, av)


def _any_cycle(g: Graph, av: tuple[int, ...]) -> Optional[Cycle]:
    """Any cycle avoiding ``av``: anchor the search in each big-enough block."""
    residual, old_to_new = _residual(g, av)
    new_to_old = {i: v for v, i in old_to_new.items()}
    for block in biconnected_components(residual):
        if len(block) >= 3:
            anchor = new_to_old[min(block)]
            found = find_cycle(g, (anchor,), av)
            if found is not None:
                return found
    return None


@dataclass(frozen=True)
class CmnReport:
    """Outcome of a C(m,n) sweep: every disjoint (include, avoid) pair of
    sizes (m, n) must admit a cycle."""

    m: int
    n: int
    mode: str
    passed: bool
    queries: int
    witness_include: Optional[tuple[int, ...]] = None
    witness_avoid: Optional[tuple[int, ...]] = None
    seed: Optional[int] = None
    trials: Optional[int] = None

    def witness(self) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
        if self.witness_include is None:
            return None
        return self.witness_include, self.witness_avoid


DEFAULT_CMN_BUDGET = 5_000_000


def has_property_cmn(
    g: Graph,
    m: int,
    n: int,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    budget: int = DEFAULT_CMN_BUDGET,
) -> CmnReport:
    """Decide property C(m, n) for ``g``.

    Exhaustive mode sweeps every disjoint pair lexicographically (avoid set
    outermost) and stops at the first failure; sample mode draws seeded
    uniform pairs.  A sweep that would exceed ``budget`` oracle calls raises
    BudgetExceededError instead of passing silently.
    """
    if m < 0 or n < 0 or m + n < 1:
        raise GraphError(f"need m, n >= 0 and m + n >= 1, got ({m}, {n})")
    if m + n > g.n:
        raise GraphError(f"m + n = {m + n} exceeds the vertex count {g.n}")
    queries = 0
    if mode == "exhaustive":
        for s2 in combinations(range(g.n), n):
            left = [v for v in range(g.n) if v not in s2]
            for s1 in combinations(left, m):
                queries += 1
                if queries > budget:
                    raise BudgetExceededError(
                        f"C({m},{n}) sweep exceeded budget of {budget} oracle calls",
                        queries=queries,
                    )
                if find_cycle(g, s1, s2) is None:
                    return CmnReport(
                        m=m, n=n, mode=mode, passed=False, queries=queries,
                        witness_include=s1, witness_avoid=s2,
                    )
        return CmnReport(m=m, n=n, mode=mode, passed=True, queries=queries)
    if mode == "sample":
        if seed is None or trials is None:
            raise GraphError("sample mode needs both a seed and a trial count")
        rng = random.Random(seed)
        for _ in range(trials):
            queries += 1
            if queries > budget:
                raise BudgetExceededError(
                    f"C({m},{n}) sampling exceeded budget of {budget} oracle calls",
                    queries=queries,
                )
            picked = rng.sample(range(g.n), m + n)
            s1 = tuple(sorted(picked[:m]))
            s2 = tuple(sorted(picked[m:]))
            if find_cycle(g, s1, s2) is None:
                return CmnReport(
                    m=m, n=n, mode=mode, passed=False, queries=queries,
                    witness_include=s1, witness_avoid=s2, seed=seed, trials=trials,
                )
        return CmnReport(
            m=m, n=n, mode=mode, passed=True, queries=queries, seed=seed, trials=trials
        )
    raise GraphError(f"unknown mode {mode!r}; expected 'exhaustive' or 'sample'")


def cyclability(g: Graph, budget: int = DEFAULT_CMN_BUDGET) -> int:
    """Largest m such that every m-set of vertices lies on a common cycle.

    Equals the vertex count exactly when the graph is Hamiltonian.  C(m, 0)
    is monotone in m, so the sweep stops at the first failing size.
    """
    if find_cycle(g, ()) is None:
        raise GraphError("cyclability is undefined for acyclic graphs")
    for m in range(1, g.n + 1):
        report = has_property_cmn(g, m, 0, budget=budget)
        if not report.passed:
            return m - 1
    return g.n


@dataclass(frozen=True)
class JumperInput:
    """Two paths that collide at one cycle vertex u: each ends at u, shares
    nothing else with the other, and approaches u from off-cycle vertices."""

    cycle: Cycle
    p1: Path
    p2: Path

    def derive(self, g: Graph) -> tuple[int, int, int, int, int]:
        """(u, u1, u2, u3, u4): the collision vertex, its two cycle
        neighbors, and the two path vertices preceding it."""
        check_cycle(g, self.cycle)
        check_path(g, self.p1)
        check_path(g, self.p2)
        if len(self.p1) < 2 or len(self.p2) < 2:
            raise GraphError("jumper paths need at least two vertices")
        u = self.p1.end
        if self.p2.end != u:
            raise GraphError("the two paths must end at the same vertex")
        if u not in self.cycle:
            raise GraphError(f"collision vertex {u} is not on the cycle")
        shared = set(self.p1.vertices) & set(self.p2.vertices)
        if shared != {u}:
            raise GraphError(f"paths must be disjoint except at {u}, also share {sorted(shared - {u})}")
        u1, u2 = self.cycle.cycle_neighbors(u)
        u3, u4 = self.p1.vertices[-2], self.p2.vertices[-2]
        if u3 in (u1, u2) or u4 in (u1, u2):
            raise GraphError("path predecessors of u must differ from u's cycle neighbors")
        return u, u1, u2, u3, u4


@dataclass(frozen=True)
class JoinedPath:
    """First jumper outcome: the colliding paths fuse into one path that
    skips the collision vertex."""

    path: Path


@dataclass(frozen=True)
class RedirectedPaths:
    """Second jumper outcome: one path is rerouted onto a cycle neighbor,
    so the two paths now end at distinct cycle vertices."""

    p1: Path
    p2: Path


JumperOutcome = Union[JoinedPath, RedirectedPaths, ClawWitness]


def apply_jumper(g: Graph, jin: JumperInput) -> JumperOutcome:
    """Resolve a path collision at a cycle vertex.

    If the two approach vertices are adjacent, the paths join into one.
    Otherwise some edge between a cycle neighbor of u and an approach
    vertex must exist in a claw-free graph and one path is redirected along
    it; if no such edge exists the function returns the induced claw at u
    instead.
    """
    u, u1, u2, u3, u4 = jin.derive(g)
    if g.has_edge(u3, u4):
        joined = jin.p1.vertices[:-1] + tuple(reversed(jin.p2.vertices[:-1]))
        path = Path(joined)
        check_path(g, path)
        return JoinedPath(path=path)
    for ui, uj in ((u1, u3), (u2, u3), (u1, u4), (u2, u4)):
        if g.has_edge(ui, uj):
            if uj == u3:
                new_p1 = Path(jin.p1.vertices[:-1] + (ui,))
                check_path(g, new_p1)
                return RedirectedPaths(p1=new_p1, p2=jin.p2)
            new_p2 = Path(jin.p2.vertices[:-1] + (ui,))
            check_path(g, new_p2)
            return RedirectedPaths(p1=jin.p1, p2=new_p2)
    return ClawWitness(center=u, leaves=tuple(sorted((u1, u3, u4))))


class InsufficientDegreeError(GraphError):
    """The requested hub degree is below the wheel order: impossible."""


@dataclass(frozen=True)
class WheelSubdivision:
    """A subdivided k-wheel: hub, rim cycle, and k spoke paths from the hub
    to distinct rim vertices, pairwise sharing only the hub."""

    hub: int
    rim: Cycle
    spokes: tuple[Path, ...]

    @property
    def order(self) -> int:
        return len(self.spokes)


def check_wheel(g: Graph, w: WheelSubdivision) -> None:
    check_cycle(g, w.rim)
    rim_set = w.rim.vertex_set()
    if w.hub in rim_set:
        raise GraphError("wheel hub lies on its own rim")
    interiors: set[int] = set()
    ends: set[int] = set()
    for spoke in w.spokes:
        check_path(g, spoke)
        if spoke.start != w.hub:
            raise GraphError("every spoke must start at the hub")
        if spoke.end not in rim_set:
            raise GraphError("every spoke must end on the rim")
        body = set(spoke.vertices[1:-1])
        if body & rim_set:
            raise GraphError("spoke interiors must avoid the rim")
        if body & interiors or spoke.end in ends:
            raise GraphError("spokes must be disjoint except at the hub")
        interiors |= body
        ends.add(spoke.end)


def find_wheel_subdivision(g: Graph, z: int, k: int) -> Optional[WheelSubdivision]:
    """A subdivided W_k with hub ``z``: a rim cycle through k neighbors of
    z, avoiding z, plus the k single-edge spokes.

    Neighbor k-subsets are tried in ascending order; absence is certain
    only after every subset fails.  A hub of degree below k is impossible
    and reported as InsufficientDegreeError.
    """
    if k < 3:
        raise GraphError(f"wheel order must be at least 3, got {k}")
    if not (0 <= z < g.n):
        raise GraphError(f"hub {z} is not a vertex")
    if g.degree(z) < k:
        raise InsufficientDegreeError(
            f"vertex {z} has degree {g.degree(z)} < {k}: a W_{k} hub needs degree >= {k}"
        )
    for subset in combinations(g.neighbors(z), k):
        rim = find_cycle(g, subset, (z,))
        if rim is not None:
            wheel = WheelSubdivision(
                hub=z,
                rim=rim,
                spokes=tuple(Path((z, v)) for v in subset),
            )
            check_wheel(g, wheel)
            return wheel
    return None
