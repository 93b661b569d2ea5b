"""Structural predicates: claws, connectivity, cuts and blocks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, GraphError, as_vertex_tuple
from .links import max_internally_disjoint


@dataclass(frozen=True)
class ClawWitness:
    """An induced K_{1,3}: a center adjacent to three pairwise non-adjacent
    leaves."""

    center: int
    leaves: tuple[int, int, int]


def find_claw(g: Graph) -> Optional[ClawWitness]:
    """Lexicographically smallest induced claw (by center, then leaves)."""
    for u in range(g.n):
        nb = g.neighbors(u)
        if len(nb) < 3:
            continue
        for a, b, c in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return ClawWitness(center=u, leaves=(a, b, c))
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """Components of g minus ``removed``, each sorted, ordered by minimum."""
    gone = set(removed)
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for s in range(g.n):
        if s in gone or s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in gone and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity via unit-capacity flow over a pivot sweep.

    The pivot is the smallest minimum-degree vertex; flows run from it to
    every non-neighbor and between every non-adjacent pair of its
    neighbors, which together always see a minimum cut.
    """
    if g.n < 2:
        raise GraphError("vertex connectivity needs at least two vertices")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    pivot = min(range(g.n), key=lambda v: (g.degree(v), v))
    best = g.n - 1
    for u in range(g.n):
        if u != pivot and not g.has_edge(pivot, u):
            best = min(best, max_internally_disjoint(g, pivot, u))
            if best == 0:
                return 0
    nb = g.neighbors(pivot)
    for i, x in enumerate(nb):
        for y in nb[i + 1 :]:
            if not g.has_edge(x, y):
                best = min(best, max_internally_disjoint(g, x, y))
    return best


@dataclass(frozen=True)
class CutSet:
    """A separating vertex set together with the components it leaves."""

    vertices: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def enumerate_cuts(
    g: Graph,
    size: int,
    max_size: int = 4,
    allow_large: bool = False,
) -> list[CutSet]:
    """Every vertex subset of the given size whose removal disconnects g.

    Exhaustive over all subsets, so sizes above ``max_size`` are refused
    unless ``allow_large`` is set.
    """
    if size < 0:
        raise GraphError(f"cut size must be >= 0, got {size}")
    if size > max_size and not allow_large:
        raise GraphError(
            f"cut enumeration over subsets of size {size} exceeds the guard "
            f"({max_size}); pass allow_large=True to override"
        )
    cuts: list[CutSet] = []
    for subset in combinations(range(g.n), size):
        comps = connected_components(g, subset)
        if len(comps) >= 2:
            cuts.append(CutSet(vertices=subset, components=tuple(comps)))
    return cuts


@dataclass(frozen=True)
class ThreeCutVerdict:
    """Outcome of the 3-cut shape check: component count and, per component,
    its cutvertices.  Passes iff there are exactly two components and both
    are cutvertex-free."""

    cut: tuple[int, ...]
    component_count: int
    cutvertices: tuple[tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return self.component_count == 2 and all(not c for c in self.cutvertices)


def check_three_cut_structure(g: Graph, cut: Iterable[int]) -> ThreeCutVerdict:
    """Check that removing the 3-cut leaves exactly two cutvertex-free
    components.  Preconditions (3-connected, claw-free, |cut| = 3, cut
    actually separates) are enforced, not assumed."""
    cut_t = as_vertex_tuple(g, cut, "cut")
    if len(cut_t) != 3:
        raise GraphError(f"expected a 3-cut, got {len(cut_t)} vertices")
    witness = find_claw(g)
    if witness is not None:
        raise GraphError(f"precondition failed: graph has a claw at {witness.center}")
    if vertex_connectivity(g) < 3:
        raise GraphError("precondition failed: graph is not 3-connected")
    comps = connected_components(g, cut_t)
    if len(comps) < 2:
        raise GraphError(f"{cut_t} is not a cut: removal leaves the graph connected")
    cutvertices = []
    for comp in comps:
        sub_map = {v: i for i, v in enumerate(comp)}
        sub = Graph(
            len(comp),
            [
                (sub_map[u], sub_map[v])
                for u, v in g.edges()
                if u in sub_map and v in sub_map
            ],
        )
        cutvertices.append(tuple(comp[i] for i in articulation_points(sub)))
    return ThreeCutVerdict(
        cut=cut_t,
        component_count=len(comps),
        cutvertices=tuple(cutvertices),
    )


def _block_dfs(g: Graph):
    """Iterative Hopcroft-Tarjan; yields ('block', edges) and ('cut', v)."""
    visited: set[int] = set()
    for root in range(g.n):
        if root in visited:
            continue
        discovery = {root: 0}
        low = {root: 0}
        root_children = 0
        visited.add(root)
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, root, iter(g.neighbors(root)))]
        while stack:
            grandparent, parent, children = stack[-1]
            advanced = False
            for child in children:
                if child == grandparent:
                    continue
                if child in visited:
                    if discovery[child] <= discovery[parent]:
                        low[parent] = min(low[parent], discovery[child])
                        edge_stack.append((parent, child))
                else:
                    low[child] = discovery[child] = len(discovery)
                    visited.add(child)
                    edge_stack.append((parent, child))
                    stack.append((parent, child, iter(g.neighbors(child))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if len(stack) > 1:
                if low[parent] >= discovery[grandparent]:
                    yield "cut", grandparent
                    idx = next(
                        i for i, e in enumerate(edge_stack) if e == (grandparent, parent)
                    )
                    yield "block", edge_stack[idx:]
                    del edge_stack[idx:]
                low[grandparent] = min(low[grandparent], low[parent])
            elif stack:
                root_children += 1
                idx = next(
                    i for i, e in enumerate(edge_stack) if e == (grandparent, parent)
                )
                yield "block", edge_stack[idx:]
                del edge_stack[idx:]
        if root_children > 1:
            yield "cut", root


def biconnected_components(g: Graph) -> list[tuple[int, ...]]:
    """Blocks as sorted vertex tuples; isolated vertices form their own
    blocks; cutvertices appear in every block they join."""
    blocks: list[tuple[int, ...]] = []
    in_any: set[int] = set()
    for kind, payload in _block_dfs(g):
        if kind == "block":
            vs = set()
            for u, v in payload:
                vs.add(u)
                vs.add(v)
            blocks.append(tuple(sorted(vs)))
            in_any |= vs
    for v in range(g.n):
        if v not in in_any:
            blocks.append((v,))
    return sorted(blocks)


def articulation_points(g: Graph) -> tuple[int, ...]:
    """Cutvertices in ascending order."""
    cuts = {v for kind, v in _block_dfs(g) if kind == "cut"}
    return tuple(sorted(cuts))
