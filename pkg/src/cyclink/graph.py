"""Simple undirected graphs with dense 0-based vertex ids.

Every structure in this package is built on :class:`Graph`: an immutable
simple graph whose vertices are ``0..n-1`` and whose adjacency is kept in
ascending order, so every algorithm that iterates neighbors is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph construction or an operation applied to bad input."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    No self-loops, no parallel edges.  Optional ``labels`` attach display
    names to individual vertices (used by the named generators and the CLI).
    """

    __slots__ = ("_n", "_adj", "_sets", "_labels", "_masks")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Mapping[int, str]] = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for idx, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge #{idx} ({u}, {v}): vertex id out of range 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge #{idx} ({u}, {v}): self-loops are not allowed")
            if v in sets[u]:
                raise GraphError(f"edge #{idx} ({u}, {v}): duplicate edge")
            sets[u].add(v)
            sets[v].add(u)
        self._n = n
        self._sets = tuple(frozenset(s) for s in sets)
        self._adj = tuple(tuple(sorted(s)) for s in sets)
        if labels:
            for v in labels:
                if not (0 <= v < n):
                    raise GraphError(f"label for unknown vertex {v}")
            self._labels = dict(labels)
        else:
            self._labels = {}
        self._masks: Optional[tuple[int, ...]] = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        for u in range(self._n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    def label_of(self, v: int) -> Optional[str]:
        return self._labels.get(v)

    def vertex_by_label(self, name: str) -> int:
        for v, lab in self._labels.items():
            if lab == name:
                return v
        raise KeyError(f"no vertex labeled {name!r}")

    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks (bit v of mask[u] set iff uv is an edge)."""
        if self._masks is None:
            masks = []
            for u in range(self._n):
                m = 0
                for v in self._adj[u]:
                    m |= 1 << v
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def is_regular(self, k: int) -> bool:
        return all(len(a) == k for a in self._adj)

    def relabel(self, labels: Mapping[int, str]) -> "Graph":
        """Same graph with a replacement label map."""
        return Graph(self._n, self.edges(), labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def as_vertex_tuple(g: Graph, vs: Iterable[int], name: str = "vertex set") -> tuple[int, ...]:
    """Validate a vertex set against ``g`` and return it sorted."""
    out = sorted(vs)
    for v in out:
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise GraphError(f"{name}: vertex id {v} out of range 0..{g.n - 1}")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise GraphError(f"{name}: duplicate vertex {a}")
    return tuple(out)


@dataclass(frozen=True)
class Path:
    """A simple path as an ordered vertex sequence (at least one vertex)."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 1:
            raise GraphError("a path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError(f"path repeats a vertex: {self.vertices}")

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)))


def check_path(g: Graph, path: Path) -> None:
    """Raise unless consecutive vertices of ``path`` are adjacent in ``g``."""
    for v in path.vertices:
        if not (0 <= v < g.n):
            raise GraphError(f"path vertex {v} not in graph")
    for a, b in zip(path.vertices, path.vertices[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"path uses non-edge ({a}, {b})")


@dataclass(frozen=True)
class Cycle:
    """A simple cycle with a fixed traversal orientation.

    The stored vertex order is the "clockwise" direction; segments can be
    extracted in either direction with any of the four openness variants.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise GraphError("a cycle needs at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError(f"cycle repeats a vertex: {self.vertices}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def index(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise GraphError(f"vertex {v} is not on the cycle") from None

    def cycle_neighbors(self, v: int) -> tuple[int, int]:
        """(counterclockwise, clockwise) neighbors of ``v`` on the cycle."""
        i = self.index(v)
        k = len(self.vertices)
        return self.vertices[(i - 1) % k], self.vertices[(i + 1) % k]

    def segment(
        self,
        x: int,
        y: int,
        direction: str = "cw",
        openness: str = "closed",
    ) -> Path:
        """Arc of the cycle from ``x`` to ``y``.

        ``direction`` is "cw" or "ccw"; ``openness`` is one of "closed",
        "half-open-left" (drop x), "half-open-right" (drop y), "open"
        (drop both).  Raises if the requested arc is empty.
        """
        ix, iy = self.index(x), self.index(y)
        k = len(self.vertices)
        if direction == "cw":
            step = 1
        elif direction == "ccw":
            step = -1
        else:
            raise GraphError(f"direction must be 'cw' or 'ccw', got {direction!r}")
        seq = [self.vertices[ix]]
        i = ix
        while i != iy:
            i = (i + step) % k
            seq.append(self.vertices[i])
        if openness == "closed":
            pass
        elif openness == "half-open-left":
            seq = seq[1:]
        elif openness == "half-open-right":
            seq = seq[:-1]
        elif openness == "open":
            seq = seq[1:-1] if len(seq) > 1 else []
        else:
            raise GraphError(f"unknown openness {openness!r}")
        if not seq:
            raise GraphError(f"empty segment from {x} to {y} ({direction}, {openness})")
        return Path(tuple(seq))


def check_cycle(g: Graph, cycle: Cycle) -> None:
    """Raise unless ``cycle`` is a real cycle of ``g``."""
    vs = cycle.vertices
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"cycle vertex {v} not in graph")
    for a, b in zip(vs, vs[1:] + (vs[0],)):
        if not g.has_edge(a, b):
            raise GraphError(f"cycle uses non-edge ({a}, {b})")


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V(g) minus ``s``, plus the old-to-new id map."""
    drop = set(as_vertex_tuple(g, s, "deletion set"))
    keep = [v for v in range(g.n) if v not in drop]
    old_to_new = {v: i for i, v in enumerate(keep)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u, v in g.edges()
        if u not in drop and v not in drop
    ]
    labels = {old_to_new[v]: lab for v, lab in g.labels.items() if v not in drop}
    return Graph(len(keep), edges, labels), old_to_new


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertex set ``s``, plus the old-to-new id map."""
    keep = as_vertex_tuple(g, s, "vertex set")
    drop = [v for v in range(g.n) if v not in set(keep)]
    return delete_vertices(g, drop)


def contract(g: Graph, q: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Collapse the connected set ``q`` into one vertex; result stays simple.

    Kept vertices are re-indexed densely in ascending order; the merged
    vertex takes the last id.  The old-to-new map sends every member of
    ``q`` to that id.
    """
    qs = as_vertex_tuple(g, q, "contraction set")
    if not qs:
        raise GraphError("contraction set must be nonempty")
    if not _is_connected_induced(g, qs):
        raise GraphError(f"contraction set {qs} does not induce a connected subgraph")
    qset = set(qs)
    keep = [v for v in range(g.n) if v not in qset]
    old_to_new = {v: i for i, v in enumerate(keep)}
    merged = len(keep)
    for v in qs:
        old_to_new[v] = merged
    edges = set()
    for u, v in g.edges():
        nu, nv = old_to_new[u], old_to_new[v]
        if nu == nv:
            continue
        edges.add((min(nu, nv), max(nu, nv)))
    labels = {old_to_new[v]: lab for v, lab in g.labels.items() if v not in qset}
    return Graph(merged + 1, sorted(edges), labels), old_to_new


def _is_connected_induced(g: Graph, vs: Sequence[int]) -> bool:
    if not vs:
        return False
    inside = set(vs)
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(inside)


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge, adjacent iff the edges share an end.

    Vertices are labeled "u-v" after the originating edge.
    """
    edge_list = list(g.edges())
    if not edge_list:
        raise GraphError("line graph of an edgeless graph is undefined here")
    index = {e: i for i, e in enumerate(edge_list)}
    new_edges = []
    for i, (u, v) in enumerate(edge_list):
        for w in (u, v):
            for x in g.neighbors(w):
                e2 = (min(w, x), max(w, x))
                j = index[e2]
                if j > i:
                    new_edges.append((i, j))
    labels = {i: f"{u}-{v}" for i, (u, v) in enumerate(edge_list)}
    return Graph(len(edge_list), sorted(set(new_edges)), labels)
