"""Vertex connectivity: independent path families and minimum separators.

Everything here reduces to unit-vertex-capacity maximum flow. A graph
vertex splits into an in-node and an out-node joined by a through-arc
whose capacity is 1 when the vertex may be consumed or cut, effectively
unbounded otherwise. Augmenting paths are found breadth-first over
ascending node ids and the final flow is decomposed choosing the least
next node, so every result is a deterministic function of the graph
alone. That determinism is load-bearing: the construction algorithms
select paths by index out of these families, and reruns must pick the
same paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

_INF = 1 << 30


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in path {self.vertices}")

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple((u, v) if u < v else (v, u) for u, v in zip(vs, vs[1:]))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class PathFamily:
    """Independent v-w paths in a fixed canonical order, indexed from 1.

    Member paths share no vertex besides v and w. The order is part of
    the contract: construction algorithms pick the least index whose
    path meets a component, and an index must mean the same path on
    every run over the same graph.
    """

    v: int
    w: int
    paths: tuple[Path, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for p in self.paths:
            if p.ends != (self.v, self.w):
                raise ValueError(f"path {p.vertices} does not run from {self.v} to {self.w}")
            inner = set(p.interior)
            if inner & seen:
                raise ValueError(f"paths share interior vertices {sorted(inner & seen)}")
            seen |= inner

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, index: int) -> Path:
        """1-based, matching least-index selection."""
        if index < 1:
            raise IndexError(f"path indices start at 1, got {index}")
        return self.paths[index - 1]


@dataclass(frozen=True)
class Separator:
    """A vertex set s together with the two sides a, b it separates."""

    s: frozenset[int]
    a: frozenset[int]
    b: frozenset[int]


class InseparableError(ValueError):
    """No separator disjoint from both sides exists (an edge joins them directly)."""


class _FlowNet:
    """Split-vertex unit-capacity network over a graph.

    The vertex with ascending-order rank k becomes in-node 2k and
    out-node 2k+1; the source and sink are the two node ids after that.
    Vertices in `unit` get a capacity-1 through-arc, all others an
    unbounded one. Edge arcs run out(u)->in(v) both ways with the given
    capacity: 1 for path counting (a bare edge is one path, never two),
    unbounded for separator extraction (so minimum cuts consist of
    through-arcs only).
    """

    def __init__(
        self,
        g: Graph,
        sources: frozenset[int],
        sinks: frozenset[int],
        unit: frozenset[int],
        edge_cap: int,
    ) -> None:
        self.vertex = g.vertices
        rank = {v: i for i, v in enumerate(g.vertices)}
        n = len(g.vertices)
        self.source = 2 * n
        self.sink = 2 * n + 1
        self.cap: dict[tuple[int, int], int] = {}
        self.adj: dict[int, list[int]] = {x: [] for x in range(2 * n + 2)}
        for v in g.vertices:
            self._arc(2 * rank[v], 2 * rank[v] + 1, 1 if v in unit else _INF)
        for u, v in g.edges:
            self._arc(2 * rank[u] + 1, 2 * rank[v], edge_cap)
            self._arc(2 * rank[v] + 1, 2 * rank[u], edge_cap)
        for v in sorted(sources):
            self._arc(self.source, 2 * rank[v], _INF)
        for v in sorted(sinks):
            self._arc(2 * rank[v] + 1, self.sink, _INF)
        for x in self.adj:
            self.adj[x].sort()
        self.orig = dict(self.cap)

    def _arc(self, x: int, y: int, c: int) -> None:
        self.cap[(x, y)] = c
        self.cap.setdefault((y, x), 0)
        self.adj[x].append(y)
        self.adj[y].append(x)

    def max_flow(self, limit: int | None = None) -> int:
        total = 0
        while limit is None or total < limit:
            prev = self._augmenting_path()
            if prev is None:
                break
            x = self.sink
            while x != self.source:
                p = prev[x]
                self.cap[(p, x)] -= 1
                self.cap[(x, p)] += 1
                x = p
            total += 1
        return total

    def _augmenting_path(self) -> dict[int, int] | None:
        prev = {self.source: self.source}
        frontier = [self.source]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if y not in prev and self.cap[(x, y)] > 0:
                        prev[y] = x
                        if y == self.sink:
                            return prev
                        nxt.append(y)
            frontier = nxt
        return None

    def paths(self) -> list[tuple[int, ...]]:
        """Decompose the flow into vertex-id paths, one per unit.

        Walks from the source choosing the least next node with
        remaining flow; conservation guarantees each walk ends at the
        sink. Any flow cycle the walk wanders through is spliced out,
        so results are simple paths.
        """
        flow = {arc: c0 - self.cap[arc] for arc, c0 in self.orig.items() if c0 > self.cap[arc]}
        out: list[tuple[int, ...]] = []
        while True:
            starts = sorted(y for y in self.adj[self.source] if flow.get((self.source, y), 0) > 0)
            if not starts:
                return out
            x = starts[0]
            flow[(self.source, x)] -= 1
            nodes = [x]
            while x != self.sink:
                y = min(y for y in self.adj[x] if flow.get((x, y), 0) > 0)
                flow[(x, y)] -= 1
                nodes.append(y)
                x = y
            verts: list[int] = []
            for nd in nodes[:-1]:
                v = self.vertex[nd // 2]
                if not verts or verts[-1] != v:
                    if v in verts:
                        del verts[verts.index(v) + 1 :]
                    else:
                        verts.append(v)
            out.append(tuple(verts))

    def cut_vertices(self) -> frozenset[int]:
        """Vertices whose through-arcs form the sink-side minimum cut.

        Run only after max_flow with unbounded edge arcs; asserts every
        crossing arc is a through-arc.
        """
        side = {self.sink}
        frontier = [self.sink]
        while frontier:
            nxt = []
            for y in frontier:
                for x in self.adj[y]:
                    if x not in side and self.cap[(x, y)] > 0:
                        side.add(x)
                        nxt.append(x)
            frontier = nxt
        cut: set[int] = set()
        for (x, y), c0 in self.orig.items():
            if c0 > 0 and x not in side and y in side:
                if y != x + 1 or x % 2 != 0:
                    raise AssertionError(f"minimum cut crosses non-through arc {(x, y)}")
                cut.add(self.vertex[x // 2])
        return frozenset(cut)


def _check_pair(g: Graph, v: int, w: int) -> None:
    if v == w:
        raise ValueError(f"endpoints must differ, got {v} twice")
    for x in (v, w):
        if x not in g:
            raise ValueError(f"vertex {x} not in graph")


def kappa(g: Graph, v: int, w: int) -> int:
    """Largest number of independent v-w paths.

    Paths are independent when they share no vertex other than v and w;
    a direct v-w edge counts as one member of the family.
    """
    return len(max_independent_paths(g, v, w))


def max_independent_paths(g: Graph, v: int, w: int) -> PathFamily:
    """Canonical maximum family of independent v-w paths.

    The family is a deterministic function of the graph: augmentation
    and decomposition break ties by least id, then the paths are sorted
    by vertex sequence. Index 1 is the lexicographically least path.
    Returns the empty family when v and w are in different components.
    """
    _check_pair(g, v, w)
    net = _FlowNet(g, frozenset({v}), frozenset({w}), g.vertex_set - {v, w}, edge_cap=1)
    net.max_flow()
    return PathFamily(v, w, tuple(Path(seq) for seq in sorted(net.paths())))


def _check_sides(g: Graph, a: frozenset[int], b: frozenset[int]) -> None:
    if not a or not b:
        raise ValueError("both sides must be nonempty")
    if not a <= g.vertex_set or not b <= g.vertex_set:
        raise ValueError("sides must be subsets of the graph")


def min_separator(
    g: Graph, a: frozenset[int] | set[int], b: frozenset[int] | set[int]
) -> Separator:
    """Minimum vertex set disjoint from a and b meeting every a-b path.

    |S| equals the maximum number of a-b paths with pairwise disjoint
    interiors outside a ∪ b. Raises InseparableError when an edge joins
    a directly to b, since then no separator avoiding both sides exists.
    """
    a = frozenset(a)
    b = frozenset(b)
    _check_sides(g, a, b)
    if a & b:
        raise ValueError(f"sides overlap on {sorted(a & b)}")
    for u in sorted(a):
        for x in g.neighbors(u):
            if x in b:
                raise InseparableError(f"edge {u}-{x} joins the two sides directly")
    net = _FlowNet(g, a, b, g.vertex_set - a - b, edge_cap=_INF)
    net.max_flow()
    return Separator(net.cut_vertices(), a, b)


def min_blocking_set(
    g: Graph, a: frozenset[int] | set[int], b: frozenset[int] | set[int]
) -> Separator:
    """Minimum vertex set meeting every a-b path, endpoints included.

    Unlike min_separator, the blocking set may contain vertices of a or
    b, so one always exists: sides may overlap or be joined by an edge,
    and any shared vertex is forced into the result. A single vertex
    counts as a path from itself to itself, which is what makes
    blocking sets the right notion for separating a probe set from a
    structure it touches.
    """
    a = frozenset(a)
    b = frozenset(b)
    _check_sides(g, a, b)
    net = _FlowNet(g, a, b, g.vertex_set, edge_cap=_INF)
    net.max_flow()
    return Separator(net.cut_vertices(), a, b)
