"""Normal-tree constructions.

The central routine is a greedy loop that grows a normal tree from a
root one sweep at a time. In sweep n it looks at every component D of
the graph minus the current tree, picks target vertices inside D by
consulting canonical independent-path families between the tree
neighbors of D, and extends the tree finitely into D so the targets
become tree vertices. Three public entry points share the loop: the
plain spanning run, a run that only chases a prescribed vertex set, and
a run that additionally covers one vertex of the first cover class
meeting each component. Every tie is broken by least vertex id, so runs
are reproducible and the returned trace replays exactly.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .connectivity import PathFamily, max_independent_paths
from .graph import Graph, components, induced_subgraph, is_connected, neighborhood
from .tree import RootedTree, down_closure, is_chain

logger = logging.getLogger(__name__)

SPANNING = "spanning"
BUDGET_EXHAUSTED = "budget-exhausted"
TARGET_COVERED = "target-covered"


@dataclass(frozen=True)
class ExtensionStep:
    """One extension of the tree into one component.

    step is the sweep index; extensions made during the same sweep
    share it. selections lists ((v, w), k) meaning path k of the
    canonical v-w family was the least-index member meeting the
    component. fallback_vertex is set when no selected path met the
    component and the least component vertex was targeted instead.
    added holds the new (child, parent) tree edges, so any prefix of a
    trace reconstructs its tree.
    """

    step: int
    component: frozenset[int]
    attach_vertex: int
    entry_vertex: int
    targets: frozenset[int]
    selections: tuple[tuple[tuple[int, int], int], ...]
    fallback_vertex: int | None
    added: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RunTrace:
    steps: tuple[ExtensionStep, ...]
    tree: RootedTree
    status: str

    def prefix_tree(self, count: int) -> RootedTree:
        """Tree after the first `count` extensions."""
        parent: dict[int, int] = {}
        for s in self.steps[:count]:
            parent.update(s.added)
        return RootedTree(self.tree.root, parent)


@dataclass(frozen=True)
class DispersedCover:
    """Ordered list of vertex sets whose union covers the host graph."""

    sets: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def dfs_nst(g: Graph, r: int) -> RootedTree:
    """Depth-first spanning tree from r, children in ascending id order.

    Depth-first trees are always normal: any edge of the graph joins an
    ancestor-descendant pair.
    """
    if r not in g:
        raise ValueError(f"root {r} not in graph")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    parent: dict[int, int] = {}
    seen: set[int] = set()
    stack: list[tuple[int, int | None]] = [(r, None)]
    while stack:
        x, p = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        if p is not None:
            parent[x] = p
        for y in reversed(g.neighbors(x)):
            if y not in seen:
                stack.append((y, x))
    return RootedTree(r, parent)


def jung_subtree(g: Graph, c: Iterable[int], r: int) -> RootedTree:
    """Normal spanning tree of the induced subgraph on c, rooted at r."""
    c = frozenset(c)
    if r not in c:
        raise ValueError(f"root {r} not in the vertex set")
    sub = induced_subgraph(g, c)
    if not is_connected(sub):
        raise ValueError("vertex set induces a disconnected subgraph")
    return dfs_nst(sub, r)


def attach(g: Graph, t: RootedTree, c: Iterable[int], subtree: RootedTree) -> RootedTree:
    """Hang a normal spanning tree of component c below the deepest tree
    neighbor of c.

    The subtree's root must be adjacent to that neighbor; the combined
    tree is normal on vertices(t) ∪ c whenever t was normal and the
    neighborhood of c is a chain.
    """
    c = frozenset(c)
    if c not in components(g, t.vertex_set):
        raise ValueError("c is not a component of the graph minus the tree")
    nbrs = neighborhood(g, c, t.vertex_set)
    if not nbrs:
        raise ValueError("component has no neighbor in the tree")
    if not is_chain(t, nbrs):
        raise ValueError("tree neighborhood of the component is not a chain")
    if subtree.vertex_set != c:
        raise ValueError("subtree does not span the component")
    for u, v in subtree.edges():
        if not g.has_edge(u, v):
            raise ValueError(f"subtree edge {u}-{v} is not an edge of the graph")
    t_c = max(nbrs, key=t.depth)
    if not g.has_edge(t_c, subtree.root):
        raise ValueError(
            f"subtree root {subtree.root} is not adjacent to attachment vertex {t_c}"
        )
    parent = t.parent_map
    parent.update(subtree.parent_map)
    parent[subtree.root] = t_c
    return RootedTree(t.root, parent)


def extend_into_component(
    g: Graph, t: RootedTree, d: Iterable[int], targets: Iterable[int]
) -> RootedTree:
    """Grow t finitely into component d until it contains the targets.

    The extension enters d at the least-id neighbor of the deepest tree
    neighbor of d, builds a normal spanning tree of d from there, and
    keeps only the down-closures of the targets. Keeping a down-closed
    subtree preserves normality, and pruning keeps the growth finite in
    spirit even though everything here is finite anyway.
    """
    d = frozenset(d)
    targets = frozenset(targets)
    if d not in components(g, t.vertex_set):
        raise ValueError("d is not a component of the graph minus the tree")
    if not targets:
        raise ValueError("targets must be nonempty; substitute the least vertex of d")
    if not targets <= d:
        raise ValueError(f"targets outside the component: {sorted(targets - d)}")
    nbrs = neighborhood(g, d, t.vertex_set)
    _, _, t2, _ = _extend(g, t, d, nbrs, targets)
    return t2


def _extend(
    g: Graph,
    t: RootedTree,
    d: frozenset[int],
    nbrs: frozenset[int],
    targets: frozenset[int],
) -> tuple[int, int, RootedTree, tuple[tuple[int, int], ...]]:
    if not nbrs:
        raise ValueError("component has no neighbor in the tree")
    if not is_chain(t, nbrs):
        raise ValueError(
            "tree neighborhood of the component is not a chain (tree is not normal)"
        )
    t_d = max(nbrs, key=t.depth)
    r_d = min(x for x in g.neighbors(t_d) if x in d)
    full = dfs_nst(induced_subgraph(g, d), r_d)
    keep: set[int] = set()
    for x in targets | {r_d}:
        keep |= down_closure(full, x)
    parent = t.parent_map
    added = {r_d: t_d}
    for v, p in full.parent_map.items():
        if v in keep:
            added[v] = p
    parent.update(added)
    t2 = RootedTree(t.root, parent)
    return t_d, r_d, t2, tuple(sorted(added.items()))


def omega_nst(
    g: Graph,
    r: int,
    step_budget: int | None = None,
    kappa_small: int | None = None,
) -> RunTrace:
    """Grow a normal spanning tree by sweeps of path-guided extensions.

    Sweep n extends into every component D of the graph minus the
    current tree: for each pair v < w of tree neighbors of D, the
    least-index member of the canonical v-w path family meeting D
    contributes its vertices inside D as targets (least component
    vertex as fallback when nothing is selected). Stops when spanning
    or after step_budget sweeps. kappa_small, when given, ignores
    pairs whose connectivity exceeds it.
    """
    return _run(g, r, step_budget, kappa_small, skip=None, extra_target=None, goal=None)


def local_normal_tree(
    g: Graph,
    u: Iterable[int],
    r: int,
    step_budget: int | None = None,
    kappa_small: int | None = None,
) -> RunTrace:
    """Grow a normal tree just far enough to contain the vertex set u.

    Same sweep loop as omega_nst, but components disjoint from u are
    left alone and each extension additionally targets the least
    uncovered u-vertex of its component. Ends target-covered once
    u is inside the tree (spanning when that coincides with all of g).
    """
    u = frozenset(u)
    if not u <= g.vertex_set:
        raise ValueError(f"target vertices not in graph: {sorted(u - g.vertex_set)}")
    return _run(
        g,
        r,
        step_budget,
        kappa_small,
        skip=lambda d: not (u & d),
        extra_target=lambda d: min(u & d),
        goal=lambda covered: u <= covered,
    )


def nst_from_dispersed_cover(
    g: Graph,
    cover: DispersedCover,
    r: int,
    step_budget: int | None = None,
    kappa_small: int | None = None,
) -> RunTrace:
    """omega_nst variant that respects an ordered vertex-set cover.

    Each extension into a component D additionally targets the least
    vertex of D ∩ V_i for the first cover class V_i meeting D.
    """
    stray = [sorted(s - g.vertex_set) for s in cover.sets if not s <= g.vertex_set]
    if stray:
        raise ValueError(f"cover contains vertices outside the graph: {stray[0]}")
    union = frozenset().union(*cover.sets) if cover.sets else frozenset()
    if union != g.vertex_set:
        raise ValueError(f"cover misses vertices: {sorted(g.vertex_set - union)}")

    def first_class_target(d: frozenset[int]) -> int:
        for s in cover.sets:
            if s & d:
                return min(s & d)
        raise AssertionError("cover validated to span the graph")

    return _run(g, r, step_budget, kappa_small, skip=None, extra_target=first_class_target, goal=None)


def levels_of(t: RootedTree) -> DispersedCover:
    """Distance classes from the root, V_0 = {root} first.

    Levels of a normal tree are antichains: two vertices at the same
    depth are never ancestor and descendant.
    """
    by_depth: dict[int, set[int]] = {}
    for v in t.vertices:
        by_depth.setdefault(t.depth(v), set()).add(v)
    return DispersedCover(tuple(frozenset(by_depth[d]) for d in sorted(by_depth)))


def _run(
    g: Graph,
    r: int,
    step_budget: int | None,
    kappa_small: int | None,
    skip: Callable[[frozenset[int]], bool] | None,
    extra_target: Callable[[frozenset[int]], int] | None,
    goal: Callable[[frozenset[int]], bool] | None,
) -> RunTrace:
    if r not in g:
        raise ValueError(f"root {r} not in graph")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if step_budget is not None and step_budget < 0:
        raise ValueError(f"step budget must be non-negative, got {step_budget}")

    families: dict[tuple[int, int], PathFamily | None] = {}

    def family(v: int, w: int) -> PathFamily | None:
        # frozen on first use; the selection indices in the trace refer
        # to this enumeration
        key = (v, w)
        if key not in families:
            fam = max_independent_paths(g, v, w)
            families[key] = None if kappa_small is not None and len(fam) > kappa_small else fam
        return families[key]

    t = RootedTree(r)
    steps: list[ExtensionStep] = []
    sweep = 0
    while True:
        if t.vertex_set == g.vertex_set:
            return RunTrace(tuple(steps), t, SPANNING)
        if goal is not None and goal(t.vertex_set):
            return RunTrace(tuple(steps), t, TARGET_COVERED)
        if step_budget is not None and sweep >= step_budget:
            return RunTrace(tuple(steps), t, BUDGET_EXHAUSTED)
        # extending into one component never changes another component
        # or its tree neighborhood, so the sweep may mutate t freely
        comps = components(g, t.vertex_set)
        if skip is not None:
            comps = [d for d in comps if not skip(d)]
        for d in comps:
            nbrs = sorted(neighborhood(g, d, t.vertex_set))
            selections: list[tuple[tuple[int, int], int]] = []
            targets: set[int] = set()
            for i, v in enumerate(nbrs):
                for w in nbrs[i + 1 :]:
                    fam = family(v, w)
                    if fam is None:
                        continue
                    for k in range(1, len(fam) + 1):
                        inside = set(fam[k].vertices) & d
                        if inside:
                            selections.append(((v, w), k))
                            targets |= inside
                            logger.debug(
                                "sweep %d: pair (%d,%d) path %d meets component %s",
                                sweep, v, w, k, sorted(d),
                            )
                            break
            if extra_target is not None:
                targets.add(extra_target(d))
            fallback = None
            if not targets:
                fallback = min(d)
                targets.add(fallback)
            t_d, r_d, t, added = _extend(g, t, d, frozenset(nbrs), frozenset(targets))
            steps.append(
                ExtensionStep(
                    step=sweep,
                    component=d,
                    attach_vertex=t_d,
                    entry_vertex=r_d,
                    targets=frozenset(targets),
                    selections=tuple(selections),
                    fallback_vertex=fallback,
                    added=added,
                )
            )
            logger.info(
                "sweep %d: extended at %d into component %s, entry %d, %d targets",
                sweep, t_d, sorted(d), r_d, len(targets),
            )
        sweep += 1
