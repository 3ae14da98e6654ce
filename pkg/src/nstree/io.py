"""Reading and writing graphs, trees, traces, and certificates.

All JSON emitted here is deterministic: containers are sorted and dumps
use sorted keys, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

from .construct import DispersedCover, RunTrace
from .fattk import DispersednessVerdict, FatTKCertificate, FatTKFailure
from .graph import Graph
from .tree import RootedTree


def graph_to_obj(g: Graph) -> dict[str, Any]:
    return {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges],
    }


def graph_from_obj(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ValueError('graph JSON must be an object with "vertices" and "edges"')
    vertices = obj["vertices"]
    edges = obj["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, int) for v in vertices):
        raise ValueError("graph vertices must be a list of integers")
    if not isinstance(edges, list):
        raise ValueError("graph edges must be a list of pairs")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"bad edge entry {e!r}; expected [u, v]")
        pairs.append((e[0], e[1]))
    return Graph(vertices, pairs)


def graph_from_edge_list(text: str) -> Graph:
    """Plain text: one edge "u v" per line; a lone id is an isolated vertex."""
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(ids) == 1:
            vertices.append(ids[0])
        elif len(ids) == 2:
            edges.append((ids[0], ids[1]))
        else:
            raise ValueError(f"line {lineno}: expected 'u v' or a lone vertex, got {raw!r}")
    return Graph(vertices, edges)


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges]
    covered = {x for e in g.edges for x in e}
    lines.extend(str(v) for v in g.vertices if v not in covered)
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> Graph:
    """Parse a graph from JSON or from the edge-list format, sniffing."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from None
        return graph_from_obj(obj)
    return graph_from_edge_list(text)


def graph_to_dot(g: Graph) -> str:
    lines = ["graph {"]
    covered = {x for e in g.edges for x in e}
    for v in g.vertices:
        if v not in covered:
            lines.append(f'  "{v}";')
    for u, v in g.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_obj(t: RootedTree) -> dict[str, Any]:
    return {
        "root": t.root,
        "parent": {str(v): p for v, p in sorted(t.parent_map.items())},
    }


def tree_from_obj(obj: Any) -> RootedTree:
    if not isinstance(obj, dict) or "root" not in obj or "parent" not in obj:
        raise ValueError('tree JSON must be an object with "root" and "parent"')
    root = obj["root"]
    if not isinstance(root, int):
        raise ValueError("tree root must be an integer")
    parent_obj = obj["parent"]
    if not isinstance(parent_obj, dict):
        raise ValueError("tree parent must map child ids to parent ids")
    parent: dict[int, int] = {}
    for k, p in parent_obj.items():
        try:
            child = int(k)
        except ValueError:
            raise ValueError(f"bad child id {k!r} in parent map") from None
        if not isinstance(p, int):
            raise ValueError(f"bad parent {p!r} for child {k}")
        parent[child] = p
    return RootedTree(root, parent)


def loads_tree(text: str) -> RootedTree:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return tree_from_obj(obj)


def tree_to_dot(t: RootedTree, g: Graph | None = None) -> str:
    """Tree edges solid; when the host graph is given, its remaining
    edges between tree vertices appear dashed."""
    lines = ["graph {", f'  "{t.root}" [shape=doublecircle];']
    tree_edges = set(t.edges())
    for u, v in sorted(tree_edges):
        lines.append(f'  "{u}" -- "{v}";')
    if g is not None:
        for u, v in g.edges:
            if u in t and v in t and (u, v) not in tree_edges:
                lines.append(f'  "{u}" -- "{v}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_to_obj(trace: RunTrace) -> dict[str, Any]:
    return {
        "status": trace.status,
        "tree": tree_to_obj(trace.tree),
        "steps": [
            {
                "step": s.step,
                "component": sorted(s.component),
                "attach": s.attach_vertex,
                "entry": s.entry_vertex,
                "targets": sorted(s.targets),
                "selections": [
                    {"pair": list(pair), "index": k} for pair, k in s.selections
                ],
                "fallback": s.fallback_vertex,
                "added": [list(e) for e in s.added],
            }
            for s in trace.steps
        ],
    }


def cert_to_obj(cert: FatTKCertificate) -> dict[str, Any]:
    return {
        "branch": list(cert.branch),
        "m": cert.m,
        "paths": {
            f"{a},{b}": [list(p) for p in cert.paths_for(a, b)]
            for a, b in cert.pair_keys()
        },
    }


def cert_from_obj(obj: Any) -> FatTKCertificate:
    if not isinstance(obj, dict) or not {"branch", "m", "paths"} <= set(obj):
        raise ValueError('certificate JSON needs "branch", "m" and "paths"')
    branch = obj["branch"]
    m = obj["m"]
    if not isinstance(branch, list) or not all(isinstance(v, int) for v in branch):
        raise ValueError("certificate branch must be a list of integers")
    if not isinstance(m, int):
        raise ValueError("certificate m must be an integer")
    paths: dict[tuple[int, int], list[list[int]]] = {}
    if not isinstance(obj["paths"], dict):
        raise ValueError("certificate paths must map pair keys to path lists")
    for key, plist in obj["paths"].items():
        try:
            a, b = (int(x) for x in key.split(","))
        except ValueError:
            raise ValueError(f'bad pair key {key!r}; expected "a,b"') from None
        if not isinstance(plist, list) or not all(
            isinstance(p, list) and all(isinstance(x, int) for x in p) for p in plist
        ):
            raise ValueError(f"paths for {key} must be lists of integer lists")
        paths[(a, b)] = plist
    return FatTKCertificate(branch, m, paths)


def loads_cert(text: str) -> FatTKCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return cert_from_obj(obj)


def failure_to_obj(failure: FatTKFailure) -> dict[str, Any]:
    return {
        "found": False,
        "pair": list(failure.pair),
        "routed": failure.routed,
        "separator": sorted(failure.separator),
    }


def verdict_to_obj(verdict: DispersednessVerdict) -> dict[str, Any]:
    return {
        "dispersed": verdict.dispersed,
        "bound": verdict.bound,
        "examined": [
            {"certificate": cert_to_obj(cert), "separator": sorted(sep)}
            for cert, sep in verdict.examined
        ],
    }


def cover_from_obj(obj: Any) -> DispersedCover:
    """Accept either a bare list of vertex lists or {"cover": [...]}."""
    if isinstance(obj, dict):
        obj = obj.get("cover")
    if not isinstance(obj, list) or not all(
        isinstance(s, list) and all(isinstance(v, int) for v in s) for s in obj
    ):
        raise ValueError("cover must be a list of integer lists")
    return DispersedCover(tuple(frozenset(s) for s in obj))


def loads_cover(text: str) -> DispersedCover:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return cover_from_obj(obj)


def cover_to_obj(cover: DispersedCover) -> dict[str, Any]:
    return {"levels": [sorted(s) for s in cover.sets]}


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
