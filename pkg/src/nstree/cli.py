"""Command-line front end.

One subcommand per library operation. Graphs come from a file
(--input, JSON or edge-list) or from a built-in generator truncation
(--gen NAME --radius K). Results are printed as deterministic JSON, or
DOT where --format dot makes sense. Exit status: 0 on success, 1 when
a checked property fails to hold (non-normal tree, invalid or missing
certificate, not dispersed, inseparable sides), 2 on input errors.

The NTK_LOG environment variable controls construction logging:
off (default), steps (one line per extension), full (per-pair
selection detail).
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys

from . import io
from .connectivity import InseparableError, max_independent_paths, min_separator
from .construct import dfs_nst, levels_of, local_normal_tree, nst_from_dispersed_cover, omega_nst
from .fattk import FatTKFailure, find_fat_tk, is_dispersed, verify_fat_tk
from .generators import BUILTIN_GENERATORS, make_generator, truncate
from .graph import Graph
from .tree import is_normal

_GEN_WITH_ARGS = re.compile(r"^fat-tk-gen\((\d+),(\d+)\)$")


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _setup_logging() -> None:
    level = {"off": logging.WARNING, "steps": logging.INFO, "full": logging.DEBUG}
    mode = os.environ.get("NTK_LOG", "off")
    if mode not in level:
        print(f"warning: unknown NTK_LOG value {mode!r}, using off", file=sys.stderr)
        mode = "off"
    logging.basicConfig(level=level[mode], format="%(message)s", stream=sys.stderr)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nstree",
        description="Normal spanning trees, tree orders, vertex connectivity, "
        "and fat-TK certificates on finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_graph(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--input", help="graph file, JSON or edge-list")
        p.add_argument("--gen", help="built-in generator name (see gen-list)")
        p.add_argument("--radius", type=int, help="truncation radius for --gen")
        return p

    p = with_graph(sub.add_parser("nst", help="depth-first normal spanning tree"))
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    for name, help_text in (
        ("omega", "path-guided normal spanning tree construction"),
        ("local", "normal tree covering a prescribed vertex set"),
        ("cover-nst", "normal spanning tree guided by an ordered cover"),
    ):
        p = with_graph(sub.add_parser(name, help=help_text))
        p.add_argument("--root", type=int, required=True)
        p.add_argument("--budget", type=int, help="maximum number of sweeps")
        p.add_argument("--kappa-small", type=int, dest="kappa_small",
                       help="ignore vertex pairs with connectivity above this")
        p.add_argument("--format", choices=("json", "dot"), default="json")
        if name == "local":
            p.add_argument("--targets", required=True, help="comma-separated vertex ids")
        if name == "cover-nst":
            p.add_argument("--cover", required=True, help="JSON file with the cover sets")

    p = sub.add_parser("levels", help="root-distance classes of a tree")
    p.add_argument("--tree", required=True, help="tree JSON file")

    p = with_graph(sub.add_parser("check-normal", help="is the tree normal in the graph?"))
    p.add_argument("--tree", required=True, help="tree JSON file")

    p = with_graph(sub.add_parser("kappa", help="independent-path count and family"))
    p.add_argument("--pair", nargs=2, type=int, required=True, metavar=("V", "W"))

    p = with_graph(sub.add_parser("separator", help="minimum separator between vertex sets"))
    p.add_argument("--a", required=True, help="comma-separated vertex ids")
    p.add_argument("--b", required=True, help="comma-separated vertex ids")

    p = with_graph(sub.add_parser("fat-tk-find", help="greedy fat TK(n,m) search"))
    p.add_argument("--branch", required=True, help="comma-separated branch vertex ids")
    p.add_argument("--m", type=int, required=True, help="paths per branch pair")

    p = with_graph(sub.add_parser("fat-tk-verify", help="check a claimed certificate"))
    p.add_argument("--cert", required=True, help="certificate JSON file")

    p = with_graph(sub.add_parser("dispersed", help="bounded dispersedness check"))
    p.add_argument("--probe", required=True, help="comma-separated vertex ids")
    p.add_argument("--n", type=int, required=True, help="branch vertex count")
    p.add_argument("--m", type=int, required=True, help="paths per branch pair")
    p.add_argument("--s", type=int, required=True, help="separator size bound")
    p.add_argument("--search-budget", type=int, default=100, dest="search_budget")

    sub.add_parser("gen-list", help="list built-in generators")
    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "input", None) and getattr(args, "gen", None):
        raise ValueError("give either --input or --gen, not both")
    if getattr(args, "input", None):
        return io.loads_graph(_read(args.input))
    if getattr(args, "gen", None):
        if args.radius is None:
            raise ValueError("--gen requires --radius")
        m = _GEN_WITH_ARGS.match(args.gen)
        if m:
            gen = make_generator("fat-tk-gen", int(m.group(1)), int(m.group(2)))
        else:
            gen = make_generator(args.gen)
        return truncate(gen, args.radius)
    raise ValueError("no graph given; use --input or --gen with --radius")


def _ids(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _cmd_nst(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    t = dfs_nst(g, args.root)
    if args.format == "dot":
        _emit(io.tree_to_dot(t, g))
    else:
        _emit(io.dumps(io.tree_to_obj(t)))
    return 0


def _cmd_omega(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    trace = omega_nst(g, args.root, step_budget=args.budget, kappa_small=args.kappa_small)
    return _emit_trace(trace, g, args.format)


def _cmd_local(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    trace = local_normal_tree(
        g, _ids(args.targets), args.root, step_budget=args.budget, kappa_small=args.kappa_small
    )
    return _emit_trace(trace, g, args.format)


def _cmd_cover_nst(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    cover = io.loads_cover(_read(args.cover))
    trace = nst_from_dispersed_cover(
        g, cover, args.root, step_budget=args.budget, kappa_small=args.kappa_small
    )
    return _emit_trace(trace, g, args.format)


def _emit_trace(trace, g: Graph, fmt: str) -> int:
    if fmt == "dot":
        _emit(io.tree_to_dot(trace.tree, g))
    else:
        _emit(io.dumps(io.trace_to_obj(trace)))
    return 0


def _cmd_levels(args: argparse.Namespace) -> int:
    t = io.loads_tree(_read(args.tree))
    _emit(io.dumps(io.cover_to_obj(levels_of(t))))
    return 0


def _cmd_check_normal(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    t = io.loads_tree(_read(args.tree))
    report = is_normal(g, t)
    obj = {"normal": report.normal}
    if report.witness is not None:
        u, v, path = report.witness
        obj["witness"] = {"ends": [u, v], "path": list(path)}
    else:
        obj["witness"] = None
    _emit(io.dumps(obj))
    return 0 if report.normal else 1


def _cmd_kappa(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    v, w = args.pair
    fam = max_independent_paths(g, v, w)
    _emit(io.dumps({"kappa": len(fam), "paths": [list(p.vertices) for p in fam]}))
    return 0


def _cmd_separator(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    try:
        sep = min_separator(g, frozenset(_ids(args.a)), frozenset(_ids(args.b)))
    except InseparableError as exc:
        _emit(io.dumps({"inseparable": True, "reason": str(exc), "separator": None}))
        return 1
    _emit(io.dumps({"separator": sorted(sep.s), "size": len(sep.s)}))
    return 0


def _cmd_fat_tk_find(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    found = find_fat_tk(g, _ids(args.branch), args.m)
    if isinstance(found, FatTKFailure):
        _emit(io.dumps(io.failure_to_obj(found)))
        return 1
    _emit(io.dumps(io.cert_to_obj(found)))
    return 0


def _cmd_fat_tk_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    cert = io.loads_cert(_read(args.cert))
    report = verify_fat_tk(g, cert)
    _emit(io.dumps({"ok": report.ok, "reason": report.reason}))
    return 0 if report.ok else 1


def _cmd_dispersed(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    verdict = is_dispersed(
        g, _ids(args.probe), args.n, args.m, args.s, search_budget=args.search_budget
    )
    _emit(io.dumps(io.verdict_to_obj(verdict)))
    return 0 if verdict.dispersed else 1


def _cmd_gen_list(args: argparse.Namespace) -> int:
    names = sorted(BUILTIN_GENERATORS)
    names[names.index("fat-tk-gen")] = "fat-tk-gen(n,m)"
    _emit(io.dumps({"generators": names}))
    return 0


_HANDLERS = {
    "nst": _cmd_nst,
    "omega": _cmd_omega,
    "local": _cmd_local,
    "cover-nst": _cmd_cover_nst,
    "levels": _cmd_levels,
    "check-normal": _cmd_check_normal,
    "kappa": _cmd_kappa,
    "separator": _cmd_separator,
    "fat-tk-find": _cmd_fat_tk_find,
    "fat-tk-verify": _cmd_fat_tk_verify,
    "dispersed": _cmd_dispersed,
    "gen-list": _cmd_gen_list,
}


if __name__ == "__main__":
    sys.exit(main())
