"""Command-line front end.

Commands: gen, color, verify, exact, formula, table. JSON documents go to
standard output (``table`` writes TSV). Exit codes: 0 success, 1 failed
verification or a contradicted formula, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .constructions import (
    Construction,
    NotCoveredError,
    color_bipartite,
    color_k2t,
    color_k3t,
    color_kst_alternating,
    color_multipartite,
    color_star,
    color_traceable,
)
from .graph import (
    FamilySpec,
    FormatError,
    Graph,
    deserialize,
    family_of,
    coloring_from_dict,
    serialize,
)
from .search import ProperTreeSearch, is_k_proper
from .solver import (
    count_classes,
    exact_px_k,
    exists_k_proper_coloring,
    pigeonhole_lower_bound_k2t,
    pxk_bounds,
    px3_formula,
)

SLOW_CLASSES = 2000


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")


def _family_from_args(args) -> FamilySpec:
    kind = args.family
    if kind is None:
        raise UsageError("give --family or --graph")
    try:
        if kind == "star":
            return FamilySpec("star", (_need(args.t, "--t"),))
        if kind == "bipartite":
            return FamilySpec("bipartite", (_need(args.s, "--s"), _need(args.t, "--t")))
        if kind == "multipartite":
            return FamilySpec("multipartite", tuple(_need(args.parts, "--parts")))
        return FamilySpec(kind, (_need(args.n, "--n"),))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this family")
    return value


def _read_doc(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args) -> tuple[Graph, object]:
    """Graph (and coloring, if the document has one) from --graph or the family flags."""
    if getattr(args, "graph", None):
        try:
            return deserialize(_read_doc(args.graph))
        except FormatError as exc:
            raise UsageError(str(exc)) from None
    fam = _family_from_args(args)
    try:
        return fam.build(), None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _construct(graph: Graph, fam: FamilySpec, k: int) -> Construction:
    if fam.kind == "star":
        return color_star(fam.params[0])
    if fam.kind == "bipartite":
        return color_bipartite(*fam.params, k=k)
    if fam.kind == "multipartite":
        if len(fam.params) == 2:
            return color_bipartite(*fam.params, k=k)
        return color_multipartite(fam.params, k=k)
    if fam.kind in ("path", "cycle"):
        return color_traceable(graph, list(range(graph.n)), k=k)
    raise NotCoveredError("no construction for custom graphs")


def _print(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


# ---------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    graph = _family_from_args(args)
    try:
        g = graph.build()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(serialize(g) + "\n")
    return 0


def cmd_color(args) -> int:
    if args.graph:
        graph, _ = _load_graph(args)
        fam = family_of(graph)
    else:
        fam = _family_from_args(args)
        try:
            graph = fam.build()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        con = _construct(graph, fam, args.k)
    except (NotCoveredError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(con.to_json() + "\n")
    return 0


def cmd_verify(args) -> int:
    graph, coloring = _load_graph(args)
    if args.coloring:
        try:
            doc = json.loads(_read_doc(args.coloring))
        except json.JSONDecodeError as exc:
            raise UsageError(f"coloring is not valid JSON: {exc}") from None
        try:
            coloring = coloring_from_dict(doc, graph)
        except FormatError as exc:
            raise UsageError(str(exc)) from None
    if coloring is None:
        raise UsageError("no coloring given (document without 'colors' and no --coloring)")
    if args.set:
        try:
            w = ProperTreeSearch(graph, coloring).find(args.set)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        doc = {"ok": w is not None}
        if w is None:
            doc["failing_set"] = sorted(set(args.set))
        else:
            doc["witness_edges"] = [list(e) for e in w.edge_pairs(graph)]
        _print(doc)
        return 0 if w is not None else 1
    try:
        report = is_k_proper(graph, coloring, args.k, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _print(report.to_dict())
    return 0 if report.ok else 1


def cmd_exact(args) -> int:
    graph, _ = _load_graph(args)
    try:
        res = exact_px_k(
            graph,
            args.k,
            max_colors=args.max_colors,
            strategy=args.strategy,
            use_constructions=not args.no_constructions,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _print(res.to_dict())
    return 0


def cmd_formula(args) -> int:
    fam = _family_from_args(args)
    try:
        if args.k == 3:
            _print(px3_formula(fam))
            return 0
        bounds = pxk_bounds(fam, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if bounds is None:
        _print(None)
    elif bounds[0] == bounds[1]:
        _print(bounds[0])
    else:
        _print({"lo": bounds[0], "hi": bounds[1]})
    return 0


def _table_rows(args):
    """(FamilySpec, construction builder, k) for each requested parameter choice."""
    th = args.theorem
    if th == 3:
        for t in args.t or range(2, 21):
            yield FamilySpec("bipartite", (2, t)), lambda t=t: color_k2t(t), 3
    elif th == 4:
        for t in args.t or range(3, 17):
            yield FamilySpec("bipartite", (3, t)), lambda t=t: color_k3t(t), 3
    elif th == 5:
        for s in args.s or range(4, 6):
            for t in args.t or range(4, 9):
                if t >= s:
                    yield FamilySpec("bipartite", (s, t)), lambda s=s, t=t: color_kst_alternating(s, t, 3), 3
    elif th == 8:
        groups = args.parts
        if not groups:
            ts = args.t or range(1, 9)
            groups = [(1, 1, t) for t in ts] + [(1, 2, t) for t in ts if t >= 2]
            groups += [(1, 1, 1, t) for t in ts] + [(2, 2, 2), (1, 2, 3), (2, 3, 4)]
        for p in groups:
            yield FamilySpec("multipartite", tuple(p)), lambda p=p: color_multipartite(p, 3), 3
    elif th == 11:
        k = (args.k or [4])[0]
        for s in args.s or [2 * (k - 1)]:
            for t in args.t or range(s, s + 3):
                if t >= s:
                    yield FamilySpec("bipartite", (s, t)), lambda s=s, t=t, k=k: color_kst_alternating(s, t, k), k
    else:
        raise UsageError(f"unknown theorem {th}; choose from 3, 4, 5, 8, 11")


def _lower_status(graph: Graph, fam: FamilySpec, k: int, value: int, allow_slow: bool, jobs: int):
    """Describe (and run, within budget) the refutation of value - 1 colors."""
    m = value - 1
    if m < 1:
        return "none-needed", True
    if fam.kind == "bipartite" and fam.params[0] == 2 and k == 3 and pigeonhole_lower_bound_k2t(fam.params[1], m):
        return f"pigeonhole m={m}", True
    strategy = "code-multiset"
    budget = count_classes(graph, m, strategy)
    if budget > SLOW_CLASSES and not allow_slow:
        return f"skipped m={m} ({budget} classes; --allow-slow)", True
    out = exists_k_proper_coloring(graph, k, m, strategy, jobs=jobs)
    if out.found:
        return f"CONTRADICTION m={m} coloring found", False
    return f"exhausted m={m} ({out.classes_checked} classes)", True


def cmd_table(args) -> int:
    rows = list(_table_rows(args))
    out = sys.stdout
    if not args.no_banner:
        out.write(f"# properindex {__version__}\n")
    out.write("family\tformula\tcolors\tverified\tlower_bound\tseconds\n")
    contradiction = False
    for fam, build, k in rows:
        start = time.perf_counter()
        graph = fam.build()
        if k == 3:
            claimed = px3_formula(fam)
        else:
            bounds = pxk_bounds(fam, k)
            claimed = bounds[0] if bounds and bounds[0] == bounds[1] else None
        try:
            con = build()
        except (NotCoveredError, ValueError) as exc:
            out.write(f"{fam}\t{claimed}\t-\terror: {exc}\t-\t-\n")
            contradiction = True
            continue
        report = is_k_proper(con.graph, con.coloring, k, jobs=args.jobs)
        verdict = "ok" if report.ok else "fail:" + ",".join(map(str, report.failing_set))
        colors = con.coloring.num_colors
        if claimed is None:
            lower, lower_ok = "unknown", True
        else:
            lower, lower_ok = _lower_status(graph, fam, k, claimed, args.allow_slow, args.jobs)
        bad = not report.ok or not lower_ok or colors != claimed
        contradiction |= bad
        elapsed = "-" if args.no_banner else f"{time.perf_counter() - start:.2f}"
        out.write(f"{fam}\t{claimed}\t{colors}\t{verdict}\t{lower}\t{elapsed}\n")
    return 1 if contradiction else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="properindex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p, ranges=False):
        p.add_argument("--family", choices=["star", "bipartite", "multipartite", "path", "cycle"])
        conv = _range if ranges else int
        p.add_argument("--s", type=conv)
        p.add_argument("--t", type=conv)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=conv, default=None if ranges else 3)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--allow-slow", action="store_true")
        p.add_argument("--no-banner", action="store_true")

    p = sub.add_parser("gen", help="emit a family graph document")
    family_flags(p)
    p.add_argument("--parts", type=_int_list)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="emit the explicit coloring for a family")
    family_flags(p)
    p.add_argument("--parts", type=_int_list)
    p.add_argument("--graph")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check k-properness of a coloring")
    family_flags(p)
    p.add_argument("--parts", type=_int_list)
    p.add_argument("--graph", default="-")
    p.add_argument("--coloring")
    p.add_argument("--set", type=_int_list, help="check a single terminal set instead")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="compute px_k exactly by exhaustive search")
    family_flags(p)
    p.add_argument("--parts", type=_int_list)
    p.add_argument("--graph")
    p.add_argument("--max-colors", type=int)
    p.add_argument("--strategy", choices=["auto", "raw", "code-multiset"], default="auto")
    p.add_argument("--no-constructions", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("formula", help="closed-form px_3, or known bounds for k >= 4")
    family_flags(p)
    p.add_argument("--parts", type=_int_list)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("table", help="reproduce a theorem as a verified TSV table")
    family_flags(p, ranges=True)
    p.add_argument("--theorem", type=int, required=True)
    p.add_argument("--parts", type=_int_list, action="append")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.family and args.graph == "-":
        args.graph = None
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
