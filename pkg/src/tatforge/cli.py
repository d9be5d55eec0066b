"""tatforge command line.

Exit codes: 0 = TAT constructed/verified (or search found a labeling),
1 = a counterexample or failed claim was found, 2 = usage or input error,
3 = search budget exhausted without a decision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .chain import ChainResult, chain_compose, chain_paths, read_manifest
from .dot import to_dot
from .errors import TatError
from .graph import Graph, parse_edge_list, build_family
from .labeling import TotalLabeling, dumps, loads, write_labeling
from .schemes import REPAIR_NOTES, scheme_for
from .search import DEGREE_DESCENDING, INPUT_ORDER, SearchOptions, Status, default_budget, find_tat
from .trees import conjecture_harness, harness_csv
from .verifier import VerificationReport, class_partition, element_str, full_report, singleton_partition

EXIT_OK, EXIT_FINDING, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
WITNESS_DISPLAY_CAP = 20

SWEEP_HEADER = ["family", "n", "m", "super", "eat", "vat", "tat", "weak_ordered", "repairs"]


class UsageError(TatError):
    pass


def _yn(flag) -> str:
    return "" if flag is None else ("yes" if flag else "no")


def resolve_partition(g: Graph, spec: str | None):
    if spec is None:
        return None
    if spec == "none":
        return []
    if spec == "singletons":
        return singleton_partition(g)
    if spec == "u,v":
        if g.family.name not in ("ladder", "prism", "petersen"):
            raise UsageError("--partition u,v needs a ladder, prism or petersen labeling")
        return class_partition(g)
    raise UsageError(f"unknown partition {spec!r} (use u,v|singletons|none)")


def report_for(g: Graph, lab: TotalLabeling, partition_spec: str | None = None) -> VerificationReport:
    part = resolve_partition(g, partition_spec)
    if part == []:
        # "none": skip the weak-order check, including the family default
        rep = full_report(g, lab, [[x] for x in g.vertices])
        rep.weak_ordered = None
        rep.weak_ordered_partition = None
        return rep
    return full_report(g, lab, part)


def format_report(rep: VerificationReport) -> str:
    lines = [f"verdict: {rep.verdict()}"]
    for name in VerificationReport.FLAGS:
        lines.append(f"{name}: {_yn(getattr(rep, name))}")
    if rep.weak_ordered is not None:
        parts = " | ".join(",".join(str(x) for x in p) for p in rep.weak_ordered_partition)
        lines.append(f"weak_ordered: {_yn(rep.weak_ordered)} [{parts}]")
    if rep.witnesses:
        lines.append(f"witnesses: {len(rep.witnesses)}")
        for w in rep.witnesses[:WITNESS_DISPLAY_CAP]:
            lines.append(f"  {w}")
        if len(rep.witnesses) > WITNESS_DISPLAY_CAP:
            lines.append(f"  ... {len(rep.witnesses) - WITNESS_DISPLAY_CAP} more")
    return "\n".join(lines)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_graph_or_labeling(path: str) -> tuple[Graph, TotalLabeling | None]:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        g, lab, _ = loads(text)
        return g, lab
    return parse_edge_list(text), None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    res = scheme_for(args.family, args.n, args.m)
    out = args.out or f"{args.family}-{args.n}" + (f"-{args.m}" if args.m is not None else "") + ".json"
    write_labeling(out, res.graph, res.labeling, {"source": res.source, "repairs": res.repairs_applied})
    rep = report_for(res.graph, res.labeling, args.partition)
    print(f"wrote {out}")
    for r in res.repairs_applied:
        print(f"repair {r}: {REPAIR_NOTES[r]}")
    print(f"super: {_yn(rep.is_super)}")
    print(f"verdict: {rep.verdict()}")
    return EXIT_OK if rep.is_tat else EXIT_FINDING


def cmd_verify(args) -> int:
    g, lab, _ = loads(_read_text(args.file))
    rep = report_for(g, lab, args.partition)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(format_report(rep))
    return EXIT_OK if rep.is_tat else EXIT_FINDING


def _search_graph(args) -> Graph:
    if args.family:
        name, *params = args.family
        try:
            nums = [int(x) for x in params]
        except ValueError:
            raise UsageError(f"bad family parameters {params}") from None
        if not 1 <= len(nums) <= 2:
            raise UsageError("--family NAME N [M]")
        return build_family(name, *nums)
    if not args.file:
        raise UsageError("give a graph file or --family NAME N [M]")
    return load_graph_or_labeling(args.file)[0]


def _options(args, **kw) -> SearchOptions:
    budget = args.budget if args.budget is not None else default_budget()
    return SearchOptions(node_budget=budget, workers=args.workers, **kw)


def cmd_search(args) -> int:
    g = _search_graph(args)
    opts = _options(
        args,
        require_super=args.super,
        require_bijective=not args.non_bijective,
        element_order=args.order,
    )
    out = find_tat(g, opts)
    print(f"status: {out.status}")
    print(f"nodes_visited: {out.nodes_visited}")
    if out.found:
        if args.out:
            write_labeling(args.out, g, out.labeling, {"source": "search"})
            print(f"wrote {args.out}")
        else:
            sys.stdout.write(dumps(g, out.labeling, {"source": "search"}))
        return EXIT_OK
    return EXIT_FINDING if out.status is Status.EXHAUSTED else EXIT_BUDGET


def _print_chain(res: ChainResult) -> None:
    for k, (voff, eoff) in enumerate(res.offsets, 1):
        print(f"block {k}: vertex shift {voff}, edge shift {eoff}")
    print("cut vertices: " + (" ".join(str(x) for x in res.cut_vertices) or "none"))


def cmd_chain(args) -> int:
    if bool(args.manifest) == bool(args.paths):
        raise UsageError("give either a manifest file or --paths")
    if args.paths:
        res = chain_paths(args.paths, _options(args, require_super=True))
    else:
        res = chain_compose(read_manifest(args.manifest))
    _print_chain(res)
    rep = full_report(res.graph, res.labeling)
    print(format_report(rep))
    if args.out:
        write_labeling(args.out, res.graph, res.labeling, {"source": "chain"})
        print(f"wrote {args.out}")
    return EXIT_OK if rep.is_tat else EXIT_FINDING


def sweep_instances(family: str, n_min: int, n_max: int, m_policy: str) -> list[tuple[str, int, int | None]]:
    out = []
    for n in range(n_min, n_max + 1):
        if family != "petersen":
            out.append((family, n, None))
            continue
        legal = list(range(1, (n - 1) // 2 + 1))
        if m_policy == "all":
            ms = legal
        else:
            ms = [int(m_policy)] if int(m_policy) in legal else []
        out += [(family, n, m) for m in ms]
    return out


def sweep_row(inst: tuple[str, int, int | None]) -> list[str]:
    family, n, m = inst
    res = scheme_for(family, n, m)
    rep = full_report(res.graph, res.labeling)
    return [
        family, str(n), "" if m is None else str(m),
        _yn(rep.is_super), _yn(rep.is_eat), _yn(rep.is_vat), _yn(rep.is_tat), _yn(rep.weak_ordered),
        ";".join(res.repairs_applied),
    ]


def sweep_rows(family: str, n_min: int, n_max: int, m_policy: str = "all", workers: int = 1) -> list[list[str]]:
    if family not in ("ladder", "prism", "petersen"):
        raise UsageError(f"sweep family must be ladder, prism or petersen, not {family!r}")
    if m_policy != "all" and not m_policy.isdigit():
        raise UsageError(f"--m must be 'all' or an integer, got {m_policy!r}")
    insts = sweep_instances(family, n_min, n_max, m_policy)
    if workers > 1 and len(insts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(sweep_row, insts))
    return [sweep_row(i) for i in insts]


def rows_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args) -> int:
    rows = sweep_rows(args.family, args.n_min, args.n_max, args.m, args.workers)
    _emit(rows_csv(SWEEP_HEADER, rows), args.out)
    return EXIT_OK if all(r[6] == "yes" for r in rows) else EXIT_FINDING


def cmd_export_dot(args) -> int:
    g, lab = load_graph_or_labeling(args.file)
    _emit(to_dot(g, lab), args.out)
    return EXIT_OK


def cmd_trees(args) -> int:
    opts = _options(args, require_super=args.super)
    rows = conjecture_harness(args.max_n, opts)
    _emit(harness_csv(rows), args.out)
    statuses = {r.outcome.status for r in rows}
    if statuses <= {Status.FOUND}:
        return EXIT_OK
    return EXIT_FINDING if Status.EXHAUSTED in statuses else EXIT_BUDGET


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tatforge", description="Totally antimagic total labelings: construct, verify, search.")
    ap.add_argument("--version", action="version", version=f"tatforge {__version__}")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def search_flags(p):
        p.add_argument("--budget", type=_positive, default=None, help="search node budget (env TATFORGE_BUDGET)")
        p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("generate", help="write a closed-form labeling and verify it")
    p.add_argument("family", choices=["ladder", "prism", "petersen"])
    p.add_argument("n", type=int)
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("--partition", default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="verify a labeling file")
    p.add_argument("file")
    p.add_argument("--partition", default=None, help="u,v | singletons | none")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exact search for a TAT labeling")
    p.add_argument("file", nargs="?", help="edge list or labeling file")
    p.add_argument("--family", nargs="+", metavar="ARG", help="NAME N [M], e.g. --family cycle 3")
    p.add_argument("--super", action="store_true")
    p.add_argument("--non-bijective", action="store_true", help="allow repeated labels")
    p.add_argument("--order", choices=[DEGREE_DESCENDING, INPUT_ORDER], default=DEGREE_DESCENDING)
    p.add_argument("--out")
    search_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("chain", help="compose blocks into a chain graph")
    p.add_argument("manifest", nargs="?", help="file listing block labeling files in order")
    p.add_argument("--paths", type=int, nargs="+", metavar="N", help="chain of paths with these vertex counts")
    p.add_argument("--out")
    search_flags(p)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("sweep", help="verify a scheme over a range of n (CSV)")
    p.add_argument("family", choices=["ladder", "prism", "petersen"])
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--m", default="all", help="petersen m policy: all | <int>")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export-dot", help="render a graph or labeling file as DOT")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("trees", help="search every tree up to max-n vertices (CSV)")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--super", action="store_true")
    p.add_argument("--out")
    search_flags(p)
    p.set_defaults(func=cmd_trees)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TatError as exc:
        print(f"tatforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
