"""``cqf`` command line: compute, verify, classify, family."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from . import bijections, classify, theorems
from .engine import cqf
from .errors import CQFError, InvalidParams, MalformedInput, SizeGuard, UnknownTheorem
from .families import (
    MountainSpec,
    all_connected_dags,
    bottomless_mountain,
    cycle_acyclic_orientations,
    mixed_mountain,
    mountain,
    natural_unit_interval,
    oriented_trees,
)
from .graph import OrientedGraph
from .qsym import e_expand, is_e_positive, is_palindromic, nonsymmetry_witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

FAMILIES = ("mountain", "bottomless", "mixed", "nui")
CATALOGS = ("dags", "trees", "cycles")


class UsageError(CQFError):
    pass


def _emit(obj, as_json: bool, human: Optional[str] = None) -> None:
    if as_json or human is None:
        print(classify.dumps(obj))
    else:
        print(human)


# -- graph input ---------------------------------------------------------------------


def _parse_graph(text: str) -> OrientedGraph:
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        data = json.loads(text)
        return OrientedGraph.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedInput(f"cannot read graph JSON: {exc}") from None


def _parse_ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise MalformedInput(f"expected comma-separated integers, got {text!r}") from None


def _family(args) -> Tuple[OrientedGraph, Optional[object]]:
    fam = args.family
    if fam == "nui":
        if not args.h:
            raise UsageError("--family nui needs --h")
        return natural_unit_interval(_parse_ints(args.h)), None
    if fam == "mixed":
        if not args.spec or args.k is None:
            raise UsageError("--family mixed needs --spec and --k")
        return mixed_mountain(MountainSpec.parse(args.spec, args.k))
    if args.p is None or args.k is None:
        raise UsageError(f"--family {fam} needs --p and --k")
    builder = mountain if fam == "mountain" else bottomless_mountain
    return builder(args.p, args.k)


def _graph_input(args, required: bool = True):
    if getattr(args, "graph", None):
        return _parse_graph(args.graph), None
    if getattr(args, "family", None):
        return _family(args)
    if required:
        raise UsageError("give --graph JSON (or @file) or --family")
    return None, None


def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help='graph JSON {"n": N, "edges": [[u, v], ...]} or @path')
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--p", type=int, help="number of cliques")
    p.add_argument("--k", type=int, help="clique size")
    p.add_argument("--spec", help="clique tags, e.g. fbfb (f = k-clique, b = bottomless (k+1)-clique)")
    p.add_argument("--h", help="Hessenberg function, e.g. 2,3,3")


# -- commands ------------------------------------------------------------------------


def cmd_compute(args) -> int:
    g, geom = _graph_input(args)
    x = cqf(g)
    witness = nonsymmetry_witness(x)
    symmetric = witness is None
    out = {
        "graph": g.to_json(),
        "num_edges": g.num_edges,
        "cqf": x.to_json(),
        "symmetric": symmetric,
        "witness": [list(w) for w in witness] if witness else None,
        "e_positive": is_e_positive(x) if symmetric else None,
        "e_expansion": e_expand(x).to_json() if symmetric else None,
        "palindromic": is_palindromic(x, g.num_edges),
    }
    if geom is not None:
        out["geometry"] = geom.to_json()
    lines = [f"graph n={g.n} edges={[list(e) for e in g.edges]}"]
    for alpha, poly in x.items():
        lines.append(f"  M{alpha}: {poly}")
    lines.append(f"symmetric: {symmetric}" + (f" (witness {witness[0]} vs {witness[1]})" if witness else ""))
    if symmetric:
        lines.append(f"e-positive: {out['e_positive']}")
        for lam, poly in e_expand(x).items():
            lines.append(f"  e{lam}: {poly}")
    lines.append(f"palindromic about |E|/2: {out['palindromic']}")
    _emit(out, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_family(args) -> int:
    if args.catalog:
        if args.n is None:
            raise UsageError("--catalog needs --n")
        if args.catalog == "dags":
            graphs = all_connected_dags(args.n, allow_large=args.unsafe_large)
        elif args.catalog == "trees":
            graphs = oriented_trees(args.n)
        else:
            graphs = cycle_acyclic_orientations(args.n)
        for g in graphs:
            print(classify.dumps(g.to_json()))
        return EXIT_OK
    if not args.family:
        raise UsageError("give --family or --catalog")
    g, geom = _family(args)
    out = {"graph": g.to_json()}
    if geom is not None:
        out["geometry"] = geom.to_json()
    print(classify.dumps(out))
    return EXIT_OK


def cmd_classify(args) -> int:
    res = classify.classify(
        args.max_n,
        min_n=args.min_n,
        cache_dir=args.cache_dir,
        workers=args.workers,
        recheck=args.recheck,
        allow_large=args.unsafe_large,
    )
    summary = classify.summarize(res.records)
    untagged = [r for r in res.records if r.symmetric and r.tags == (classify.OTHER,)]
    if args.json:
        for line in res.lines():
            print(line)
    print(
        classify.dumps(
            {
                "summary": summary,
                "computed": res.computed,
                "cached": res.cached,
                "untagged_symmetric": [r.graph.to_json() for r in untagged],
                "recheck_mismatches": res.recheck_mismatches,
            }
        )
        if args.json
        else _classify_table(summary, res)
    )
    return EXIT_FAIL if untagged or res.recheck_mismatches else EXIT_OK


def _classify_table(summary: dict, res) -> str:
    rows = ["  n   total  symmetric  untagged"]
    for n, row in summary.items():
        rows.append(f"{n:>3} {row['total']:>7} {row['symmetric']:>10} {row['untagged_symmetric']:>9}")
    rows.append(f"computed {res.computed}, from cache {res.cached}")
    if res.recheck_mismatches:
        rows.append(f"recheck mismatches: {len(res.recheck_mismatches)}")
    return "\n".join(rows)


def cmd_verify(args) -> int:
    if args.map:
        return _verify_map(args)
    if not args.theorem:
        raise UsageError("give a theorem id or --map")
    params = {"max_n": args.max_n}
    if args.theorem in ("thm-mountain", "thm-bottomless"):
        params.update(p=args.p, k=args.k)
    elif args.theorem in ("thm-mixed", "thm-swap"):
        params.update(spec=args.spec, k=args.k)
    report = theorems.run_theorem(args.theorem, **params)
    human = f"{report.theorem}: {'pass' if report.passed else 'FAIL'} ({report.checked} checked)"
    if report.counterexamples:
        human += "\n" + "\n".join(classify.dumps(c) for c in report.counterexamples)
    _emit(report.to_json(), args.json, human)
    return EXIT_OK if report.passed else EXIT_FAIL


def _verify_map(args) -> int:
    g, geom = _graph_input(args)
    kwargs = {"a": args.a, "palette": args.palette, "site": args.site}
    if args.max_colorings:
        kwargs["max_colorings"] = args.max_colorings
    if args.map != "phi" and geom is None:
        raise UsageError(f"--map {args.map} needs a mountain family (--family mountain|bottomless|mixed)")
    report = bijections.verify_map(args.map, g, geom, **kwargs)
    human = (
        f"{args.map}: {'pass' if report.passed else 'FAIL'}; domain {report.domain_size}, "
        f"image {report.image_size}, codomain {report.codomain_size}; "
        f"injective={report.injective} surjective={report.surjective} "
        f"ascents preserved={report.ascent_preserved}; {report.content_effect}"
    )
    if report.witness:
        human += f"; non-image witness {list(report.witness)}"
    _emit(report.to_json(), args.json, human)
    return EXIT_OK if report.passed else EXIT_FAIL


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache-dir", help="classifier cache directory")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--max-colorings", type=int, default=None, help="coloring enumeration bound")

    parser = argparse.ArgumentParser(prog="cqf", description="Chromatic quasisymmetric functions of oriented graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="CQF of one graph with symmetry report")
    _add_graph_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", parents=[common], help="emit a family graph or a catalog")
    _add_graph_flags(p)
    p.add_argument("--catalog", choices=CATALOGS)
    p.add_argument("--n", type=int)
    p.add_argument("--unsafe-large", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("classify", parents=[common], help="classify connected DAGs up to --max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--recheck", type=int, default=0, help="recompute this many cached records")
    p.add_argument("--unsafe-large", action="store_true", help="allow n = 8")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="check a theorem or a coloring map")
    p.add_argument("theorem", nargs="?", help=", ".join(theorems.THEOREMS))
    p.add_argument("--map", choices=bijections.MAP_IDS)
    p.add_argument("--max-n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--palette", type=int)
    p.add_argument("--site", type=int)
    _add_graph_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SizeGuard as exc:
        print(f"cqf: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except UnknownTheorem as exc:
        print(f"cqf: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, InvalidParams, MalformedInput, ValueError) as exc:
        print(f"cqf: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CQFError as exc:
        print(f"cqf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
