"""Command line entry point: ``hyperdom <subcommand> ...``.

Exit codes: 0 success or all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bounds, constructions, extremal, matching, trees
from .domination import brute_force_oracle, min_dominating, variant_from_cli
from .hypergraph import Hypergraph

VARIANTS = ["plain", "sdom", "stuple", "dist"]


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _read_hypergraph(path: str) -> Hypergraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if text.lstrip().startswith("{"):
        return Hypergraph.from_json(text)
    return Hypergraph.from_text(text)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs {' '.join(missing)}")


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "disjoint":
        _need(args, "k", "gamma")
        h = constructions.disjoint_edges(args.k, args.gamma)
    elif fam == "projective":
        _need(args, "q", "d", "t")
        h, _ = constructions.projective_design(args.q, args.d, args.t)
    elif fam == "padded":
        _need(args, "k", "gamma")
        h, _ = constructions.padded_projective(args.k, args.gamma, args.s)
    elif fam == "cycle":
        _need(args, "k", "gamma", "l")
        h = constructions.construction1(args.k, args.gamma, args.l)
    else:
        _need(args, "k", "gamma", "l")
        h, _ = constructions.construction2(args.k, args.gamma, args.l)
    _emit(h.to_json() + "\n" if args.format == "json" else h.to_text(), args.output)
    return 0


def cmd_solve(args) -> int:
    h = _read_hypergraph(args.input)
    variant = variant_from_cli(args.variant, args.param)
    if args.oracle:
        res = brute_force_oracle(h, variant, budget=args.budget)
    else:
        res = min_dominating(h, variant, budget=args.budget)
    out = res.to_dict()
    out["variant"] = str(variant)
    if res.warnings:
        out["warnings"] = res.warnings
    _emit(_dump(out), args.output)
    return 0


def cmd_dominate(args) -> int:
    h = _read_hypergraph(args.input)
    try:
        res = matching.distance_dominating_via_matching(h, args.l)
    except matching.DisconnectedError as exc:
        raise UsageError(str(exc)) from exc
    _emit(_dump(res.to_dict()), args.output)
    return 0


def cmd_radius(args) -> int:
    if args.table is not None:
        _emit(trees.table_tsv(trees.r_j_table(args.table, args.j)), args.output)
        return 0
    if args.tree is None:
        raise UsageError("radius needs --tree or --table")
    tree = trees.tree_from_spec(args.tree)
    exact = trees.radius_j_exact(tree, args.j)
    built = trees.radius_j_constructive(tree, args.j)
    _emit(_dump({
        "n": tree.n,
        "j": args.j,
        "canonical": trees.canonical_form(tree),
        "exact": {"exc": exact.exc, "centers": list(exact.centers)},
        "constructive": {"exc": built.exc, "centers": list(built.centers)},
        "ceil_bound": -(-tree.n // (args.j + 1)),
    }), args.output)
    return 0


def cmd_search(args) -> int:
    variant = variant_from_cli(args.variant, args.param)
    query = extremal.ExtremalQuery(variant, args.k, args.gamma, args.connected)
    rec = extremal.n_min(query, n_max=args.n_max, budget=args.budget,
                         all_witnesses=args.all_witnesses)
    _emit(_dump(rec.to_dict()), args.output)
    return 0


def cmd_bounds(args) -> int:
    rep = bounds.theorem_bounds(args.k, args.gamma, args.s, args.l, args.n)
    _emit(rep.to_tsv() if args.format == "tsv" else _dump(rep.to_dict()), args.output)
    return 0


def cmd_verify(args) -> int:
    from .verify import verify

    report = verify(args.suite, args.seed, args.only)
    if args.json:
        Path(args.json).write_text(report.to_json())
    sys.stdout.write(report.to_table())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperdom", description="Domination in uniform hypergraphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a hypergraph family")
    c.add_argument("--family", required=True,
                   choices=["disjoint", "projective", "padded", "cycle", "spider"])
    for name in ("k", "gamma", "l", "q", "d", "t"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--s", type=int, default=1)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("solve", help="exact minimum dominating set")
    s.add_argument("input", help="hypergraph file (text or JSON), '-' for stdin")
    s.add_argument("--variant", choices=VARIANTS, default="plain")
    s.add_argument("--param", type=int, default=1)
    s.add_argument("--oracle", action="store_true", help="use plain subset enumeration")
    s.add_argument("--budget", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    d = sub.add_parser("dominate", help="distance-l dominating set from a connected matching")
    d.add_argument("input")
    d.add_argument("--l", type=int, required=True)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_dominate)

    r = sub.add_parser("radius", help="j-radius of a tree, or the r_j(n) table")
    r.add_argument("--tree", help="path:N, star:L, fork:N, spider:a,b,..., prufer:s1,s2,...")
    r.add_argument("--j", type=int, default=1)
    r.add_argument("--table", type=int, metavar="N_MAX", help="TSV table for n <= N_MAX, j <= --j")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_radius)

    x = sub.add_parser("search", help="fewest vertices forcing a domination value")
    x.add_argument("--k", type=int, required=True)
    x.add_argument("--gamma", type=int, required=True)
    x.add_argument("--variant", choices=VARIANTS, default="plain")
    x.add_argument("--param", type=int, default=1)
    x.add_argument("--connected", action="store_true")
    x.add_argument("--budget", type=int)
    x.add_argument("--n-max", type=int)
    x.add_argument("--all-witnesses", action="store_true")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_search)

    b = sub.add_parser("bounds", help="closed-form bounds table")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--gamma", type=int, required=True)
    b.add_argument("--s", type=int, default=1)
    b.add_argument("--l", type=int, default=2)
    b.add_argument("--n", type=int)
    b.add_argument("--format", choices=["tsv", "json"], default="tsv")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("--suite", choices=["fast", "full"], default="fast")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--only", type=int, nargs="+", choices=range(1, 9), metavar="ID")
    v.add_argument("--json", help="write the JSON report here")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError, FileNotFoundError) as exc:
        print(f"hyperdom {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
