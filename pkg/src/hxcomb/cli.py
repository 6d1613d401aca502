"""Command-line entry point: ``hxcomb <subcommand> ...``.

Exit codes: 0 verdict ok/pass, 1 counterexample or failure found, 2 usage or
I/O error, 3 search budget exhausted before a verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import __version__
from .constructions import (
    BelowThresholdWarning, make_A, make_A_graph, make_F1, make_F2, make_F3, size_formulas,
)
from .errors import HypergraphError
from .formats import read_family, write_family
from .lemmas import LEMMA_IDS, RNG_NAME, run_lemmas
from .properties import check_U, matching_number, r_stat, stabilize
from .search import Budget, resolve_threads, search_unrestricted_max, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2, 3
DEFAULT_TRIALS = 1000
DEFAULT_SEED = 0


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _write_json(obj, path: str | None) -> None:
    if path:
        Path(path).write_text(json.dumps(obj) + "\n", encoding="utf-8")


def _config(args, **extra) -> dict:
    cfg = {
        "threads": resolve_threads(args.threads),
        "output_format": "json" if getattr(args, "json", True) else "text",
    }
    cfg.update(extra)
    if args.normalized:
        cfg.pop("threads")
    return cfg


def cmd_construct(args) -> int:
    fam = args.family
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BelowThresholdWarning)
        if fam in ("F1", "F2", "F3"):
            if args.s is None:
                raise HypergraphError(f"--s is required for {fam}")
            f = {"F1": make_F1, "F2": make_F2, "F3": make_F3}[fam](args.n, args.s)
        elif fam == "Apr":
            if None in (args.p, args.r, args.k):
                raise HypergraphError("--p, --r and --k are required for Apr")
            f = make_A(args.p, args.r, args.n, args.k)
        else:
            if None in (args.i, args.m):
                raise HypergraphError("--i and --m are required for Agraph")
            f = make_A_graph(args.i, args.n, args.m)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    write_family(f, args.output, "json" if args.format == "json" else "text" if args.format else None)
    print(_dump({"family": fam, "n": f.n, "k": f.k, "size": len(f), "output": args.output,
                 "warning": str(caught[0].message) if caught else None}))
    return EXIT_OK


def cmd_check_u(args) -> int:
    f = read_family(args.input)
    wit = check_U(f, args.s, args.q)
    if args.json:
        print(_dump({"s": args.s, "q": args.q, "size": len(f), "ok": wit is None,
                     "witness": None if wit is None else wit.to_dict()}))
    elif wit is None:
        print(f"ok: every {args.s} edges span at most {args.q} vertices")
    else:
        print(f"violated: union {wit.union_size} > {args.q} for "
              + "; ".join(" ".join(map(str, e)) for e in wit.edges))
    return EXIT_OK if wit is None else EXIT_FAIL


def cmd_nu(args) -> int:
    f = read_family(args.input)
    value, wit = matching_number(f)
    if args.json:
        print(_dump({"nu": value, "witness": wit.to_dict()}))
    else:
        print(value)
    return EXIT_OK


def cmd_stabilize(args) -> int:
    f = read_family(args.input)
    g = stabilize(f)
    write_family(g, args.output)
    print(_dump({"size": len(g), "output": args.output}))
    return EXIT_OK


def cmd_r_stat(args) -> int:
    stat = r_stat(read_family(args.input))
    if args.json:
        print(_dump({"r": stat.r, "nu": stat.nu}))
    else:
        print(stat.r)
    return EXIT_OK


def cmd_bound(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BelowThresholdWarning)
        f1, f2, f3 = size_formulas(args.n, args.s)
    print(_dump({"F1": f1, "F2": f2, "F3": f3, "bound": max(f1, f2, f3)}))
    return EXIT_OK


def cmd_lemmas(args) -> int:
    threads = resolve_threads(args.threads)
    reports = run_lemmas(args.only, args.trials, args.seed, threads)
    payload = {
        "config": _config(args, seed=args.seed, trials=args.trials, only=args.only, rng=RNG_NAME),
        "reports": [r.to_dict(normalized=args.normalized) for r in reports],
    }
    _write_json(payload, args.output)
    if args.json:
        print(_dump(payload))
    else:
        for r in reports:
            print(f"{r.lemma_id}: {'pass' if r.passed else 'FAIL'} ({r.trials} trials, "
                  f"{len(r.failures)} failures)")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_search(args) -> int:
    threads = resolve_threads(args.threads)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BelowThresholdWarning)
        if args.unrestricted:
            cert = search_unrestricted_max(args.n, args.s)
        else:
            cert = verify_theorem(args.n, args.s, Budget(args.budget_nodes, args.budget_secs), threads)
    payload = cert.to_dict(normalized=args.normalized)
    payload["config"] = _config(args, budget_nodes=args.budget_nodes, budget_secs=args.budget_secs,
                                unrestricted=args.unrestricted)
    _write_json(payload, args.certificate)
    summary = {k: payload[k] for k in ("n", "s", "optimum", "bound", "theorem_holds", "status")}
    print(_dump(summary))
    if not cert.complete:
        return EXIT_INCOMPLETE
    return EXIT_OK if cert.theorem_holds else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $HX_THREADS or 1)")
    common.add_argument("--normalized", action="store_true",
                        help="drop timing, node counts and thread count from JSON reports")

    parser = argparse.ArgumentParser(prog="hxcomb", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build an extremal family")
    p.add_argument("--family", required=True, choices=["F1", "F2", "F3", "Apr", "Agraph"])
    p.add_argument("--n", type=int, required=True)
    for name in ("s", "p", "r", "k", "i", "m"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=["json", "text"], help="default: by file suffix")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check-u", parents=[common], help="test the union condition U(s,q)")
    p.add_argument("--input", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_u)

    p = sub.add_parser("nu", parents=[common], help="matching number")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("stabilize", parents=[common], help="shift a family to a stable one")
    p.add_argument("--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("r-stat", parents=[common], help="r-statistic of a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_r_stat)

    p = sub.add_parser("bound", parents=[common], help="sizes of F1, F2, F3 and their maximum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("lemmas", parents=[common], help="run the randomized lemma checks")
    p.add_argument("--only", choices=LEMMA_IDS)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", help="also write the report here")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("search", parents=[common], help="exact extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--unrestricted", action="store_true")
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-secs", type=float)
    p.add_argument("--certificate", required=True)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HypergraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
