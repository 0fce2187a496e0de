"""Command-line front end: run verification suites, inspect seeds, mutate.

Exit codes: 0 all checks pass (flagged counts as pass), 1 a check failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import g2rep as rep
from . import seeds
from .mutation import BipartiteBelt, MutationError, Seed
from .verify import (Engine, OPTIONAL_SUITES, SUITES, exit_status,
                     reports_to_json)

USAGE_ERROR = 2


def _parse_range(text: str) -> tuple:
    try:
        lo, _, hi = text.partition("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B")
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range")
    if max(abs(lo), abs(hi)) > 40:
        raise argparse.ArgumentTypeError("range bounds must satisfy |r| <= 40")
    return lo, hi


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2cluster",
        description="exact seed mutation and identity verification for the"
                    " two G2 seed families")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--suite", default="all",
                    help="comma-separated: %s, all, or %s"
                    % (", ".join(SUITES), ", ".join(OPTIONAL_SUITES)))
    pv.add_argument("--case", type=int, choices=(1, 2), default=None,
                    help="restrict to one seed family")
    pv.add_argument("--range", type=_parse_range, default=(-12, 12),
                    metavar="A..B", help="belt index range (default -12..12)")
    pv.add_argument("--trials", type=int, default=20)
    pv.add_argument("--rng-seed", type=int, default=7)
    pv.add_argument("--mode", choices=("randomized", "symbolic"),
                    default="randomized")
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.add_argument("--out", default=None, help="write the report here")

    ps = sub.add_parser("seed", help="print a named seed as JSON")
    ps.add_argument("--name", required=True,
                    help="sigma1, sigma2, underline-sigma1, underline-sigma2,"
                         " gls1, gls2, or belt")
    ps.add_argument("--case", type=int, choices=(1, 2), default=1)
    ps.add_argument("--r", type=int, default=0, help="belt index (name=belt)")
    ps.add_argument("--out", default=None)

    pm = sub.add_parser("mutate", help="apply a mutation sequence to a seed")
    pm.add_argument("--name", required=True)
    pm.add_argument("--case", type=int, choices=(1, 2), default=1)
    pm.add_argument("--seq", required=True,
                    help="comma-separated indices, leftmost applied first")
    pm.add_argument("--right-to-left", action="store_true",
                    help="apply the sequence rightmost first, as in"
                         " multiplicative notation")
    pm.add_argument("--out", default=None)

    pf = sub.add_parser("functions",
                        help="export the named-function registry (name ->"
                             " construction recipe) as JSON")
    pf.add_argument("--out", default=None)
    return parser


def _named_seed(name: str, case: int, r: int = 0) -> Seed:
    table = {
        "sigma1": lambda: seeds.seed_bfz(1),
        "sigma2": lambda: seeds.seed_bfz(2),
        "underline-sigma1": lambda: seeds.seed_under(1),
        "underline-sigma2": lambda: seeds.seed_under(2),
        "gls1": lambda: seeds.seed_gls(1),
        "gls2": lambda: seeds.seed_gls(2),
    }
    if name == "belt":
        if abs(r) > 40:
            raise KeyError("belt index must satisfy |r| <= 40")
        return BipartiteBelt(seeds.belt_base(case)).seed(r)
    if name not in table:
        raise KeyError(f"unknown seed {name!r}")
    return table[name]()


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _seed_payload(seed: Seed, name: str, case: int) -> dict:
    payload = seed.to_json_dict()
    payload["name"] = name
    kind = {"sigma1": ("bfz", 1), "sigma2": ("bfz", 2),
            "underline-sigma1": ("under", 1), "underline-sigma2": ("under", 2),
            "gls1": ("gls", 1), "gls2": ("gls", 2),
            "belt": ("under", case)}.get(name)
    if kind:
        payload["functions"] = seeds.assignment(*kind)
    if name == "underline-sigma1":
        payload["note"] = ("diagonal entry (3,3) printed as"
                           f" {seeds.B1_UNDER_PRINTED_DIAGONAL}; 0 is forced"
                           " and used (flagged)")
    return payload


def cmd_verify(args) -> int:
    suites = [s.strip() for s in args.suite.split(",") if s.strip()]
    cases = (args.case,) if args.case else (1, 2)
    engine = Engine(trials=args.trials, rng_seed=args.rng_seed,
                    mode=args.mode, rmin=args.range[0], rmax=args.range[1],
                    cases=cases)
    try:
        reports = engine.run(suites, jobs=max(1, args.jobs))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.format == "json":
        _write(reports_to_json(reports), args.out)
    else:
        lines = []
        for r in reports:
            lines.append(f"[{r.status:>7}] {r.check_id}: {r.details}")
        counts = {}
        for r in reports:
            counts[r.status] = counts.get(r.status, 0) + 1
        lines.append("; ".join(f"{v} {k}" for k, v in sorted(counts.items())))
        _write("\n".join(lines), args.out)
    return exit_status(reports)


def cmd_seed(args) -> int:
    try:
        seed = _named_seed(args.name, args.case, args.r)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    payload = _seed_payload(seed, args.name, args.case)
    _write(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return 0


def cmd_mutate(args) -> int:
    try:
        seed = _named_seed(args.name, args.case)
        ks = [int(x) for x in args.seq.split(",") if x.strip()] \
            if args.seq.strip() else []
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.right_to_left:
        ks = list(reversed(ks))
    try:
        seed = seed.apply(ks)
    except MutationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _write(json.dumps(_seed_payload(seed, args.name, args.case),
                      indent=2, sort_keys=True), args.out)
    return 0


def cmd_functions(args) -> int:
    _write(json.dumps(rep.registry_listing(), indent=2, sort_keys=True),
           args.out)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    handler = {"verify": cmd_verify, "seed": cmd_seed, "mutate": cmd_mutate,
               "functions": cmd_functions}
    return handler[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
