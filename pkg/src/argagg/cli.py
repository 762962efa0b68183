"""Command line front end.

Exit codes: 0 success, 1 parse or usage error, 2 plurality tie.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from . import bench, postulates
from .core import ArgumentationError, enumerate_admissible, enumerate_complete, grounded
from .io import parse_af, parse_profile
from .rules import TieFailure, awpr, co, sco, so, supermajority

EXIT_OK, EXIT_ERROR, EXIT_TIE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArgumentationError(f"cannot read {path}: {exc.strerror}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_semantics(args) -> int:
    af = parse_af(_read(args.af))
    if args.kind == "complete":
        labs = enumerate_complete(af)
    elif args.kind == "admissible":
        labs = enumerate_admissible(af)
    else:
        labs = [grounded(af)]
    if args.json:
        _emit({"kind": args.kind, "arguments": list(af.arguments), "labelings": [dict((a, x.value) for a, x in lab.items()) for lab in labs]})
    else:
        for lab in labs:
            print(lab)
    return EXIT_OK


def cmd_aggregate(args) -> int:
    af = parse_af(_read(args.af))
    profile = parse_profile(_read(args.profile), af, require_complete=not args.allow_incomplete)
    if args.rule == "awpr":
        result = awpr(profile).result
    elif args.rule == "supermajority":
        if args.k is None:
            raise ArgumentationError("--k is required for the supermajority rule")
        result = supermajority(profile, args.k).result
    else:
        result = {"so": so, "co": co, "sco": sco}[args.rule](profile)

    tie = isinstance(result, TieFailure)
    if args.json:
        obj: dict = {"rule": args.rule, "voters": len(profile)}
        if tie:
            obj["tie"] = {a: c._asdict() for a, c in result.tallies}
            obj["labeling"] = None
        else:
            obj["tie"] = None
            obj["labeling"] = {a: x.value for a, x in result.items()}
        _emit(obj)
    else:
        print(result)
    return EXIT_TIE if tie else EXIT_OK


def cmd_postulates(args) -> int:
    rule = postulates.Rule("supermajority", args.k) if args.rule == "supermajority" else postulates.Rule(args.rule)
    row = postulates.postulate_matrix([rule], args.max_args, args.max_voters)[str(rule)]
    if args.json:
        _emit({"rule": str(rule), "postulates": {p: rep.to_dict() for p, rep in row.items()}})
        return EXIT_OK
    for name, rep in row.items():
        line = f"{rule}\t{name}\t{rep.verdict}\tchecked={rep.profiles_checked}\tundefined={rep.undefined}"
        if rep.witness is not None:
            w = rep.witness
            profs = " | ".join("; ".join(str(lab) for lab in p.labelings) for p in w.profiles)
            line += f"\twitness={w.framework_name}"
            if w.argument:
                line += f"@{w.argument}"
            line += f": {profs}"
        print(line)
    return EXIT_OK


def cmd_explore(args) -> int:
    af = parse_af(_read(args.af))
    census = bench.divergence_census(af, args.conclusion, args.voters, ordered=args.ordered)
    if args.json:
        _emit(census.to_dict())
        return EXIT_OK
    print("rule\tagree\tdisagree\tties\ttotal")
    for row in census.rows():
        print("\t".join(str(x) for x in row))
    return EXIT_OK


def cmd_replicate(args) -> int:
    scenarios = [args.scenario] if args.scenario else list(bench.SCENARIO_IDS)
    ratios = [bench.VoteRatio.parse(args.ratio)] if args.ratio else list(bench.PAPER_RATIOS)
    reps = bench.replicate_all(scenarios, ratios, args.polarity)
    if args.json:
        _emit([r.to_dict() for r in reps])
        return EXIT_OK
    print("scenario\tratio\tharm\tawpr\tso\tco\tsco")
    for r in reps:
        c = r.conclusion()
        print(f"{r.scenario.id}\t{r.ratio}\t{'yes' if r.scenario.harm else 'no'}\t{c['awpr']}\t{c['so']}\t{c['co']}\t{c['sco']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="argagg", description="Evaluate and aggregate argument labelings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("semantics", help="list labelings of a framework")
    p.add_argument("af")
    p.add_argument("--kind", choices=["complete", "admissible", "grounded"], default="complete")
    p.set_defaults(func=cmd_semantics)

    p = sub.add_parser("aggregate", help="aggregate a profile")
    p.add_argument("--rule", required=True, choices=["awpr", "so", "co", "sco", "supermajority"])
    p.add_argument("--k", type=int)
    p.add_argument("--allow-incomplete", action="store_true", help="accept non-complete ballots")
    p.add_argument("af")
    p.add_argument("profile")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("postulates", help="search the framework catalog for postulate violations")
    p.add_argument("--rule", required=True, choices=["awpr", "so", "co", "sco", "supermajority"])
    p.add_argument("--k", type=int)
    p.add_argument("--max-args", type=int, default=4)
    p.add_argument("--max-voters", type=int, default=3)
    p.set_defaults(func=cmd_postulates)

    p = sub.add_parser("explore", help="census of plurality/SSCO divergence")
    p.add_argument("af")
    p.add_argument("--conclusion", required=True)
    p.add_argument("--voters", type=int, required=True)
    p.add_argument("--ordered", action="store_true", help="enumerate ordered profiles instead of multisets")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("replicate", help="vignette scenarios under plurality and SSCOs")
    p.add_argument("--scenario", choices=list(bench.SCENARIO_IDS))
    p.add_argument("--ratio")
    p.add_argument("--polarity", choices=["pro", "con"], default="pro")
    p.set_defaults(func=cmd_replicate)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ArgumentationError as exc:
        print(f"argagg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
