"""Command line: ``reesaci analyze``, ``reesaci suite`` and ``reesaci gb``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .groebner import CapExceeded, Caps, defining_ideal_oracle
from .instance import InstanceError, validate_instance
from .report import EXIT_CAPPED, EXIT_INVALID, STAGES, Options, analyze, load_suite, run_suite


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=_int_list, required=True, help="exponents a_1,...,a_m")
    p.add_argument("--b", type=_int_list, required=True, help="exponents b_1,...,b_m")
    p.add_argument("--m", type=int, help="number of variables (defaults to len(a))")
    p.add_argument("--permissive", action="store_true", help="allow m = 2")
    p.add_argument("--max-spairs", type=int, help="cap on S-pairs per Buchberger run")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reesaci", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="verify every claim on one instance and print a JSON report")
    _add_instance_args(p)
    p.add_argument("--skip", action="append", default=[], choices=STAGES, help="skip a stage (repeatable)")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="add a non-canonical timings section")

    p = sub.add_parser("suite", help="analyze every instance of a JSON suite file")
    p.add_argument("--file", type=Path, help="suite file; omit for the built-in default suite")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path, help="write summary and reports here")
    p.add_argument("--timings", action="store_true")

    p = sub.add_parser("gb", help="print the reduced Groebner basis of the Rees ideal")
    _add_instance_args(p)
    p.add_argument("--json", action="store_true", help="machine-readable exponent vectors")
    return parser


def _caps(args) -> Caps:
    caps = Caps.from_env()
    if getattr(args, "max_spairs", None) is not None:
        caps = caps.override({"max_spairs": args.max_spairs})
    return caps


def _spec(args):
    return validate_instance(args.m if args.m is not None else len(args.a), args.a, args.b, args.permissive)


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        Path(out).write_text(text + "\n")


def cmd_analyze(args) -> int:
    spec = _spec(args)
    rep = analyze(spec, Options(caps=_caps(args), skip=frozenset(args.skip), timings=args.timings))
    _emit(rep.to_json(args.timings), args.out)
    for name in rep.failed:
        print(f"check failed: {name}", file=sys.stderr)
    for hit in rep.diagnostics["capsHit"]:
        print(f"cap hit: {hit}", file=sys.stderr)
    return rep.exit_code


def cmd_suite(args) -> int:
    from .report import default_suite

    entries = default_suite() if args.file is None else load_suite(args.file)
    summary, results = run_suite(entries, Options(caps=Caps.from_env(), timings=args.timings), jobs=args.jobs)
    _emit(json.dumps({"summary": summary, "results": results}, sort_keys=True, indent=2), args.out)
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return summary["exitCode"]


def cmd_gb(args) -> int:
    spec = _spec(args)
    basis = defining_ideal_oracle(spec, _caps(args))
    if args.json:
        rows = [{"lead": list(f.lead), "trail": None if f.trail is None else list(f.trail)} for f in basis]
        out = {"instance": spec.as_dict(), "variables": list(spec.layout.names), "basis": rows}
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        for f in basis:
            print(f.format(spec.layout))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"analyze": cmd_analyze, "suite": cmd_suite, "gb": cmd_gb}[args.command]
    try:
        return handler(args)
    except InstanceError as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (json.JSONDecodeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"cap hit: {exc}", file=sys.stderr)
        return EXIT_CAPPED


if __name__ == "__main__":
    sys.exit(main())
