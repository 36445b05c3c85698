"""Command line driver.

    so8min verify all|chevalley|triality|kostant|membership|bridge|kks|weyl|affinize|flags
                  [--seed S] [--trials T] [--suite a,b] [--timing] [--no-json]
    so8min sample orbit|quiver|window [--seed S] [--count C] [--n N]

Exit status: 0 when every suite passes, 1 on a suite failure, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .suites import SUITES, aggregate, run_suite, sample_orbit
from .sampling import make_rng

SAMPLE_KINDS = ("orbit", "quiver", "window")


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _count(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="so8min", description="Exact checks for the so_8 minimal orbit and quiver models.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and print a JSON report")
    v.add_argument("target", choices=("all",) + tuple(SUITES))
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--trials", type=_count, default=25)
    v.add_argument("--suite", default=None, help="comma separated suite names to keep (with 'all')")
    v.add_argument("--timing", action="store_true", help="fill elapsed_ms with wall-clock times")
    v.add_argument("--json", action=argparse.BooleanOptionalAction, default=True)

    s = sub.add_parser("sample", help="print exact random samples as a JSON array")
    s.add_argument("kind", choices=SAMPLE_KINDS)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--count", type=_count, default=1)
    s.add_argument("--n", type=int, default=3, help="rank for quiver samples")
    return parser


def _selected(args, parser) -> list[str]:
    names = list(SUITES) if args.target == "all" else [args.target]
    if args.suite:
        keep = [x.strip() for x in args.suite.split(",") if x.strip()]
        unknown = [x for x in keep if x not in SUITES]
        if unknown:
            parser.error(f"unknown suite(s): {', '.join(unknown)}")
        names = [x for x in names if x in keep]
        if not names:
            parser.error("--suite leaves nothing to run")
    return names


def _verify(args, parser, out) -> int:
    reports = [run_suite(name, args.seed, args.trials, args.timing) for name in _selected(args, parser)]
    if args.target == "all":
        doc = aggregate(reports)
    else:
        doc = reports[0].to_json()
    ok = all(r.ok for r in reports)
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in reports:
            out.write(f"{r.suite:<11} {'PASS' if r.ok else 'FAIL'} {r.passed}/{r.cases}\n")
    return 0 if ok else 1


def _sample(args, parser, out) -> int:
    from . import quiver, trialgebra

    rng = make_rng(args.seed)
    items = []
    for _ in range(args.count):
        if args.kind == "orbit":
            items.append(sample_orbit(rng).to_json())
        elif args.kind == "window":
            items.append(trialgebra.phi_window_inv(sample_orbit(rng)).to_json())
        else:
            if args.n < 2:
                parser.error("--n must be at least 2")
            items.append(quiver.sample_N(args.n, rng=rng).to_json())
    out.write(json.dumps(items, indent=2) + "\n")
    return 0


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return _verify(args, parser, out)
        return _sample(args, parser, out)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
