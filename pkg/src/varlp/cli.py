"""Command-line runner: ``varlp <suite> [options]``.

Records go to ``--out`` (or stdout) as JSON lines; the summary table goes to
stderr and, with ``--summary PATH``, to PATH as JSON plus PATH.txt as text.

Exit codes: 0 all assertions pass, 1 an assertion failed, 2 usage error
(unknown suite, bad option), 3 file I/O error, 4 malformed group, exponent,
or function descriptor.
"""
from __future__ import annotations

import argparse
import json
import sys

from .exponent import ExponentError
from .group import GroupError
from .specs import SpecError
from .suites import SUITES, ExperimentConfig, format_summary, report_summary, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_SPEC = 0, 1, 2, 3, 4

ALIASES = {"ideal": "ideal-check", "approx_id": "approx-id", "translation": "translation-probe",
           "identity-test": "identity"}


def _chain(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"chain must be comma-separated atom counts, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="varlp", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("suite", help="one of: " + ", ".join(SUITES) + " (or 'suite NAME')")
    ap.add_argument("name", nargs="?", help=argparse.SUPPRESS)
    ap.add_argument("--group")
    ap.add_argument("--exponent")
    ap.add_argument("--modular", choices=["sum", "max", "musielak"],
                    help="modular kind (default: sum; prop12 alternates sum and max)")
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float, default=1e-10)
    ap.add_argument("--out")
    ap.add_argument("--summary", help="write the summary as JSON to this path")
    ap.add_argument("--f", help="function: file path or inline spec (cos:K, random:SEED, values:...)")
    ap.add_argument("--g", help="second function for convolve")
    ap.add_argument("--chain", type=_chain, help="arc sizes for approx-id, e.g. 65,33,17,9,5,3,1")
    ap.add_argument("--quiet", action="store_true", help="suppress the summary table")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    name = args.name if args.suite == "suite" else args.suite
    name = ALIASES.get(name, name)
    if name not in SUITES:
        print(f"varlp: unknown suite {name!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = ExperimentConfig(name, args.group, args.exponent, args.modular, args.trials, args.seed,
                               args.tol, args.out, args.f, args.g, args.chain)
    except ValueError as exc:
        print(f"varlp: {exc}", file=sys.stderr)
        return EXIT_USAGE

    records = []
    try:
        sink = open(cfg.out, "w") if cfg.out else sys.stdout
    except OSError as exc:
        print(f"varlp: cannot open output: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        for rec in run(cfg):
            records.append(rec)
            sink.write(json.dumps(rec.to_json()) + "\n")
        sink.flush()
    except OSError as exc:
        print(f"varlp: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SpecError, ExponentError, GroupError) as exc:
        print(f"varlp: malformed descriptor: {exc}", file=sys.stderr)
        return EXIT_SPEC
    finally:
        if sink is not sys.stdout:
            sink.close()

    summary = report_summary(records)
    if not args.quiet:
        print(format_summary(summary), file=sys.stderr)
    if args.summary:
        try:
            with open(args.summary, "w") as fh:
                json.dump(summary, fh, indent=2, default=str)
                fh.write("\n")
            with open(args.summary + ".txt", "w") as fh:
                fh.write(format_summary(summary) + "\n")
        except OSError as exc:
            print(f"varlp: cannot write summary: {exc}", file=sys.stderr)
            return EXIT_IO
    failed = any(r.passed is False for r in records)
    return EXIT_FAIL if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
