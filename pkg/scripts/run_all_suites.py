"""Run every suite with default settings and print the summary table.

    python3 scripts/run_all_suites.py [--seed 0] [--out results/]
"""
import argparse
import json
import pathlib

from varlp.suites import SUITES, ExperimentConfig, format_summary, report_summary, run

TRIALS = {"oracle": 1000, "prop12": 2000, "sandwich": 1000, "holder": 5000, "submult": 50, "ideal-check": 100}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="directory for per-suite JSON lines")
    args = ap.parse_args()
    out = pathlib.Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    records = []
    for name in SUITES:
        recs = list(run(ExperimentConfig(name, trials=TRIALS.get(name, 100), seed=args.seed)))
        records += recs
        if out:
            with open(out / f"{name}.jsonl", "w") as fh:
                for r in recs:
                    fh.write(json.dumps(r.to_json()) + "\n")
    summary = report_summary(records)
    print(format_summary(summary))
    failed = sum(row["failed"] for row in summary.values())
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
