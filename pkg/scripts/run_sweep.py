"""Sweep a parameter box and print per-check tallies.

    python3 scripts/run_sweep.py --max-n 2 --max-a 3 --max-b 2 --max-c 3 --max-wt 2
    python3 scripts/run_sweep.py --checks aflt,recursion,addpoints,roots --jsonl out.jsonl
"""
import argparse
import contextlib
import json
import sys
import time
from collections import Counter

from qmorris.cli import SWEEP_CHECKS, _run_one, sweep_points


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in (("n", 2), ("a", 3), ("b", 2), ("c", 3), ("wt", 2)):
        ap.add_argument(f"--max-{name}", type=int, default=default)
    ap.add_argument("--min-c", type=int, default=1)
    ap.add_argument("--checks", default="aflt")
    ap.add_argument("--jsonl", help="also write every record to this file")
    args = ap.parse_args(argv)
    checks = [c for c in args.checks.split(",") if c]
    if any(c not in SWEEP_CHECKS for c in checks):
        ap.error(f"checks must be among {SWEEP_CHECKS}")
    ranges = {"n": (1, args.max_n), "a": (0, args.max_a), "b": (0, args.max_b),
              "c": (args.min_c, args.max_c), "wt": (0, args.max_wt)}
    with open(args.jsonl, "w") if args.jsonl else contextlib.nullcontext() as sink:
        failed = sweep(ranges, checks, sink)
    return 1 if failed else 0


def sweep(ranges, checks, sink) -> int:
    failed = 0
    for check in checks:
        t0 = time.perf_counter()
        counts: Counter = Counter()
        peak = 0
        for p in sweep_points(ranges, check):
            rec = _run_one((check, p))
            counts[rec["status"]] += 1
            peak = max(peak, rec["terms_peak"])
            if sink:
                sink.write(json.dumps(rec, sort_keys=True) + "\n")
            if rec["status"] == "fail":
                print(f"FAIL {check} {rec['params']}", file=sys.stderr)
        failed += counts["fail"]
        dt = time.perf_counter() - t0
        print(f"{check:10s} pass={counts['pass']:5d} fail={counts['fail']:3d} "
              f"refused={counts['refused']:4d}  peak terms={peak:6d}  {dt:7.2f}s")
    return failed


if __name__ == "__main__":
    sys.exit(main())
