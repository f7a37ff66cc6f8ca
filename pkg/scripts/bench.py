"""Time the constant-term pipeline against the product side as n and c grow.

    python3 scripts/bench.py --max-n 4 --max-c 3
"""
import argparse
import time

from qmorris.aflt import AfltParams, lhs_stats, rhs_aflt


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--max-c", type=int, default=3)
    ap.add_argument("--a", type=int, default=1)
    ap.add_argument("--b", type=int, default=1)
    ap.add_argument("--lambda", dest="lam", default="1")
    ap.add_argument("--mu", default="1")
    args = ap.parse_args(argv)
    lam = tuple(int(x) for x in args.lam.split(",") if x)
    mu = tuple(int(x) for x in args.mu.split(",") if x)
    print(f"{'n':>2} {'c':>2} {'ct ms':>9} {'product ms':>11} {'peak terms':>11}  equal")
    for n in range(1, args.max_n + 1):
        for c in range(1, args.max_c + 1):
            p = AfltParams(n, args.a, args.b, c, lam if len(lam) <= n else (), mu)
            t0 = time.perf_counter()
            lhs, peak = lhs_stats(p)
            t1 = time.perf_counter()
            rhs = rhs_aflt(p)
            t2 = time.perf_counter()
            print(f"{n:2d} {c:2d} {1000 * (t1 - t0):9.1f} {1000 * (t2 - t1):11.1f} {peak:11d}  {lhs == rhs}")


if __name__ == "__main__":
    main()
