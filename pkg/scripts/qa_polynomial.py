"""Show A_n as a polynomial in X = q^a together with its prescribed roots.

    python3 scripts/qa_polynomial.py --n 2 --b 1 --c 4 --lambda 1 --mu 1
"""
import argparse

from qmorris.aflt import AfltParams, poly_interpolate, rhs_aflt, root_sets
from qmorris.partitions import parse_partition


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--b", type=int, default=1)
    ap.add_argument("--c", type=int, default=3)
    ap.add_argument("--lambda", dest="lam", type=parse_partition, default=())
    ap.add_argument("--mu", type=parse_partition, default=())
    args = ap.parse_args(argv)
    p = AfltParams(args.n, 0, args.b, args.c, args.lam, args.mu)
    poly = poly_interpolate(p)
    print(f"degree {poly.degree} (bound {p.degree_bound})")
    print(f"A(X) = {poly}")
    R = root_sets(p)
    for name, roots in (("A1", R.A1), ("A2", R.A2), ("A3", R.A3)):
        for a in roots:
            print(f"{name} a={a:4d}  A={poly.at_a(a)}  product side={rhs_aflt(p.with_(a=a))}")
    lo = min(R.union, default=0) - 2
    for a in range(lo, 3):
        if a not in R.union:
            print(f"   a={a:4d}  A={poly.at_a(a)}")


if __name__ == "__main__":
    main()
