"""Command line front end: ``qmorris verify|props|sweep|mac ...``."""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .aflt import (
    AfltParams,
    VerifyReport,
    _cost,
    build_integrand,
    verify_addpoints,
    verify_aflt,
    verify_qmorris,
    verify_recursion,
    verify_roots,
)
from .macdonald import CacheLimitError, g_expansion, mac_P
from .partitions import enumerate_partitions, format_partition, parse_partition
from .props import SUITES, run_suite
from .symfunc import m_coords

VERIFY_KINDS = ("aflt", "qmorris", "roots", "recursion", "addpoints")
SWEEP_CHECKS = ("aflt", "recursion", "addpoints", "roots")


@dataclass
class RunConfig:
    command: str
    action: str | None = None
    params: AfltParams | None = None
    suite: str | None = None
    ranges: dict = field(default_factory=dict)
    checks: tuple[str, ...] = ("aflt",)
    basis: str = "m"
    lam: tuple[int, ...] = ()
    seed: int = 0
    json: bool = False
    workers: int = 1
    dump_integrand: bool = False
    dump_p_basis: bool = False
    keep_going: bool = False


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _checks_arg(text: str) -> tuple[str, ...]:
    out = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in out if s not in SWEEP_CHECKS]
    if bad or not out:
        raise argparse.ArgumentTypeError(f"checks must be among {','.join(SWEEP_CHECKS)}")
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per check")
    common.add_argument("--seed", type=int, default=0, help="seed for random evaluation points")
    common.add_argument("--workers", type=_nonneg, default=1, help="worker processes (1 keeps everything in-process)")
    common.add_argument("--dump-integrand", action="store_true", help="print the full integrand")

    parser = argparse.ArgumentParser(prog="qmorris", description="Exact checks of q-Morris type constant term identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check one parameter point")
    vsub = verify.add_subparsers(dest="action", required=True)
    for kind in VERIFY_KINDS:
        p = vsub.add_parser(kind, parents=[common])
        p.add_argument("--n", type=_nonneg, required=True)
        p.add_argument("--a", type=int, default=0)
        p.add_argument("--b", type=_nonneg, default=0)
        p.add_argument("--c", type=_nonneg, default=0)
        if kind != "qmorris":
            p.add_argument("--lambda", dest="lam", type=_partition_arg, default=())
            p.add_argument("--mu", type=_partition_arg, default=())

    props = sub.add_parser("props", help="property suites")
    psub = props.add_subparsers(dest="action", required=True)
    prun = psub.add_parser("run", parents=[common])
    prun.add_argument("--suite", choices=SUITES, required=True)

    sweep = sub.add_parser("sweep", parents=[common], help="all points in a box, cheapest first")
    for name, default in (("n", 2), ("a", 3), ("b", 2), ("c", 3), ("wt", 2)):
        sweep.add_argument(f"--max-{name}", type=_nonneg, default=default)
    sweep.add_argument("--min-n", type=_nonneg, default=1)
    sweep.add_argument("--min-c", type=_nonneg, default=0)
    sweep.add_argument("--checks", type=_checks_arg, default=("aflt",),
                       help=f"comma list from {','.join(SWEEP_CHECKS)}")
    sweep.add_argument("--keep-going", action="store_true", help="do not stop at the first failure")

    mac = sub.add_parser("mac", help="Macdonald polynomials")
    msub = mac.add_subparsers(dest="action", required=True)
    show = msub.add_parser("show", parents=[common])
    show.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    show.add_argument("--basis", choices=("m", "p", "g"), default="m")
    show.add_argument("--dump-p-basis", action="store_true")
    return parser


def parse_args(argv: Iterable[str] | None = None) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(None if argv is None else list(argv))
    cfg = RunConfig(command=ns.command, action=getattr(ns, "action", None), seed=ns.seed, json=ns.json,
                    workers=max(1, ns.workers), dump_integrand=ns.dump_integrand)
    if ns.command == "verify":
        if ns.n < 1:
            parser.error("--n must be at least 1")
        lam = getattr(ns, "lam", ())
        mu = getattr(ns, "mu", ())
        cfg.params = AfltParams(ns.n, ns.a, ns.b, ns.c, lam, mu)
    elif ns.command == "props":
        cfg.suite = ns.suite
    elif ns.command == "sweep":
        if ns.min_n > ns.max_n or ns.min_c > ns.max_c:
            parser.error("range inversion: a --min bound exceeds its --max bound")
        if ns.min_n < 1:
            parser.error("--min-n must be at least 1")
        cfg.ranges = {"n": (ns.min_n, ns.max_n), "a": (0, ns.max_a), "b": (0, ns.max_b),
                      "c": (ns.min_c, ns.max_c), "wt": (0, ns.max_wt)}
        cfg.checks = ns.checks
        cfg.keep_going = ns.keep_going
    elif ns.command == "mac":
        cfg.lam = ns.lam
        cfg.basis = ns.basis
        cfg.dump_p_basis = ns.dump_p_basis
    return cfg


# -- running ------------------------------------------------------------------

def sweep_points(ranges: dict, check: str) -> list[AfltParams]:
    """Parameter points of the box, sorted cheapest first.

    Points with c = 0 are only taken when lambda = mu = () (the product side
    has poles at t = 1 otherwise).  Checks that ignore a get one point per a-slice.
    """
    n0, n1 = ranges["n"]
    pts = []
    for n in range(n0, n1 + 1):
        lams = [lam for lam in enumerate_partitions(ranges["wt"][1]) if len(lam) <= n]
        mus = list(enumerate_partitions(ranges["wt"][1]))
        a_vals = [0] if check in ("roots", "addpoints") else range(ranges["a"][1] + 1)
        for a in a_vals:
            for b in range(ranges["b"][1] + 1):
                for c in range(ranges["c"][0], ranges["c"][1] + 1):
                    for lam in lams:
                        for mu in mus:
                            if c == 0 and (lam or mu):
                                continue
                            pts.append(AfltParams(n, a, b, c, lam, mu))
    pts.sort(key=lambda p: (_cost(p), p.n, p.a, p.b, p.c, p.lam, p.mu))
    return pts


def _run_one(task: tuple[str, AfltParams]) -> dict:
    kind, p = task
    fn = {"aflt": verify_aflt, "recursion": verify_recursion, "addpoints": verify_addpoints,
          "roots": verify_roots}[kind]
    return fn(p).record()


def _mapped(tasks: list, fn, workers: int) -> Iterator:
    if workers <= 1 or len(tasks) < 2:
        for t in tasks:
            yield fn(t)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, tasks, chunksize=4)


def _emit(rec: dict, cfg: RunConfig, out) -> None:
    if cfg.json:
        out.write(json.dumps(rec, sort_keys=True) + "\n")
        return
    params = " ".join(f"{k}={v}" for k, v in rec["params"].items())
    line = f"{rec['status'].upper():7s} {rec['check']} {params}"
    if rec.get("lhs") is not None:
        line += f"  lhs={rec['lhs']}  rhs={rec['rhs']}"
    out.write(line + "\n")
    for note in rec.get("notes", []):
        out.write(f"        {note}\n")
    if "integrand" in rec:
        out.write(f"        integrand: {rec['integrand']}\n")


def _integrand_text(p: AfltParams) -> str:
    try:
        return str(build_integrand(p))
    except ValueError as exc:
        return f"<unavailable: {exc}>"


def _verify(cfg: RunConfig) -> list[dict]:
    p = cfg.params
    if cfg.action == "qmorris":
        rep = verify_qmorris(p.n, p.a, p.b, p.c)
    elif cfg.action == "aflt":
        rep = verify_aflt(p, cross_dehomogenized=True)
    else:
        rep = {"roots": verify_roots, "recursion": verify_recursion, "addpoints": verify_addpoints}[cfg.action](p)
    rec = rep.record()
    if cfg.dump_integrand:
        rec["integrand"] = _integrand_text(p)
    return [rec]


def _mac_show(cfg: RunConfig, out) -> int:
    lam = cfg.lam
    try:
        P = mac_P(lam)
    except CacheLimitError as exc:
        out.write(f"error: {exc}\n")
        return 2
    if cfg.basis == "p" or cfg.dump_p_basis:
        lines = P.p_basis_lines()
    elif cfg.basis == "m":
        lines = [f"{c} · m_({format_partition(nu)})" for nu, c in sorted(m_coords(P).items())]
    else:
        lines = [f"{c} · g_({format_partition(nu)})" for nu, c in sorted(g_expansion(lam).items())]
    if cfg.json:
        out.write(json.dumps({"lambda": format_partition(lam), "basis": "p" if cfg.dump_p_basis else cfg.basis,
                              "terms": lines}, sort_keys=True) + "\n")
    else:
        out.write(f"P_({format_partition(lam)}) =\n")
        for line in lines:
            out.write(f"  {line}\n")
    return 0


def run(cfg: RunConfig, out=None) -> int:
    """Execute the configuration; returns the exit code (0 iff nothing failed)."""
    out = sys.stdout if out is None else out
    if cfg.command == "mac":
        return _mac_show(cfg, out)
    failed = 0
    if cfg.command == "verify":
        recs: Iterable[dict] = _verify(cfg)
    elif cfg.command == "props":
        recs = (r.record() for r in run_suite(cfg.suite, cfg.seed))
    else:
        tasks = [(check, p) for check in cfg.checks for p in sweep_points(cfg.ranges, check)]
        recs = _mapped(tasks, _run_one, cfg.workers)
    for rec in recs:
        _emit(rec, cfg, out)
        if rec["status"] == "fail":
            failed += 1
            if cfg.command == "sweep" and not cfg.keep_going:
                p = AfltParams(**_params_back(rec["params"]))
                sys.stderr.write(f"mismatch at {rec['params']}; integrand:\n{_integrand_text(p)}\n")
                break
    out.flush()
    return 1 if failed else 0


def _params_back(d: dict) -> dict:
    return {"n": d["n"], "a": d.get("a", 0), "b": d["b"], "c": d["c"],
            "lam": parse_partition(d["lambda"]), "mu": parse_partition(d["mu"])}


def report_lines(reports: Iterable[VerifyReport]) -> list[str]:
    return [json.dumps(r.record(), sort_keys=True) for r in reports]


def main(argv: Iterable[str] | None = None) -> int:
    cfg = parse_args(argv)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
