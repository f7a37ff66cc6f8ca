"""A_n(a,b,c,lambda,mu): the constant term side, the product side, and their checks."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import comb

from .arith import ONE, ZERO, RatFunc, qpoch_scalar, qpow
from .ct import CTStats, ct_product, product_poly
from .laurent import LaurentPoly, ratio, unit_vec
from .macdonald import CACHE, principal_spec
from .partitions import Partition, format_partition, make_partition, part
from .symfunc import Alphabet, sym_eval

log = logging.getLogger(__name__)


class DegenerateInput(ValueError):
    """Parameters outside the range where the object is defined."""


class Refused(Exception):
    """A check whose preconditions do not hold; carries the reason."""


class InterpolationError(AssertionError):
    pass


@dataclass(frozen=True)
class AfltParams:
    n: int
    a: int
    b: int
    c: int
    lam: Partition = ()
    mu: Partition = ()

    def __post_init__(self):
        if self.n < 0 or self.b < 0 or self.c < 0:
            raise ValueError(f"n, b, c must be nonnegative: {self}")
        object.__setattr__(self, "lam", make_partition(self.lam))
        object.__setattr__(self, "mu", make_partition(self.mu))

    def with_(self, **kw) -> AfltParams:
        return replace(self, **kw)

    def to_dict(self) -> dict:
        return {"n": self.n, "a": self.a, "b": self.b, "c": self.c,
                "lambda": format_partition(self.lam), "mu": format_partition(self.mu)}

    @property
    def degree_bound(self) -> int:
        return self.n * self.b + sum(self.lam) + sum(self.mu)


# -- the constant term side ---------------------------------------------------

def _check_lhs(p: AfltParams):
    if p.a < 0:
        raise DegenerateInput(f"a={p.a}: (x0/xi)_a needs a >= 0; use the interpolated polynomial")
    if p.mu and p.c == 0:
        raise DegenerateInput("c=0 with mu nonempty: the x0 alphabet weight has denominator 1 - q^0")
    if p.n < 1:
        raise DegenerateInput("n must be at least 1")


def pochhammer_factors(p: AfltParams, dehomogenize: bool = False):
    """The q-shifted factorials of the integrand as (coef, mono, k)."""
    nv = p.n + 1
    out = []
    for i in range(1, nv):
        out.append((ONE, ratio(nv, 0, i), p.a))
        out.append((qpow(1), ratio(nv, i, 0), p.b))
    for i in range(1, nv):
        for j in range(i + 1, nv):
            out.append((ONE, ratio(nv, i, j), p.c))
            out.append((qpow(1), ratio(nv, j, i), p.c))
    if dehomogenize:
        out = [(coef, mono[1:], k) for coef, mono, k in out]
    return out


def prefactor(p: AfltParams) -> LaurentPoly:
    """x0^(-|lam|-|mu|) P_lam(x; q, q^c) P_mu[weight * x0 + sum x_i]."""
    _check_lhs(p)
    nv = p.n + 1
    if len(p.lam) > p.n:
        log.warning("length of %s exceeds n=%d, P_lam(x_1..x_n) = 0", p.lam, p.n)
        return LaurentPoly(nv)
    xs = Alphabet.plain(nv, range(1, nv))
    F = LaurentPoly.monomial(unit_vec(nv, {0: -sum(p.lam) - sum(p.mu)}))
    if p.lam:
        F = F * sym_eval(CACHE.P_spec(p.lam, p.c), xs)
    if p.mu:
        w = Alphabet.ratio(nv, ((1, qpow(p.c - p.b - 1)), (-1, qpow(p.a))),
                           ((1, ONE), (-1, qpow(p.c))), mono=unit_vec(nv, {0: 1}))
        F = F * sym_eval(CACHE.P_spec(p.mu, p.c), w + xs)
    return F


def build_integrand(p: AfltParams) -> LaurentPoly:
    """The full integrand as a Laurent polynomial in x_0..x_n (expensive for large a, b, c)."""
    F = prefactor(p)
    if not F:
        return F
    return F * product_poly(p.n + 1, pochhammer_factors(p))


def _dehomogenized(F: LaurentPoly) -> LaurentPoly:
    out: dict = {}
    for e, c in F.terms.items():
        s = out.get(e[1:])
        out[e[1:]] = c if s is None else s + c
    return LaurentPoly(F.nvars - 1, out)


@lru_cache(maxsize=8192)
def _lhs(p: AfltParams, dehomogenize: bool) -> tuple[RatFunc, int]:
    F = prefactor(p)
    if not F:
        return ZERO, 0
    stats = CTStats()
    if dehomogenize:
        F = _dehomogenized(F)
    val = ct_product(F, pochhammer_factors(p, dehomogenize), stats)
    return val, stats.terms_peak


def lhs_value(p: AfltParams, dehomogenize: bool = False) -> RatFunc:
    """The constant term in all of x_0..x_n (or with x_0 = 1 when ``dehomogenize``)."""
    return _lhs(p, dehomogenize)[0]


def lhs_stats(p: AfltParams, dehomogenize: bool = False) -> tuple[RatFunc, int]:
    """(value, peak number of live terms during the expansion)."""
    return _lhs(p, dehomogenize)


# -- the product side ---------------------------------------------------------

def rhs_qmorris(n: int, a: int, b: int, c: int) -> RatFunc:
    out = ONE
    for i in range(n):
        out = out * qpoch_scalar(1, a + b + i * c) * qpoch_scalar(1, (i + 1) * c)
        out = out / (qpoch_scalar(1, a + i * c) * qpoch_scalar(1, b + i * c) * qpoch_scalar(1, c))
    return out


def rhs_aflt(p: AfltParams) -> RatFunc:
    n, a, b, c, lam, mu = p.n, p.a, p.b, p.c, p.lam, p.mu
    if mu and c == 0:
        raise DegenerateInput("c=0 with mu nonempty")
    if len(lam) > n:
        return ZERO
    t = qpow(c)
    l = len(mu)
    out = qpow(sum(comb(x, 2) for x in lam) - c * sum(i * x for i, x in enumerate(lam)))
    if sum(lam) % 2:
        out = -out
    if lam:
        out = out * principal_spec(lam, t ** n, t=t)
    if mu:
        out = out * qpow((c - b - 1) * sum(mu)) * principal_spec(mu, qpow(a + n * c + b + 1 - c), t=t)
    for i in range(1, n + 1):
        li = part(lam, i)
        for j in range(1, l + 1):
            out = out * qpoch_scalar(b + (n - i - j) * c + li + part(mu, j + 1) + 1, part(mu, j) - part(mu, j + 1))
        num = qpoch_scalar(a + (i - 1) * c - li + 1, b + li) * qpoch_scalar(1, i * c)
        den = qpoch_scalar(1, b + (n - i) * c + li + part(mu, 1)) * qpoch_scalar(1, c)
        out = out * num / den
    return out


# -- root sets ----------------------------------------------------------------

@dataclass(frozen=True)
class RootSets:
    A1: tuple[int, ...]
    A2: tuple[int, ...]
    A3: tuple[int, ...]

    @property
    def union(self) -> tuple[int, ...]:
        return self.A1 + self.A2 + self.A3

    def distinct(self) -> bool:
        u = self.union
        return len(set(u)) == len(u)


def root_sets(p: AfltParams) -> RootSets:
    n, b, c = p.n, p.b, p.c
    A1 = tuple(-i * c - k for i in range(n) for k in range(1, b + 1))
    A2 = tuple(-(i - 1) * c + k for i in range(1, len(p.lam) + 1) for k in range(part(p.lam, i) - 1, -1, -1))
    A3 = tuple(-(n - j) * c - b - k for j in range(1, len(p.mu) + 1) for k in range(1, part(p.mu, j) + 1))
    return RootSets(A1, A2, A3)


# -- polynomials in X = q^a ---------------------------------------------------

@dataclass(frozen=True)
class QaPoly:
    """sum_k coeffs[k] X^k with X standing for q^a."""

    coeffs: tuple[RatFunc, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, X) -> RatFunc:
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * X + c
        return out

    def at_a(self, a: int) -> RatFunc:
        return self(qpow(a))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*X^{k}" for k, c in enumerate(self.coeffs) if c)


def _strip(cs: list[RatFunc]) -> tuple[RatFunc, ...]:
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def newton_interpolate(xs: list[RatFunc], ys: list[RatFunc]) -> QaPoly:
    """Interpolating polynomial of degree < len(xs) through (xs, ys)."""
    m = len(xs)
    dd = list(ys)
    coef = [dd[0]]
    for k in range(1, m):
        dd = [(dd[i + 1] - dd[i]) / (xs[i + k] - xs[i]) for i in range(m - k)]
        coef.append(dd[0])
    poly = [coef[-1]]
    for k in range(m - 2, -1, -1):
        # poly * (X - xs[k]) + coef[k]
        shifted = [ZERO] + poly
        for i, c in enumerate(poly):
            shifted[i] = shifted[i] - c * xs[k]
        shifted[0] = shifted[0] + coef[k]
        poly = shifted
    return QaPoly(_strip(poly))


def poly_interpolate(p: AfltParams, sample_as: list[int] | None = None, extra: int = 1) -> QaPoly:
    """A_n as a polynomial in q^a (p.a is ignored).

    Interpolates through the first degree_bound+1 samples and requires every
    further sample (``extra`` of them by default) to agree.
    """
    D = p.degree_bound
    if sample_as is None:
        sample_as = list(range(D + 1 + extra))
    if len(set(sample_as)) != len(sample_as) or any(s < 0 for s in sample_as):
        raise ValueError("samples must be distinct nonnegative integers")
    if len(sample_as) < D + 1:
        raise ValueError(f"need at least {D + 1} samples for degree bound {D}")
    base = sample_as[:D + 1]
    ys = [lhs_value(p.with_(a=s)) for s in base]
    poly = newton_interpolate([qpow(s) for s in base], ys)
    for s in sample_as[D + 1:]:
        got = lhs_value(p.with_(a=s))
        if poly.at_a(s) != got:
            raise InterpolationError(f"sample a={s} disagrees with the degree-{D} interpolant for {p.to_dict()}")
    return poly


@lru_cache(maxsize=1024)
def _interp_cached(key: AfltParams) -> QaPoly:
    return poly_interpolate(key)


def A_value(p: AfltParams) -> RatFunc:
    """A_n at any integer a: direct for a >= 0, through the q^a-polynomial otherwise."""
    if p.a >= 0:
        return lhs_value(p)
    return _interp_cached(p.with_(a=0)).at_a(p.a)


# -- reports ------------------------------------------------------------------

@dataclass
class VerifyReport:
    check: str
    params: dict
    lhs: RatFunc | None = None
    rhs: RatFunc | None = None
    equal: bool | None = None
    notes: list[str] = field(default_factory=list)
    millis: int = 0
    terms_peak: int = 0

    @property
    def status(self) -> str:
        if self.equal is None:
            return "refused"
        return "pass" if self.equal else "fail"

    def record(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "equal": self.equal,
            "status": self.status,
            "notes": list(self.notes),
            "millis": self.millis,
            "terms_peak": self.terms_peak,
        }


def _timed(check: str, params: dict, fn) -> VerifyReport:
    """Run fn(report) filling in the report; Refused becomes a refused record."""
    rep = VerifyReport(check, params)
    t0 = time.perf_counter()
    try:
        fn(rep)
    except Refused as exc:
        rep.equal = None
        rep.notes.append(f"refused: {exc}")
    except DegenerateInput as exc:
        rep.equal = None
        rep.notes.append(f"refused: {exc}")
    rep.millis = int((time.perf_counter() - t0) * 1000)
    return rep


def verify_aflt(p: AfltParams, cross_dehomogenized: bool = False) -> VerifyReport:
    def run(rep):
        lhs, peak = lhs_stats(p)
        rep.lhs, rep.terms_peak = lhs, peak
        rep.rhs = rhs_aflt(p)
        rep.equal = lhs == rep.rhs
        if cross_dehomogenized:
            same = lhs_value(p, dehomogenize=True) == lhs
            rep.notes.append(f"x0=1 constant term agrees: {same}")
            rep.equal = rep.equal and same
    return _timed("aflt", p.to_dict(), run)


def verify_qmorris(n: int, a: int, b: int, c: int) -> VerifyReport:
    p = AfltParams(n, a, b, c)

    def run(rep):
        rep.lhs, rep.terms_peak = lhs_stats(p)
        rep.rhs = rhs_qmorris(n, a, b, c)
        rep.equal = rep.lhs == rep.rhs
    return _timed("qmorris", {"n": n, "a": a, "b": b, "c": c}, run)


def verify_roots(p: AfltParams) -> VerifyReport:
    """Degree bound and vanishing on A1, A2, A3 (p.a is ignored)."""
    params = {k: v for k, v in p.to_dict().items() if k != "a"}

    def run(rep):
        lam1, mu1 = part(p.lam, 1), part(p.mu, 1)
        if not p.c > p.b + lam1 + mu1:
            raise Refused(f"needs c > b + lambda_1 + mu_1, got c={p.c}, b+lambda_1+mu_1={p.b + lam1 + mu1}")
        if len(p.lam) > p.n:
            raise Refused("length of lambda exceeds n")
        base = p.with_(a=0)
        D = base.degree_bound
        poly = _interp_cached(base)
        R = root_sets(base)
        ok = poly.degree <= D
        rep.notes.append(f"degree {poly.degree} <= {D}: {poly.degree <= D}")
        disjoint = R.distinct() and len(R.union) == D
        rep.notes.append(f"A1={list(R.A1)} A2={list(R.A2)} A3={list(R.A3)} distinct: {disjoint}")
        ok = ok and disjoint
        bad = []
        for a in R.union:
            if a >= 0:
                v = lhs_value(base.with_(a=a))
                hit = not v and not poly.at_a(a)
            else:
                hit = not poly.at_a(a) and not rhs_aflt(base.with_(a=a))
            if not hit:
                bad.append(a)
        if bad:
            rep.notes.append(f"nonvanishing at a in {bad}")
        ok = ok and not bad
        rep.lhs = RatFunc(len(R.union) - len(bad))
        rep.rhs = RatFunc(len(R.union))
        rep.equal = ok
    return _timed("roots", params, run)


def _recursion_prefactor(p: AfltParams) -> RatFunc:
    n, a, b, c, lam, mu = p.n, p.a, p.b, p.c, p.lam, p.mu
    ln, mn = part(lam, n), part(mu, n)
    num = qpow(-comb(b + 1, 2) - (b + 1) * (ln + mn)) * qpoch_scalar(n * c, 1)
    den = qpoch_scalar(c, 1)
    if b % 2:
        num = -num
    for i in range(n):
        num = num * qpoch_scalar(a + i * c + 1, b)
        den = den * qpoch_scalar(i * c - b, b)
    for i in range(1, n + 1):
        li, mi = part(lam, i), part(mu, i)
        num = num * qpoch_scalar(a + (i - 1) * c - li + 1, li) * qpoch_scalar(i * c - b - li - mn, mn)
        den = den * qpoch_scalar((i - 1) * c - b - li - mn, li + mn)
        num = num * qpoch_scalar(a + (n - i) * c + b + 1, mi)
        den = den * qpoch_scalar((n - i) * c, mi - mn) * qpoch_scalar((n - i + 1) * c + mi - mn, mn)
    if not den:
        raise Refused("a denominator of the recursion prefactor vanishes at these parameters")
    return num / den


def reduced_params(p: AfltParams) -> AfltParams:
    """(c-b-1, b+c, c, mu-bar, lambda-bar) with n-1 variables."""
    n = p.n
    ln = part(p.lam, n)
    lam_bar = tuple(part(p.lam, i) - ln for i in range(1, n))
    mu_bar = tuple(part(p.mu, i) + ln for i in range(1, n))
    return AfltParams(n - 1, p.c - p.b - 1, p.b + p.c, p.c, make_partition(mu_bar), make_partition(lam_bar))


def _inner_value(r: AfltParams, rep: VerifyReport, direct_limit: int) -> RatFunc:
    """A_{n-1} at the reduced parameters, by both pipelines when affordable.

    A negative reduced a (c <= b) goes through the interpolated polynomial in q^a.
    """
    if r.n == 0:
        return ONE
    closed = rhs_aflt(r)
    if _cost(r.with_(a=max(r.a, r.degree_bound + 1))) <= direct_limit:
        direct = A_value(r)
        if r.a < 0:
            rep.notes.append(f"inner A_{r.n} at a={r.a} from the interpolated polynomial")
        if direct != closed:
            rep.notes.append(f"inner A_{r.n} constant term differs from product: {direct} vs {closed}")
            rep.equal = False
        return direct
    rep.notes.append(f"inner A_{r.n} taken from the product formula")
    return closed


def _cost(p: AfltParams) -> int:
    """Rough number of linear factors, used to decide what is affordable directly."""
    return p.n * (p.a + p.b) + p.n * (p.n - 1) * p.c


def verify_recursion(p: AfltParams, direct_limit: int = 60) -> VerifyReport:
    def run(rep):
        if len(p.mu) > p.n:
            raise Refused("needs length(mu) <= n")
        if len(p.lam) > p.n:
            raise Refused("needs length(lambda) <= n")
        if p.a < 0:
            raise Refused("needs a >= 0")
        pref = _recursion_prefactor(p)
        r = reduced_params(p)
        rep.notes.append(f"reduced to {r.to_dict()}")
        rep.lhs, rep.terms_peak = lhs_stats(p)
        inner = _inner_value(r, rep, direct_limit)
        rep.rhs = pref * inner
        rep.equal = (rep.lhs == rep.rhs) and rep.equal is not False
    return _timed("recursion", p.to_dict(), run)


def verify_addpoints(p: AfltParams, direct_limit: int = 60) -> VerifyReport:
    """The additional point of the q^a-polynomial (p.a is ignored)."""
    params = {k: v for k, v in p.to_dict().items() if k != "a"}
    n, b, c = p.n, p.b, p.c

    def run(rep):
        if len(p.lam) > n:
            raise Refused("needs length(lambda) <= n")
        if c == 0:
            raise Refused("needs c >= 1")
        l = len(p.mu)
        if l < n:
            rep.notes.append("first additional point, a = -b-1")
            pt = p.with_(a=-b - 1)
            rep.lhs = A_value(pt)
            closed = rhs_aflt(pt)
            if closed != rep.lhs:
                rep.notes.append(f"interpolated value differs from product formula: {closed}")
            ln = part(p.lam, n)
            pref = qpow(-comb(b + 1, 2) - (b + 1) * ln) * qpoch_scalar(n * c, 1) / qpoch_scalar(c, 1)
            if b % 2:
                pref = -pref
            r = reduced_params(pt)
            rep.notes.append(f"reduced to {r.to_dict()}")
            rep.rhs = pref * _inner_value(r, rep, direct_limit)
            rep.equal = rep.lhs == rep.rhs and closed == rep.lhs and rep.equal is not False
        else:
            ml = p.mu[-1]
            a = (l - n + 1) * c - b - 1
            rep.notes.append(f"second additional point, a = {a}")
            tt = (comb(l - n + 1, 2) * c - (b + 1) * (l - n)) * ml
            lam_t = make_partition(part(p.lam, i) + ml for i in range(1, n + 1))
            mu_t = make_partition(part(p.mu, i) - ml for i in range(1, l))
            left = p.with_(a=a)
            right = AfltParams(n, a, b, c, lam_t, mu_t)
            rep.notes.append(f"compared with {right.to_dict()}")
            rep.lhs = A_value(left)
            rep.rhs = qpow(tt) * A_value(right)
            rep.equal = rep.lhs == rep.rhs
    return _timed("addpoints", params, run)
