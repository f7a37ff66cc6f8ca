"""Macdonald polynomials P_lambda(q, t) by Gram-Schmidt over the monomial basis."""
from __future__ import annotations

import os
import threading

from .arith import ONE, ZERO, Q, RatFunc, T, as_ratfunc, qpoch, specialize_t, swap_qt
from .partitions import (
    Partition,
    conjugate,
    contains,
    dominance_leq,
    nstat,
    partitions_of,
)
from .symfunc import (
    SymF,
    g_in_p,
    g_lambda,
    hall_scalar,
    m_coords,
    m_in_p,
    mul_symf,
    omega_uv,
)

DEBUG = bool(os.environ.get("QMORRIS_DEBUG"))


class CacheLimitError(RuntimeError):
    pass


def _max_degree() -> int:
    return int(os.environ.get("CT_MACD_CACHE_MAX", "10"))


def linear_extension(d: int, alt: bool = False) -> list[Partition]:
    """Partitions of d in an order refining dominance (smaller first).

    The default is increasing lex order; ``alt`` sorts by the sum of squared
    parts, which is strictly monotone along dominance as well.
    """
    parts = list(partitions_of(d))
    if alt:
        return sorted(parts, key=lambda lam: (sum(p * p for p in lam), tuple(-x for x in lam)))
    return sorted(parts)


def gram_schmidt(d: int, order: list[Partition] | None = None) -> dict[Partition, SymF]:
    order = linear_extension(d) if order is None else order
    P: dict[Partition, SymF] = {}
    norms: dict[Partition, RatFunc] = {}
    for lam in order:
        m = m_in_p(lam)
        f = m
        for nu, pn in P.items():
            coef = hall_scalar(m, pn) / norms[nu]
            if coef:
                f = f - pn.scale(coef)
        P[lam] = f
        norms[lam] = hall_scalar(f, f)
    return P


class MacCache:
    """Generic-(q,t) P_lambda per degree, plus t = q^c specializations.

    Reads are lock-free; a degree is built under the lock so it is computed
    once.  Specializations may be computed twice concurrently; both results
    are equal, and the first stored wins.
    """

    def __init__(self):
        self._P: dict[Partition, SymF] = {}
        self._b: dict[Partition, RatFunc] = {}
        self._degrees: set[int] = set()
        self._spec: dict[tuple[Partition, int], SymF] = {}
        self._lock = threading.Lock()

    def _ensure(self, d: int):
        if d in self._degrees:
            return
        if d > _max_degree():
            raise CacheLimitError(f"degree {d} exceeds CT_MACD_CACHE_MAX={_max_degree()}")
        with self._lock:
            if d in self._degrees:
                return
            P = gram_schmidt(d)
            if DEBUG:
                check_macdonald_degree(P)
                if gram_schmidt(d, linear_extension(d, alt=True)) != P:
                    raise AssertionError(f"Gram-Schmidt depends on the linear extension at degree {d}")
            for lam, f in P.items():
                self._b[lam] = hall_scalar(f, f).inverse()
            self._P.update(P)
            self._degrees.add(d)

    def P(self, lam: Partition) -> SymF:
        lam = tuple(lam)
        self._ensure(sum(lam))
        return self._P[lam]

    def b(self, lam: Partition) -> RatFunc:
        lam = tuple(lam)
        self._ensure(sum(lam))
        return self._b[lam]

    def P_spec(self, lam: Partition, c: int) -> SymF:
        key = (tuple(lam), c)
        hit = self._spec.get(key)
        if hit is None:
            hit = self.P(lam).map_coeffs(lambda v: specialize_t(v, c))
            self._spec.setdefault(key, hit)
            hit = self._spec[key]
        return hit


CACHE = MacCache()


def check_macdonald_degree(P: dict[Partition, SymF]):
    """Unitriangularity in dominance and pairwise orthogonality."""
    for lam, f in P.items():
        coords = m_coords(f)
        if coords.get(lam) != ONE:
            raise AssertionError(f"P_{lam} is not monic in m_{lam}")
        for mu in coords:
            if not dominance_leq(mu, lam):
                raise AssertionError(f"P_{lam} has an m_{mu} term outside dominance")
    keys = list(P)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            if hall_scalar(P[a], P[b]):
                raise AssertionError(f"<P_{a}, P_{b}> != 0")


def mac_P(lam: Partition) -> SymF:
    return CACHE.P(lam)


def b_norm(lam: Partition) -> RatFunc:
    return CACHE.b(lam)


def mac_Q(lam: Partition) -> SymF:
    return mac_P(lam).scale(b_norm(lam))


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> RatFunc:
    """f^lam_{mu nu} = <Q_lam, P_mu P_nu>."""
    if sum(mu) + sum(nu) != sum(lam):
        return ZERO
    return hall_scalar(mac_Q(lam), mul_symf(mac_P(mu), mac_P(nu)))


def skew(lam: Partition, mu: Partition, kind: str = "P") -> SymF:
    """P_{lam/mu} or Q_{lam/mu}; zero unless mu is contained in lam."""
    d = sum(lam) - sum(mu)
    if d < 0 or not contains(lam, mu):
        return SymF(max(d, 0))
    out = SymF(d)
    if kind == "P":
        Pl, Qm = mac_P(lam), mac_Q(mu)
        for nu in partitions_of(d):
            c = hall_scalar(Pl, mul_symf(Qm, mac_Q(nu)))
            if c:
                out = out + mac_P(nu).scale(c)
    elif kind == "Q":
        for nu in partitions_of(d):
            c = lr_coeff(lam, mu, nu)
            if c:
                out = out + mac_Q(nu).scale(c)
    else:
        raise ValueError(f"kind must be 'P' or 'Q', got {kind!r}")
    return out


def p_expand_in_P(f: SymF) -> dict[Partition, RatFunc]:
    """Coordinates of f in the P basis, via <f, Q_nu>."""
    out = {}
    for nu in partitions_of(f.degree):
        c = hall_scalar(f, mac_Q(nu))
        if c:
            out[nu] = c
    return out


def pieri_expand(mu: Partition, r: int) -> dict[Partition, RatFunc]:
    """P_mu g_r = sum_lam phi_{lam/mu} P_lam, returned as {lam: phi}."""
    if r < 1:
        raise ValueError("pieri_expand needs r >= 1")
    return p_expand_in_P(mul_symf(mac_P(mu), g_in_p(r)))


def g_expansion(lam: Partition) -> dict[Partition, RatFunc]:
    """P_lam = sum_mu c_mu g_mu.

    Uses that (g_mu) and (m_mu) are dual bases, so c_mu = <P_lam, m_mu>.
    """
    P = mac_P(lam)
    out = {}
    for mu in partitions_of(sum(lam)):
        c = hall_scalar(P, m_in_p(mu))
        if c:
            out[mu] = c
    return out


def from_g_coords(d: int, coords: dict[Partition, RatFunc]) -> SymF:
    out = SymF(d)
    for mu, c in coords.items():
        out = out + g_lambda(mu).scale(c)
    return out


# -- principal specialization -------------------------------------------------

def qt_factorial(a, lam: Partition, t=T) -> RatFunc:
    """(a; q, t)_lam = prod_i (a t^(1-i); q)_{lam_i}."""
    a, t = as_ratfunc(a), as_ratfunc(t)
    out = ONE
    for i, p in enumerate(lam):
        out = out * qpoch(a * t ** (-i), p)
    return out


def hook_c(lam: Partition, n: int | None = None, t=T) -> RatFunc:
    """c_lam(q, t) from its product over 1 <= i < j <= n."""
    t = as_ratfunc(t)
    n = len(lam) if n is None else n
    if n < len(lam):
        raise ValueError("hook_c needs n >= length")
    parts = list(lam) + [0] * (n - len(lam))
    out = ONE
    for i in range(1, n + 1):
        out = out * qpoch(t ** (n - i + 1), parts[i - 1])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            k = parts[i - 1] - parts[j - 1]
            out = out * qpoch(t ** (j - i), k) / qpoch(t ** (j - i + 1), k)
    return out


def principal_spec(lam: Partition, a, n: int | None = None, t=T) -> RatFunc:
    """P_lam[(1 - a)/(1 - t)] in closed form."""
    lam = tuple(lam)
    t = as_ratfunc(t)
    n = len(lam) if n is None else n
    if n < len(lam):
        raise ValueError("principal_spec needs n >= length")
    val = t ** nstat(lam) * qt_factorial(a, lam, t) / hook_c(lam, n, t)
    if DEBUG and t ** nstat(lam) * qt_factorial(a, lam, t) / hook_c(lam, n + 1, t) != val:
        raise AssertionError(f"hook product depends on n for {lam}")
    return val


def duality_apply(lam: Partition, mu: Partition) -> tuple[SymF, SymF]:
    """(omega_{q,t} P_{lam/mu}(q,t), Q_{lam'/mu'}(t,q))."""
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    left = omega_uv(skew(lam, mu, "P"), Q, T)
    right = skew(conjugate(lam), conjugate(mu), "Q").map_coeffs(swap_qt)
    return left, right
