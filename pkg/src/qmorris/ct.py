"""Constant terms of (small Laurent polynomial) x (product of q-shifted factorials).

CT[F * G] = sum_m F[m] G[-m], so G only needs its coefficients at the
exponents -m, m in supp F.  G is expanded one linear factor at a time and
terms that can no longer reach any target (per-variable exponent bounds
of the factors still to come) are dropped immediately.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .arith import _P1, _QP, ZERO, RatFunc, as_ratfunc
from .laurent import ExpVec, LaurentPoly

# (coef, mono, k) stands for (coef * x^mono; q)_k
PochFactor = tuple[RatFunc, ExpVec, int]


@dataclass
class CTStats:
    linear_factors: int = 0
    terms_peak: int = 0
    terms_final: int = 0


def linear_factors(factors: Sequence[PochFactor]):
    """Expand (c x^m; q)_k into its k factors (1 - c q^i x^m) as raw (num, den, mono)."""
    out = []
    for coef, mono, k in factors:
        coef = as_ratfunc(coef)
        for i in range(k):
            out.append((coef.num * _QP ** i, coef.den, tuple(mono)))
    return out


def expand_product(nvars: int, factors: Sequence[PochFactor], targets=None, stats: CTStats | None = None):
    """Expand prod of factors as {exponent: poly}, scaled by a common denominator.

    Returns (terms, den) with the product equal to terms / den.  With
    ``targets`` only terms able to land on one of the target exponents are kept.
    """
    lin = linear_factors(factors)
    # factors touching few terms early, wide ones late, keeps the front small
    if stats is not None:
        stats.linear_factors = len(lin)
    den = _P1
    terms = {(0,) * nvars: _P1}
    if targets is not None:
        targets = list(targets)
        if not targets:
            return {}, den
        tmin = [min(t[v] for t in targets) for v in range(nvars)]
        tmax = [max(t[v] for t in targets) for v in range(nvars)]
        # suffix bounds of what the remaining factors can still add
        lo = [[0] * nvars for _ in range(len(lin) + 1)]
        hi = [[0] * nvars for _ in range(len(lin) + 1)]
        for idx in range(len(lin) - 1, -1, -1):
            m = lin[idx][2]
            for v in range(nvars):
                lo[idx][v] = lo[idx + 1][v] + min(0, m[v])
                hi[idx][v] = hi[idx + 1][v] + max(0, m[v])
    peak = 1
    for idx, (cn, cd, mono) in enumerate(lin):
        new = {}
        unit = cd == 1
        if not unit:
            den = den * cd
        for e, v in terms.items():
            base = v if unit else v * cd
            s = new.get(e)
            new[e] = base if s is None else s + base
            e2 = tuple(x + y for x, y in zip(e, mono))
            s = new.get(e2)
            term = v * cn
            new[e2] = -term if s is None else s - term
        if targets is not None:
            rl, rh = lo[idx + 1], hi[idx + 1]
            terms = {
                e: v for e, v in new.items()
                if not v.is_zero() and all(
                    e[k] + rl[k] <= tmax[k] and e[k] + rh[k] >= tmin[k] for k in range(nvars))
            }
        else:
            terms = {e: v for e, v in new.items() if not v.is_zero()}
        peak = max(peak, len(terms))
    if stats is not None:
        stats.terms_peak = max(stats.terms_peak, peak)
        stats.terms_final = len(terms)
    return terms, den


def ct_product(F: LaurentPoly, factors: Sequence[PochFactor], stats: CTStats | None = None) -> RatFunc:
    """Constant term of F * prod (c x^m; q)_k."""
    if not F:
        return ZERO
    targets = {tuple(-x for x in e) for e in F.terms}
    terms, den = expand_product(F.nvars, factors, targets, stats)
    acc = ZERO
    for e, c in F.terms.items():
        g = terms.get(tuple(-x for x in e))
        if g is not None:
            acc = acc + c * RatFunc.from_poly(g)
    return acc / RatFunc.from_poly(den) if den != 1 else acc


def product_poly(nvars: int, factors: Sequence[PochFactor]) -> LaurentPoly:
    """The full product as a LaurentPoly (no pruning)."""
    terms, den = expand_product(nvars, factors)
    inv = RatFunc.from_poly(den).inverse()
    return LaurentPoly(nvars, {e: RatFunc.from_poly(v) * inv for e, v in terms.items()})
