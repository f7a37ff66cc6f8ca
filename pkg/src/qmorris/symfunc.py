"""Homogeneous symmetric functions in the power-sum basis, plethystic evaluation.

A :class:`SymF` stores one homogeneous degree as {partition: coefficient of p_partition}.
Plethystic alphabets are finite lists of :class:`Letter`; each letter is a
monomial x^mono times a closed-form weight N/D, where N and D are signed
sums of "letters" (RatFunc values raised to the r-th power under p_r), and
an optional binomial multiplier k entering p_r linearly.
"""
from __future__ import annotations

import threading
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cache
from math import factorial

import flint

from .arith import ONE, ZERO, PoleError, Q, RatFunc, T, as_ratfunc
from .laurent import ExpVec, LaurentPoly
from .partitions import Partition, multiplicities, partitions_of


def zee(lam: Partition) -> int:
    out = 1
    for i, m in multiplicities(lam).items():
        out *= i ** m * factorial(m)
    return out


@cache
def hall_weight(rho: Partition) -> RatFunc:
    """<p_rho, p_rho> = z_rho prod (1 - q^rho_i)/(1 - t^rho_i)."""
    w = RatFunc(zee(rho))
    for r in rho:
        w = w * (ONE - Q ** r) / (ONE - T ** r)
    return w


class SymF:
    __slots__ = ("coeffs", "degree")

    def __init__(self, degree: int, coeffs: dict[Partition, RatFunc] | None = None):
        self.degree = degree
        self.coeffs: dict[Partition, RatFunc] = {}
        for lam, c in (coeffs or {}).items():
            if sum(lam) != degree:
                raise ValueError(f"p_{lam} does not have degree {degree}")
            c = as_ratfunc(c)
            if c:
                self.coeffs[tuple(lam)] = c

    @classmethod
    def _wrap(cls, degree, coeffs):
        obj = object.__new__(cls)
        obj.degree = degree
        obj.coeffs = coeffs
        return obj

    @classmethod
    def one(cls) -> SymF:
        return cls(0, {(): ONE})

    def _check(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other: SymF) -> SymF:
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return SymF._wrap(self.degree, out)

    def __neg__(self):
        return SymF._wrap(self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> SymF:
        c = as_ratfunc(c)
        if not c:
            return SymF(self.degree)
        return SymF._wrap(self.degree, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymF):
            return mul_symf(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, SymF) and self.degree == other.degree and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def map_coeffs(self, fn) -> SymF:
        out = {}
        for k, v in self.coeffs.items():
            w = fn(v)
            if w:
                out[k] = w
        return SymF._wrap(self.degree, out)

    def p_basis_lines(self) -> list[str]:
        return [f"{self.coeffs[lam]} · p_({','.join(map(str, lam))})" for lam in sorted(self.coeffs)]

    def __str__(self):
        return "\n".join(self.p_basis_lines()) or "0"

    def __repr__(self):
        return f"SymF(degree={self.degree}, {len(self.coeffs)} terms)"


def zero(degree: int) -> SymF:
    return SymF(degree)


def power_sum(rho: Partition) -> SymF:
    return SymF(sum(rho), {tuple(rho): ONE})


def mul_symf(f: SymF, g: SymF) -> SymF:
    out: dict[Partition, RatFunc] = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            key = tuple(sorted(a + b, reverse=True))
            s = out.get(key)
            prod = ca * cb
            out[key] = prod if s is None else s + prod
    return SymF._wrap(f.degree + g.degree, {k: v for k, v in out.items() if v})


def hall_scalar(f: SymF, g: SymF) -> RatFunc:
    if f.degree != g.degree:
        return ZERO
    acc = ZERO
    small, big = (f, g) if len(f.coeffs) <= len(g.coeffs) else (g, f)
    for rho, c in small.coeffs.items():
        d = big.coeffs.get(rho)
        if d is not None:
            acc = acc + c * d * hall_weight(rho)
    return acc


def omega_uv(f: SymF, u, v) -> SymF:
    """omega_{u,v}: p_r -> (-1)^(r-1) (1-u^r)/(1-v^r) p_r."""
    u, v = as_ratfunc(u), as_ratfunc(v)
    if v == ONE or v == -ONE:
        raise ValueError("omega_{u,v} needs v != +-1")
    out = {}
    for rho, c in f.coeffs.items():
        w = ONE if (sum(rho) - len(rho)) % 2 == 0 else -ONE
        for r in rho:
            w = w * (ONE - u ** r) / (ONE - v ** r)
        out[rho] = c * w
    return SymF._wrap(f.degree, out)


# -- p <-> m transition -----------------------------------------------------

def _count_fillings(rho: Partition, lam: Partition) -> int:
    """Coefficient of m_lam in p_rho: ways to drop the parts of rho into the rows of lam."""
    if sum(rho) != sum(lam):
        return 0

    @cache
    def rec(i, caps):
        if i == len(rho):
            return 1 if not any(caps) else 0
        total = 0
        for j, cap in enumerate(caps):
            if cap >= rho[i]:
                total += rec(i + 1, caps[:j] + (cap - rho[i],) + caps[j + 1:])
        return total

    return rec(0, tuple(lam))


_transition_lock = threading.Lock()
_transition_cache: dict[int, tuple[tuple[Partition, ...], list[list[int]], flint.fmpq_mat]] = {}


def p_to_m_matrix(d: int):
    """(partitions of d, A, A^-1) with p_rho = sum_lam A[rho][lam] m_lam."""
    hit = _transition_cache.get(d)
    if hit is not None:
        return hit
    with _transition_lock:
        hit = _transition_cache.get(d)
        if hit is not None:
            return hit
        parts = partitions_of(d)
        a = [[_count_fillings(rho, lam) for lam in parts] for rho in parts]
        inv = flint.fmpq_mat(a).inv() if parts else None
        _transition_cache[d] = (parts, a, inv)
        return _transition_cache[d]


def m_in_p(lam: Partition) -> SymF:
    d = sum(lam)
    parts, _, inv = p_to_m_matrix(d)
    if d == 0:
        return SymF.one()
    i = parts.index(tuple(lam))
    out = {}
    for j, rho in enumerate(parts):
        c = inv[i, j]
        if c != 0:
            out[rho] = RatFunc(int(c.p), int(c.q))
    return SymF(d, out)


def m_coords(f: SymF) -> dict[Partition, RatFunc]:
    """Coordinates of f in the monomial basis."""
    parts, a, _ = p_to_m_matrix(f.degree)
    out = {}
    for j, lam in enumerate(parts):
        acc = ZERO
        for rho, c in f.coeffs.items():
            k = a[parts.index(rho)][j]
            if k:
                acc = acc + c * k
        if acc:
            out[lam] = acc
    return out


def from_m_coords(d: int, coords: dict[Partition, RatFunc]) -> SymF:
    out = SymF(d)
    for lam, c in coords.items():
        out = out + m_in_p(lam).scale(c)
    return out


@cache
def h_in_p(r: int) -> SymF:
    return SymF(r, {rho: RatFunc(1, zee(rho)) for rho in partitions_of(r)})


@cache
def g_in_p(r: int) -> SymF:
    out = {}
    for rho in partitions_of(r):
        c = RatFunc(1, zee(rho))
        for x in rho:
            c = c * (ONE - T ** x) / (ONE - Q ** x)
        out[rho] = c
    return SymF(r, out)


def product_basis(lam: Partition, single) -> SymF:
    out = SymF.one()
    for r in lam:
        out = mul_symf(out, single(r))
    return out


def h_lambda(lam: Partition) -> SymF:
    return product_basis(lam, h_in_p)


def g_lambda(lam: Partition) -> SymF:
    return product_basis(lam, g_in_p)


# -- plethystic alphabets -----------------------------------------------------

Signed = tuple[tuple[int, RatFunc], ...]


@dataclass(frozen=True)
class Letter:
    """k * (sum_i s_i a_i)/(sum_j s'_j b_j) * x^mono.

    Under p_r the a_i, b_j are raised to the r-th power while the signs s and
    the multiplier k pass through unchanged.
    """

    mono: ExpVec
    num: Signed = ((1, ONE),)
    den: Signed = ((1, ONE),)
    k: RatFunc = ONE

    def weight_at(self, r: int) -> RatFunc:
        n = ZERO
        for s, a in self.num:
            n = n + (a ** r if s > 0 else -(a ** r))
        d = ZERO
        for s, b in self.den:
            d = d + (b ** r if s > 0 else -(b ** r))
        if not d:
            raise PoleError(f"alphabet denominator vanishes at p_{r}")
        return self.k * n / d


@dataclass(frozen=True)
class Alphabet:
    nvars: int
    letters: tuple[Letter, ...] = field(default_factory=tuple)

    def __add__(self, other: Alphabet) -> Alphabet:
        if self.nvars != other.nvars:
            raise ValueError("alphabets over different variable sets")
        return Alphabet(self.nvars, self.letters + other.letters)

    @staticmethod
    def plain(nvars: int, slots: Iterable[int]) -> Alphabet:
        """x_i for i in slots, each a plain letter."""
        letters = []
        for i in slots:
            e = [0] * nvars
            e[i] = 1
            letters.append(Letter(tuple(e)))
        return Alphabet(nvars, tuple(letters))

    @staticmethod
    def letter(nvars: int, weight, mono: ExpVec | None = None) -> Alphabet:
        """Single letter weight * x^mono (p_r -> weight^r x^(r mono))."""
        mono = (0,) * nvars if mono is None else tuple(mono)
        return Alphabet(nvars, (Letter(mono, ((1, as_ratfunc(weight)),)),))

    @staticmethod
    def scalars(values: Sequence) -> Alphabet:
        """Variable-free alphabet of plain letters with the given values."""
        return Alphabet(0, tuple(Letter((), ((1, as_ratfunc(v)),)) for v in values))

    @staticmethod
    def binomial(nvars: int, k, mono: ExpVec | None = None) -> Alphabet:
        """k * x^mono with k a binomial element (p_r -> k x^(r mono))."""
        mono = (0,) * nvars if mono is None else tuple(mono)
        return Alphabet(nvars, (Letter(mono, k=as_ratfunc(k)),))

    @staticmethod
    def ratio(nvars: int, num: Signed, den: Signed, mono: ExpVec | None = None, k=ONE) -> Alphabet:
        mono = (0,) * nvars if mono is None else tuple(mono)
        num = tuple((s, as_ratfunc(a)) for s, a in num)
        den = tuple((s, as_ratfunc(b)) for s, b in den)
        return Alphabet(nvars, (Letter(mono, num, den, as_ratfunc(k)),))

    @staticmethod
    def geometric(nvars: int, u, v, mono: ExpVec | None = None, prefactor=ONE) -> Alphabet:
        """prefactor * (1 - u)/(1 - v) * x^mono; p_r gives prefactor^r (1-u^r)/(1-v^r) x^(r mono)."""
        s = as_ratfunc(prefactor)
        return Alphabet.ratio(nvars, ((1, s), (-1, s * as_ratfunc(u))), ((1, ONE), (-1, as_ratfunc(v))), mono)

    def scaled(self, num: Signed, den: Signed = ((1, ONE),)) -> Alphabet:
        """Plethystic product (N/D) * A for every letter of A."""
        out = []
        for L in self.letters:
            n2 = tuple((s1 * s2, a1 * as_ratfunc(a2)) for s1, a1 in L.num for s2, a2 in num)
            d2 = tuple((s1 * s2, b1 * as_ratfunc(b2)) for s1, b1 in L.den for s2, b2 in den)
            out.append(Letter(L.mono, n2, d2, L.k))
        return Alphabet(self.nvars, tuple(out))


def p_eval(A: Alphabet, r: int) -> LaurentPoly:
    if r < 1:
        raise ValueError("p_r needs r >= 1")
    terms: dict[ExpVec, RatFunc] = {}
    for L in A.letters:
        e = tuple(r * x for x in L.mono)
        w = L.weight_at(r)
        s = terms.get(e)
        terms[e] = w if s is None else s + w
    return LaurentPoly(A.nvars, terms)


def sym_eval(f: SymF, A: Alphabet) -> LaurentPoly:
    """f[A] as a Laurent polynomial in the alphabet's variables."""
    pr: dict[int, LaurentPoly] = {}
    prods: dict[Partition, LaurentPoly] = {(): LaurentPoly.constant(A.nvars, 1)}

    def p_rho(rho):
        hit = prods.get(rho)
        if hit is None:
            r = rho[-1]
            if r not in pr:
                pr[r] = p_eval(A, r)
            hit = p_rho(rho[:-1]) * pr[r]
            prods[rho] = hit
        return hit

    out = LaurentPoly(A.nvars)
    for rho in sorted(f.coeffs):
        out = out + p_rho(rho).scale(f.coeffs[rho])
    return out


def sym_eval_scalar(f: SymF, A: Alphabet) -> RatFunc:
    """f[A] for a variable-free alphabet."""
    if A.nvars != 0:
        raise ValueError("sym_eval_scalar needs a variable-free alphabet")
    return sym_eval(f, A).ct_all()


def specialize(f: SymF, fn) -> SymF:
    return f.map_coeffs(fn)

