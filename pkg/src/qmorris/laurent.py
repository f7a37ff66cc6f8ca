"""Sparse Laurent polynomials in x_0..x_{n} with RatFunc coefficients."""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from .arith import ONE, ZERO, Q, RatFunc, as_ratfunc, eval_point

ExpVec = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[ExpVec, RatFunc] | None = None):
        self.nvars = nvars
        self.terms: dict[ExpVec, RatFunc] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent vector {e} does not have {nvars} slots")
                c = as_ratfunc(c)
                if c:
                    self.terms[e] = c

    @classmethod
    def _wrap(cls, nvars, terms):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, c=1) -> LaurentPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> LaurentPoly:
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, nvars: int, i: int) -> LaurentPoly:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): ONE})

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._wrap(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> LaurentPoly:
        c = as_ratfunc(c)
        if not c:
            return LaurentPoly(self.nvars)
        return LaurentPoly._wrap(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[ExpVec, RatFunc] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                s = out.get(e)
                out[e] = prod if s is None else s + prod
        return LaurentPoly._wrap(self.nvars, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.nvars, other)
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- structure --------------------------------------------------------
    def coeff(self, e: Iterable[int]) -> RatFunc:
        return self.terms.get(tuple(e), ZERO)

    def ct_var(self, i: int) -> LaurentPoly:
        """Constant term in x_i (other variables kept)."""
        return LaurentPoly._wrap(self.nvars, {e: c for e, c in self.terms.items() if e[i] == 0})

    def ct_all(self) -> RatFunc:
        return self.terms.get((0,) * self.nvars, ZERO)

    def degree_in(self, i: int) -> tuple[int, int]:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        exps = [e[i] for e in self.terms]
        return min(exps), max(exps)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.total_degrees()
        if len(degs) > 1:
            return False
        return degree is None or not degs or degs == {degree}

    def map_coeffs(self, fn) -> LaurentPoly:
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return LaurentPoly._wrap(self.nvars, out)

    def substitute_var(self, i: int, value: RatFunc) -> LaurentPoly:
        """Set x_i = value (a RatFunc), leaving slot i at exponent 0."""
        value = as_ratfunc(value)
        out = LaurentPoly(self.nvars)
        for e, c in self.terms.items():
            e2 = e[:i] + (0,) + e[i + 1:]
            out = out + LaurentPoly._wrap(self.nvars, {e2: c * value ** e[i]})
        return out

    def permute(self, perm: Sequence[int]) -> LaurentPoly:
        """The polynomial f(x_{perm[0]}, ..., x_{perm[n-1]})."""
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * self.nvars
            for slot, src in enumerate(perm):
                e2[src] += e[slot]
            out[tuple(e2)] = c
        return LaurentPoly._wrap(self.nvars, out)

    def evaluate(self, point: Sequence, q0, t0=0) -> Fraction:
        """Exact value at x = point, q = q0, t = t0."""
        acc = Fraction(0)
        pt = [Fraction(v) for v in point]
        for e, c in self.terms.items():
            m = Fraction(1)
            for v, k in zip(pt, e):
                if k:
                    m *= v ** k
            acc += eval_point(c, q0, t0) * m
        return acc

    # -- rendering --------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        lines = []
        for e in sorted(self.terms):
            mono = "*".join(f"x{i}^{k}" for i, k in enumerate(e) if k)
            lines.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(lines)

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {len(self.terms)} terms)"


def qpoch_monomial(coef, mono: Sequence[int], k: int) -> LaurentPoly:
    """(coef * x^mono; q)_k = prod_{i<k} (1 - coef q^i x^mono)."""
    if k < 0:
        raise ValueError("qpoch_monomial needs k >= 0")
    coef = as_ratfunc(coef)
    n = len(mono)
    mono = tuple(mono)
    out = LaurentPoly.constant(n, 1)
    c = coef
    for _ in range(k):
        out = mul_binomial(out, c, mono)
        c = c * Q
    return out


def mul_binomial(f: LaurentPoly, c: RatFunc, mono: ExpVec) -> LaurentPoly:
    """f * (1 - c x^mono) without a general convolution."""
    if not c:
        return f
    out = dict(f.terms)
    for e, v in f.terms.items():
        e2 = tuple(x + y for x, y in zip(e, mono))
        s = out.get(e2)
        term = -(v * c)
        s = term if s is None else s + term
        if s:
            out[e2] = s
        else:
            del out[e2]
    return LaurentPoly._wrap(f.nvars, out)


def unit_vec(nvars: int, pos: dict[int, int]) -> ExpVec:
    """Exponent vector with the given {slot: exponent} entries."""
    e = [0] * nvars
    for i, k in pos.items():
        e[i] += k
    return tuple(e)


def ratio(nvars: int, i: int, j: int) -> ExpVec:
    """Exponent vector of x_i / x_j."""
    return unit_vec(nvars, {i: 1, j: -1})
