"""Exact arithmetic in Q(q, t).

Polynomials in the formal parameters q and t are flint ``fmpz_mpoly``
objects over a fixed lex context (q before t).  ``RatFunc`` is the
fraction field element used as the coefficient type everywhere else.
Rational scalars are plain :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import flint

BigRat = Fraction

CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "lex")
_QP, _TP = CTX.gens()
_P0 = CTX.from_dict({})
_P1 = CTX.from_dict({(0, 0): 1})


class PoleError(ZeroDivisionError):
    """A denominator vanished (division by zero, pole at a point, bad specialization)."""


def _as_poly(x):
    if isinstance(x, flint.fmpz_mpoly):
        return x
    return CTX.from_dict({(0, 0): int(x)}) if x else _P0


def _poly_terms(p):
    """Sorted [((deg_q, deg_t), int coeff)] with plain Python ints."""
    return sorted(((int(m[0]), int(m[1])), int(c)) for m, c in zip(p.monoms(), p.coeffs()))


def poly_str(p) -> str:
    """Expanded rendering, terms ascending q-major then t."""
    terms = _poly_terms(p)
    if not terms:
        return "0"
    out = []
    for k, ((dq, dt), c) in enumerate(terms):
        factors = []
        if dq:
            factors.append("q" if dq == 1 else f"q^{dq}")
        if dt:
            factors.append("t" if dt == 1 else f"t^{dt}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


class RatFunc:
    """Element of Q(q, t) kept in lowest terms.

    Canonical form: gcd(num, den) = 1 over Z[q, t] and the lex-leading
    coefficient of ``den`` is positive.  Equality is then structural.
    """

    __slots__ = ("_poly", "den", "num")

    def __init__(self, num=0, den=1):
        n1, d1 = _split(num)
        n2, d2 = _split(den)
        n, d = n1 * d2, d1 * n2
        if d.is_zero():
            raise PoleError("zero denominator")
        self.num, self.den, self._poly = _canon(n, d)

    @classmethod
    def _raw(cls, num, den, poly=None):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._poly = (den == 1) if poly is None else poly
        return obj

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, _P1, True)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_poly(self) -> bool:
        return self._poly

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return RatFunc._raw(-self.num, self.den, self._poly)

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if self._poly and other._poly:
            return RatFunc._raw(self.num + other.num, _P1, True)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc._from_canon(self.num + other.num, self.den)
        return RatFunc._from_canon(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if self._poly and other._poly:
            return RatFunc._raw(self.num * other.num, _P1, True)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        # cross-cancel so the product stays reduced
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1 = self.num if g1 == 1 else self.num / g1
        d2 = other.den if g1 == 1 else other.den / g1
        n2 = other.num if g2 == 1 else other.num / g2
        d1 = self.den if g2 == 1 else self.den / g2
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise PoleError("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k, self._poly)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = _coerce(other)
            if other is NotImplemented:
                return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(_poly_terms(self.num)), tuple(_poly_terms(self.den))))

    # -- rendering --------------------------------------------------------
    def __str__(self):
        if self._poly:
            return poly_str(self.num)
        ns, ds = poly_str(self.num), poly_str(self.den)
        if len(self.num.monoms()) > 1:
            ns = f"({ns})"
        if len(self.den.monoms()) > 1 or int(self.den.coeffs()[0]) != 1 and not self.den.is_constant():
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"RatFunc({self})"

    @classmethod
    def _from_canon(cls, num, den):
        n, d, p = _canon(num, den)
        return cls._raw(n, d, p)

    # -- helpers used by other modules ----------------------------------
    def map_polys(self, fn):
        """Apply a ring map to num and den and re-canonicalize."""
        d = fn(self.den)
        if d.is_zero():
            raise PoleError("denominator vanishes under substitution")
        return RatFunc._from_canon(fn(self.num), d)

    def degrees(self):
        """((num deg_q, num deg_t), (den deg_q, den deg_t))."""
        return tuple(self.num.degrees()), tuple(self.den.degrees())

    def involves_t(self) -> bool:
        return self.num.degrees()[1] > 0 or self.den.degrees()[1] > 0


def _split(x):
    if isinstance(x, RatFunc):
        return x.num, x.den
    if isinstance(x, flint.fmpz_mpoly):
        return x, _P1
    if isinstance(x, int):
        return _as_poly(x), _P1
    if isinstance(x, Rational):
        x = Fraction(x)
        return _as_poly(x.numerator), _as_poly(x.denominator)
    raise TypeError(f"cannot build RatFunc from {type(x).__name__}")


def _canon(n, d):
    if n.is_zero():
        return _P0, _P1, True
    g = n.gcd(d)
    if g != 1:
        n = n / g
        d = d / g
    if d.leading_coefficient() < 0:
        n, d = -n, -d
    return n, d, d == 1


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, flint.fmpz_mpoly)):
        return RatFunc(x)
    if isinstance(x, Rational):
        return RatFunc(Fraction(x))
    return NotImplemented


ZERO = RatFunc._raw(_P0, _P1, True)
ONE = RatFunc._raw(_P1, _P1, True)
Q = RatFunc._raw(_QP, _P1, True)
T = RatFunc._raw(_TP, _P1, True)


def as_ratfunc(x) -> RatFunc:
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")
    return r


def qpow(e: int) -> RatFunc:
    """q**e for any integer e."""
    if e >= 0:
        return RatFunc._raw(_QP ** e, _P1, True)
    return RatFunc._raw(_P1, _QP ** (-e), False)


def tpow(e: int) -> RatFunc:
    if e >= 0:
        return RatFunc._raw(_TP ** e, _P1, True)
    return RatFunc._raw(_P1, _TP ** (-e), False)


def qpoch(z, k: int) -> RatFunc:
    """(z; q)_k for integer k, including the k < 0 convention 1/(z q^k)_{-k}."""
    z = as_ratfunc(z)
    if k == 0:
        return ONE
    if k > 0:
        out = ONE
        zi = z
        for _ in range(k):
            out = out * (ONE - zi)
            zi = zi * Q
        return out
    den = qpoch(z * qpow(k), -k)
    if den.is_zero():
        raise PoleError(f"(z)_{k} has a vanishing factor")
    return den.inverse()


def qpoch_scalar(base_exp: int, k: int) -> RatFunc:
    """(q^base_exp; q)_k."""
    if k > 0:
        # stays in Z[q, 1/q]; product of (1 - q^e) without gcd work
        out = ONE
        for e in range(base_exp, base_exp + k):
            out = out * (ONE - qpow(e))
        return out
    if k == 0:
        return ONE
    if base_exp + k <= 0 <= base_exp - 1:
        raise PoleError(f"(q^{base_exp})_{k}: factor (1 - q^0) in the denominator")
    return qpoch_scalar(base_exp + k, -k).inverse()


def qbinom(n: int, k: int) -> RatFunc:
    """Gaussian binomial [n choose k]_q for integer n and k >= 0."""
    if k < 0:
        raise ValueError("qbinom needs k >= 0")
    return qpoch_scalar(n - k + 1, k) / qpoch_scalar(1, k)


def specialize_t(f: RatFunc, c: int) -> RatFunc:
    """Substitute t = q**c (c >= 0)."""
    if c < 0:
        raise ValueError("specialize_t needs c >= 0")
    if not f.involves_t():
        return f
    tc = _QP ** c
    return f.map_polys(lambda p: p.compose(_QP, tc))


def substitute(f: RatFunc, q_to: RatFunc, t_to: RatFunc) -> RatFunc:
    """General substitution q -> q_to, t -> t_to (both rational functions)."""
    # bring both images over a common denominator and homogenize
    def image(p):
        acc = ZERO
        for (dq, dt), c in _poly_terms(p):
            acc = acc + c * q_to ** dq * t_to ** dt
        return acc

    num, den = image(f.num), image(f.den)
    if den.is_zero():
        raise PoleError("denominator vanishes under substitution")
    return num / den


def swap_qt(f: RatFunc) -> RatFunc:
    """The ring automorphism exchanging q and t."""
    return f.map_polys(lambda p: p.compose(_TP, _QP))


def _poly_at(p, q0: Fraction, t0: Fraction) -> Fraction:
    acc = Fraction(0)
    for (dq, dt), c in _poly_terms(p):
        acc += c * q0 ** dq * t0 ** dt
    return acc


def eval_point(f: RatFunc, q0, t0=0) -> Fraction:
    """Exact value of f at (q0, t0); raises PoleError at a pole."""
    q0, t0 = Fraction(q0), Fraction(t0)
    d = _poly_at(f.den, q0, t0)
    if d == 0:
        raise PoleError(f"pole at q={q0}, t={t0}")
    return _poly_at(f.num, q0, t0) / d


def laurent_q_terms(f: RatFunc) -> dict[int, Fraction] | None:
    """If f is a Laurent polynomial in q alone, return {exponent: coeff}; else None."""
    if f.involves_t():
        return None
    den = f.den
    if len(den.monoms()) != 1:
        return None
    ((dq, _), dc), = _poly_terms(den)
    return {m[0] - dq: Fraction(c, dc) for m, c in _poly_terms(f.num)}
