"""Identities used along the way: symmetrization, Cai's splitting, vanishing
constant terms, and the two combinatorial lemmas behind the root sets."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .aflt import Refused, VerifyReport, _timed
from .arith import ONE, Q, RatFunc, laurent_q_terms, qpoch_scalar, qpow, specialize_t
from .ct import CTStats, ct_product
from .laurent import LaurentPoly, qpoch_monomial, ratio
from .macdonald import skew
from .partitions import Partition, contains, format_partition, part
from .symfunc import Alphabet, h_lambda, sym_eval

MAX_RESAMPLE = 50


def _rand_frac(rng: random.Random, lo: int = 2, hi: int = 9) -> Fraction:
    """Small random rational, never 0 or 1."""
    while True:
        v = Fraction(rng.randint(-hi, hi), rng.randint(1, lo + hi))
        if v not in (0, 1, -1):
            return v


def fpoch(z: Fraction, q: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= 1 - z * q ** i
    return out


def dyson_factors(n: int, c: int, shift: int = 0, nvars: int | None = None, symmetric: bool = False):
    """(x_i/x_j)_c (q x_j/x_i)_c for i<j over slots shift..shift+n-1.

    With ``symmetric`` the second factor loses its q, giving prod_{i != j} (x_i/x_j)_c.
    """
    nv = n + shift if nvars is None else nvars
    out = []
    for i in range(shift, shift + n):
        for j in range(i + 1, shift + n):
            out.append((ONE, ratio(nv, i, j), c))
            out.append((ONE if symmetric else Q, ratio(nv, j, i), c))
    return out


# -- symmetrization -----------------------------------------------------------

def is_symmetric(f: LaurentPoly) -> bool:
    n = f.nvars
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if f.permute(perm) != f:
            return False
    return True


def equiv2_at(n: int, c: int, xs: list[Fraction], q: Fraction) -> tuple[Fraction, Fraction]:
    """Both sides of the symmetrized product identity at a numeric point."""
    left = Fraction(0)
    for w in permutations(range(n)):
        term = Fraction(1)
        for i in range(n):
            for j in range(i + 1, n):
                r = xs[w[j]] / xs[w[i]]
                term *= (1 - q ** c * r) / (1 - r)
        left += term
    right = Fraction(1)
    for i in range(1, n):
        right *= (1 - q ** ((i + 1) * c)) / (1 - q ** c)
    return left, right


def verify_symmetrization(n: int, c: int, f: LaurentPoly | None = None, seed: int = 0, points: int = 3) -> VerifyReport:
    f = LaurentPoly.constant(n, 1) if f is None else f

    def run(rep):
        if f.nvars != n:
            raise Refused(f"f has {f.nvars} variables, expected {n}")
        if c < 1:
            raise Refused("needs c >= 1")
        if not is_symmetric(f):
            raise Refused("f is not symmetric")
        stats = CTStats()
        rep.lhs = ct_product(f, dyson_factors(n, c), stats)
        const = ONE
        for i in range(1, n):
            const = const * qpoch_scalar((i + 1) * c, 1) / qpoch_scalar(c, 1)
        sym = ct_product(f, dyson_factors(n, c, symmetric=True), stats)
        rep.rhs = const * sym / factorial(n)
        rep.terms_peak = stats.terms_peak
        rep.equal = rep.lhs == rep.rhs
        if n <= 4:
            rng = random.Random(seed)
            good = 0
            for _ in range(points):
                for _ in range(MAX_RESAMPLE):
                    xs = [_rand_frac(rng) for _ in range(n)]
                    q = _rand_frac(rng)
                    if len(set(xs)) == n and q ** c != 1:
                        break
                else:
                    raise Refused("no pole-free sample point found")
                lv, rv = equiv2_at(n, c, xs, q)
                good += lv == rv
            rep.notes.append(f"symmetrized product identity holds at {good}/{points} random points")
            rep.equal = rep.equal and good == points
    return _timed("symmetrization", {"n": n, "c": c, "seed": seed}, run)


# -- Cai's splitting ----------------------------------------------------------

def cai_lhs(n: int, c: int, z: list[Fraction], w: Fraction, q: Fraction) -> Fraction:
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= fpoch(z[i] / z[j], q, c) * fpoch(q * z[j] / z[i], q, c)
    den = Fraction(1)
    for i in range(n):
        den *= fpoch(z[i] / w, q, c)
    return num / den


def cai_coefficient(n: int, c: int, i: int, j: int) -> LaurentPoly:
    """A_ij as a Laurent polynomial in z_1..z_n (slots 0..n-1); i is 1-based."""
    const = qpow(c * ((j + 1) * n - i - j)) / (qpoch_scalar(-j, j) * qpoch_scalar(1, c - j - 1))
    out = LaurentPoly.constant(n, const)
    s = i - 1
    for l in range(n):
        if l == s:
            continue
        mono = ratio(n, s, l)
        if l < s:
            out = out * qpoch_monomial(qpow(1 - c), mono, j) * qpoch_monomial(qpow(j + 1), mono, c - j)
        else:
            out = out * qpoch_monomial(qpow(-c), mono, j + 1) * qpoch_monomial(qpow(j + 1), mono, c - j - 1)
    for u in range(n):
        for v in range(u + 1, n):
            if s in (u, v):
                continue
            out = out * qpoch_monomial(ONE, ratio(n, u, v), c) * qpoch_monomial(Q, ratio(n, v, u), c)
    return out


def cai_rhs(n: int, c: int, coeffs: dict, z: list[Fraction], w: Fraction, q: Fraction) -> Fraction:
    out = Fraction(0)
    for (i, j), A in coeffs.items():
        out += A.evaluate(z, q) / (1 - q ** j * z[i - 1] / w)
    return out


def verify_cai_split(n: int, c: int, seed: int = 0, points: int = 3) -> VerifyReport:
    def run(rep):
        if n < 1 or c < 1:
            raise Refused("needs n >= 1 and c >= 1")
        coeffs = {(i, j): cai_coefficient(n, c, i, j) for i in range(1, n + 1) for j in range(c)}
        poly_ok = all(A and A.degree_in(i - 1)[0] >= 0 for (i, _), A in coeffs.items())
        rep.notes.append(f"every A_ij is a polynomial in z_i: {poly_ok}")
        rng = random.Random(seed)
        good = 0
        for _ in range(points):
            for _ in range(MAX_RESAMPLE):
                q = _rand_frac(rng)
                z = [_rand_frac(rng) for _ in range(n)]
                w = _rand_frac(rng)
                try:
                    lv = cai_lhs(n, c, z, w, q)
                    rv = cai_rhs(n, c, coeffs, z, w, q)
                except ZeroDivisionError:
                    continue
                break
            else:
                raise Refused("no pole-free sample point found")
            good += lv == rv
            rep.notes.append(f"q={q} z={[str(x) for x in z]} w={w}: {lv == rv}")
        rep.lhs, rep.rhs = RatFunc(good), RatFunc(points)
        rep.equal = poly_ok and good == points
    return _timed("cai_split", {"n": n, "c": c, "seed": seed}, run)


# -- vanishing constant terms -------------------------------------------------

def _monomial_inv(v: tuple[int, ...]) -> LaurentPoly:
    return LaurentPoly.monomial(tuple(-x for x in v))


def verify_vanishing_h(n: int, c: int, v: tuple[int, ...], lam: Partition) -> VerifyReport:
    """CT z^-v h_lam[(1-q^c)/(1-q) sum z] prod (z_i/z_j)_c (q z_j/z_i)_c = 0."""
    v = tuple(v)

    def run(rep):
        if len(v) != n:
            raise Refused(f"v needs {n} entries")
        if sum(v) != sum(lam):
            raise Refused("needs |v| = |lambda|")
        if not lam or part(lam, 1) <= max(v):
            raise Refused("needs lambda_1 > max(v)")
        A = Alphabet.plain(n, range(n)).scaled(((1, ONE), (-1, qpow(c))), ((1, ONE), (-1, Q)))
        F = _monomial_inv(v) * sym_eval(h_lambda(lam), A)
        stats = CTStats()
        rep.lhs = ct_product(F, dyson_factors(n, c), stats)
        rep.rhs = RatFunc(0)
        rep.terms_peak = stats.terms_peak
        rep.equal = not rep.lhs
    return _timed("vanishing_h", {"n": n, "c": c, "v": list(v), "lambda": format_partition(lam)}, run)


def verify_vanishing_skew(n: int, c: int, v: tuple[int, ...], lam: Partition, mu: Partition) -> VerifyReport:
    """CT x^-v P_{lam/mu}(x; q, q^c) prod (x_i/x_j)_c (q x_j/x_i)_c = 0."""
    v = tuple(v)

    def run(rep):
        if len(v) != n:
            raise Refused(f"v needs {n} entries")
        if c < 1:
            raise Refused("needs c >= 1")
        if not contains(lam, mu) or len(mu) >= len(lam):
            raise Refused("needs mu inside lambda with length(mu) < length(lambda)")
        if sum(lam) - sum(mu) != sum(v):
            raise Refused("needs |lambda| - |mu| = |v|")
        if part(lam, len(mu) + 1) <= max(v):
            raise Refused("needs lambda_{l(mu)+1} > max(v)")
        f = skew(lam, mu, "P").map_coeffs(lambda x: specialize_t(x, c))
        F = _monomial_inv(v) * sym_eval(f, Alphabet.plain(n, range(n)))
        stats = CTStats()
        rep.lhs = ct_product(F, dyson_factors(n, c), stats)
        rep.rhs = RatFunc(0)
        rep.terms_peak = stats.terms_peak
        rep.equal = not rep.lhs
    params = {"n": n, "c": c, "v": list(v), "lambda": format_partition(lam), "mu": format_partition(mu)}
    return _timed("vanishing_skew", params, run)


# -- the key lemma ------------------------------------------------------------

@dataclass(frozen=True)
class KeyCase:
    """kind 1: index (1-based); kind 2: pair (i, j); kind 3: permutation w and tvec."""

    kind: int
    index: int | None = None
    pair: tuple[int, int] | None = None
    w: tuple[int, ...] | None = None
    tvec: tuple[int, ...] | None = None


def case1_holds(k, b, i) -> bool:
    return 1 <= k[i - 1] <= b


def case2_holds(k, c, i, j) -> bool:
    return i < j and -c <= k[i - 1] - k[j - 1] <= c - 1


def case3_tvec(k, b, c, w) -> tuple[int, ...]:
    tv = [k[w[0] - 1] - b]
    for j in range(1, len(w)):
        tv.append(k[w[j] - 1] - k[w[j - 1] - 1] - c)
    return tuple(tv)


def case3_holds(k, b, c, t, w, tvec=None) -> bool:
    tv = case3_tvec(k, b, c, w)
    if tvec is not None and tuple(tvec) != tv:
        return False
    if any(x < 0 for x in tv) or not 1 <= sum(tv) <= t:
        return False
    prev = 0
    for j, wj in enumerate(w):
        if prev < wj and tv[j] <= 0:
            return False
        prev = wj
    return True


def verify_case(k, b, c, t, case: KeyCase) -> bool:
    if case.kind == 1:
        return case1_holds(k, b, case.index)
    if case.kind == 2:
        return case2_holds(k, c, *case.pair)
    return sorted(case.w) == list(range(1, len(k) + 1)) and case3_holds(k, b, c, t, case.w, case.tvec)


def key_lemma_classify(k, b: int, c: int, t: int) -> KeyCase:
    """A verified witness for one of the three alternatives.

    Cases 1 and 2 are scanned directly.  Otherwise the tournament with an
    arrow j -> i when k_i - k_j >= c (i < j) and i -> j when k_i - k_j <= -c-1
    is transitive, and its Hamilton path (vertices by decreasing out-degree)
    is the permutation w.
    """
    k = tuple(k)
    s = len(k)
    if s == 0 or any(not 1 <= x <= (s - 1) * c + b + t for x in k):
        raise Refused(f"needs 1 <= k_i <= (s-1)c+b+t = {(s - 1) * c + b + t}")
    for i in range(1, s + 1):
        if case1_holds(k, b, i):
            return KeyCase(1, index=i)
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            if case2_holds(k, c, i, j):
                return KeyCase(2, pair=(i, j))
    out = [0] * (s + 1)
    for i in range(1, s + 1):
        for j in range(i + 1, s + 1):
            if k[i - 1] - k[j - 1] >= c:
                out[j] += 1
            else:
                out[i] += 1
    w = tuple(sorted(range(1, s + 1), key=lambda v: -out[v]))
    if sorted(out[1:]) != list(range(s)):
        raise AssertionError(f"tournament for k={k} is not transitive")
    case = KeyCase(3, w=w, tvec=case3_tvec(k, b, c, w))
    if not verify_case(k, b, c, t, case):
        raise AssertionError(f"no alternative of the key lemma holds for k={k}, b={b}, c={c}, t={t}")
    return case


def brute_force_cases(k, b, c, t) -> set[int]:
    """Which alternatives hold, by exhaustive search."""
    s = len(k)
    kinds = set()
    if any(case1_holds(k, b, i) for i in range(1, s + 1)):
        kinds.add(1)
    if any(case2_holds(k, c, i, j) for i in range(1, s + 1) for j in range(i + 1, s + 1)):
        kinds.add(2)
    if case3_witness(k, b, c, t) is not None:
        kinds.add(3)
    return kinds


def case3_witness(k, b, c, t) -> tuple[int, ...] | None:
    for w in permutations(range(1, len(k) + 1)):
        if case3_holds(k, b, c, t, w):
            return w
    return None


def subs_alphabet_value(s: int, b: int, c: int, t: int, k) -> RatFunc:
    """-(q^{c-b-1} - q^a)/(1-q) x_0 - sum (1-q^c)/(1-q) x_i at a = -(s-1)c-b-t, x_i = q^{k_s - k_i}."""
    kk = (0,) + tuple(k)
    a = -(s - 1) * c - b - t
    x = [qpow(kk[s] - kk[i]) for i in range(s + 1)]
    one_q = 1 - Q
    L = -(qpow(c - b - 1) - qpow(a)) / one_q * x[0]
    for i in range(1, s + 1):
        L = L - (1 - qpow(c)) / one_q * x[i]
    return L


def subs_alphabet_check(s: int, b: int, c: int, t: int, k) -> VerifyReport:
    k = tuple(k)

    def run(rep):
        if len(k) != s or t < 1:
            raise Refused("needs s entries in k and t >= 1")
        if any(not 1 <= x <= (s - 1) * c + b + t for x in k):
            raise Refused("k outside 1..(s-1)c+b+t")
        if case3_witness(k, b, c, t) is None:
            raise Refused("the third alternative of the key lemma does not hold for k")
        L = subs_alphabet_value(s, b, c, t, k)
        terms = laurent_q_terms(L)
        rep.lhs = L
        rep.rhs = RatFunc(t - 1)
        ok = terms is not None and all(v == 1 for v in terms.values()) and len(terms) == t - 1
        rep.notes.append(f"exponents {sorted(terms) if terms is not None else None}")
        rep.equal = ok
    return _timed("subs_alphabet", {"s": s, "b": b, "c": c, "t": t, "k": list(k)}, run)
