"""Property suites run from the CLI and the acceptance tests.

Each suite returns a list of VerifyReport records; a property that holds
has equal=True.  Random inputs come from ``random.Random(seed)`` only.
"""
from __future__ import annotations

import random
from collections.abc import Callable
from fractions import Fraction
from itertools import combinations, permutations, product

from .aflt import VerifyReport, _timed
from .arith import ONE, ZERO, Q, RatFunc, T, as_ratfunc, qpoch, swap_qt, tpow
from .laurent import LaurentPoly
from .lemmas import (
    _rand_frac,
    brute_force_cases,
    case3_witness,
    key_lemma_classify,
    subs_alphabet_check,
    verify_cai_split,
    verify_case,
    verify_symmetrization,
    verify_vanishing_h,
    verify_vanishing_skew,
)
from .macdonald import (
    b_norm,
    check_macdonald_degree,
    duality_apply,
    from_g_coords,
    g_expansion,
    mac_P,
    mac_Q,
    p_expand_in_P,
    pieri_expand,
    principal_spec,
    skew,
)
from .partitions import (
    Partition,
    conjugate,
    dominance_leq,
    enumerate_partitions,
    format_partition,
    horizontal_strips,
    part,
    partitions_of,
    sub_partitions,
)
from .symfunc import (
    Alphabet,
    SymF,
    g_in_p,
    h_in_p,
    hall_scalar,
    m_in_p,
    mul_symf,
    p_eval,
    power_sum,
    sym_eval,
    sym_eval_scalar,
)

SUITES = ("mac", "symfunc", "cai", "keylemma", "vanish")


def _prop(check: str, params: dict, fn: Callable[[VerifyReport], bool]) -> VerifyReport:
    def run(rep):
        rep.equal = bool(fn(rep))
    return _timed(check, params, run)


def _lp(lam: Partition) -> dict:
    return {"lambda": format_partition(lam)}


def _scalars(rng: random.Random, k: int) -> Alphabet:
    return Alphabet.scalars([_rand_frac(rng) for _ in range(k)])


def _nonempty(maxsize: int):
    return [lam for lam in enumerate_partitions(maxsize) if lam]


# -- Macdonald ----------------------------------------------------------------

def mac_suite(seed: int = 0, maxsize: int = 4) -> list[VerifyReport]:
    rng = random.Random(seed)
    out: list[VerifyReport] = []
    lams = _nonempty(maxsize)

    for d in range(1, maxsize + 1):
        def tri(rep, d=d):
            check_macdonald_degree({lam: mac_P(lam) for lam in partitions_of(d)})
            return True
        out.append(_prop("mac.triangular_orthogonal", {"degree": d}, tri))

    for d in range(1, maxsize + 1):
        def dual(rep, d=d):
            ps = partitions_of(d)
            return all(hall_scalar(mac_P(a), mac_Q(b)) == (ONE if a == b else 0) for a in ps for b in ps)
        out.append(_prop("mac.PQ_dual_bases", {"degree": d}, dual))

    for r in range(1, maxsize + 1):
        out.append(_prop("mac.P_row_vs_g", {"r": r},
                         lambda rep, r=r: mac_P((r,)) == g_in_p(r).scale(qpoch(Q, r) / qpoch(T, r))))

    for lam in lams:
        for mu in sub_partitions(lam):
            ps = {"lambda": format_partition(lam), "mu": format_partition(mu)}

            def skew_pq(rep, lam=lam, mu=mu):
                # Q_{lam/mu} = b_lam / b_mu P_{lam/mu}, the two built from different pairings
                return skew(lam, mu, "Q") == skew(lam, mu, "P").scale(b_norm(lam) / b_norm(mu))
            out.append(_prop("mac.skew_PQ_normalization", ps, skew_pq))

            def skew_pair(rep, lam=lam, mu=mu):
                f = skew(lam, mu, "P")
                return all(hall_scalar(f, mac_Q(nu)) == hall_scalar(mac_P(lam), mul_symf(mac_Q(mu), mac_Q(nu)))
                           for nu in partitions_of(sum(lam) - sum(mu)))
            out.append(_prop("mac.skew_scalar_product", ps, skew_pair))

            def duality(rep, lam=lam, mu=mu):
                left, right = duality_apply(lam, mu)
                return left == right
            out.append(_prop("mac.duality", ps, duality))

    for lam in lams:
        X, Y = _scalars(rng, 2), _scalars(rng, 2)

        def branching(rep, lam=lam, X=X, Y=Y):
            left = sym_eval_scalar(mac_P(lam), X + Y)
            right = ZERO
            for mu in sub_partitions(lam):
                right = right + sym_eval_scalar(skew(lam, mu, "P"), X) * sym_eval_scalar(mac_P(mu), Y)
            rep.lhs, rep.rhs = left, right
            return left == right
        out.append(_prop("mac.branching", _lp(lam), branching))

    for lam in lams:
        for n in range(1, len(lam)):
            out.append(_prop("mac.length_vanishing", {**_lp(lam), "n": n},
                             lambda rep, lam=lam, n=n: not sym_eval(mac_P(lam), Alphabet.plain(n, range(n)))))
        n = len(lam)

        def factor(rep, lam=lam, n=n):
            xs = Alphabet.plain(n, range(n))
            low = tuple(p - 1 for p in lam if p > 1)
            return sym_eval(mac_P(lam), xs) == LaurentPoly.monomial((1,) * n) * sym_eval(mac_P(low), xs)
        out.append(_prop("mac.full_length_factorization", _lp(lam), factor))

    for lam in lams:
        for mu in sub_partitions(lam):
            lc, mc = conjugate(lam), conjugate(mu)
            for n in (1, 2):
                if all(0 <= part(lc, i) - part(mc, i) <= n for i in range(1, len(lc) + 1)):
                    continue

                def col(rep, lam=lam, mu=mu, n=n):
                    return not sym_eval(skew(lam, mu, "Q"), Alphabet.plain(n, range(n)))
                out.append(_prop("mac.skew_column_vanishing",
                                 {"lambda": format_partition(lam), "mu": format_partition(mu), "n": n}, col))

    for mu in enumerate_partitions(maxsize - 1):
        for r in range(1, maxsize - sum(mu) + 1):
            def pieri(rep, mu=mu, r=r):
                got = pieri_expand(mu, r)
                return set(got) == set(horizontal_strips(mu, r))
            out.append(_prop("mac.pieri_support", {"mu": format_partition(mu), "r": r}, pieri))

    for lam in lams:
        def lassalle(rep, lam=lam):
            coords = g_expansion(lam)
            upward = all(dominance_leq(lam, nu) for nu in coords)
            return upward and from_g_coords(sum(lam), coords) == mac_P(lam)
        out.append(_prop("mac.g_expansion_upward", _lp(lam), lassalle))

    for lam in lams:
        for mu in sub_partitions(lam):
            if len(mu) >= len(lam):
                continue

            def skew_support(rep, lam=lam, mu=mu):
                bound = part(lam, len(mu) + 1)
                coords = p_expand_in_P(skew(lam, mu, "P"))
                return all(part(nu, 1) >= bound for nu in coords)
            out.append(_prop("mac.skew_expansion_support",
                             {"lambda": format_partition(lam), "mu": format_partition(mu)}, skew_support))

    specs = [("q^2*t", Q ** 2 * T), ("t^3", tpow(3)), ("3/5", RatFunc(3, 5))]
    for lam in lams:
        for label, a in specs:
            def spec(rep, lam=lam, a=a):
                direct = sym_eval_scalar(mac_P(lam), Alphabet.geometric(0, a, T))
                closed = principal_spec(lam, a)
                wider = principal_spec(lam, a, n=len(lam) + 2)
                rep.lhs, rep.rhs = closed, direct
                return closed == direct == wider
            out.append(_prop("mac.principal_specialization", {**_lp(lam), "a": label}, spec))

    for lam in lams:
        for i in range(1, len(lam) + 1):
            ms = [_rand_frac(rng) for _ in range(lam[i - 1] - 1)]
            ns = [_rand_frac(rng) for _ in range(i - 1)]

            def vanish(rep, lam=lam, ms=ms, ns=ns):
                A = Alphabet.scalars(ms).scaled(((1, ONE), (-1, Q)), ((1, T), (-1, ONE))) + Alphabet.scalars(ns)
                return not sym_eval_scalar(mac_P(lam), A)
            out.append(_prop("mac.alphabet_vanishing", {**_lp(lam), "i": i}, vanish))

    N = 3
    for lam in lams:
        for s in range(1, N + 1):
            for u in combinations(range(N), s):
                cs = [_rand_frac(rng) for _ in range(s - 1)]

                def deg(rep, lam=lam, u=u, cs=cs):
                    f = _substitute_ratios(sym_eval(mac_P(lam), Alphabet.plain(N, range(N))), u, cs)
                    return not f or f.degree_in(u[-1])[1] <= sum(lam[:len(u)])
                out.append(_prop("mac.substitution_degree", {**_lp(lam), "u": [x + 1 for x in u]}, deg))

    for lam in lams:
        for mu in sub_partitions(lam):
            ms = [_rand_frac(rng) for _ in range(2)]

            def lem(rep, lam=lam, mu=mu, ms=ms):
                X = Alphabet.scalars(ms)
                left = sym_eval_scalar(skew(lam, mu, "P"), X.scaled(((1, ONE), (-1, Q)), ((1, T), (-1, ONE))))
                right = sym_eval_scalar(skew(conjugate(lam), conjugate(mu), "Q"), X)
                right = swap_qt(right)
                if (sum(lam) - sum(mu)) % 2:
                    right = -right
                return left == right
            out.append(_prop("mac.scaled_alphabet_duality",
                             {"lambda": format_partition(lam), "mu": format_partition(mu)}, lem))
    return out


def _substitute_ratios(f: LaurentPoly, u: tuple[int, ...], cs: list[Fraction]) -> LaurentPoly:
    """x_{u_i} -> c_i x_{u_s} for i < s."""
    out: dict = {}
    last = u[-1]
    for e, c in f.terms.items():
        e2 = list(e)
        coef = c
        for slot, ci in zip(u[:-1], cs):
            k = e2[slot]
            if k:
                coef = coef * as_ratfunc(ci) ** k
                e2[last] += k
                e2[slot] = 0
        key = tuple(e2)
        s = out.get(key)
        out[key] = coef if s is None else s + coef
    return LaurentPoly(f.nvars, out)


# -- symmetric functions ------------------------------------------------------

def orbit_sum(lam: Partition, N: int) -> LaurentPoly:
    """m_lam(x_1..x_N) by summing the distinct permutations of the exponent vector."""
    if len(lam) > N:
        return LaurentPoly(N)
    vec = tuple(lam) + (0,) * (N - len(lam))
    return LaurentPoly(N, {e: ONE for e in set(permutations(vec))})


def g_single_letter_oracle(r: int, xs: list[Fraction]) -> RatFunc:
    """Coefficient of y^r in prod_i (t x_i y; q)_inf / (x_i y; q)_inf."""
    out = ZERO
    for comp in product(range(r + 1), repeat=len(xs)):
        if sum(comp) != r:
            continue
        term = ONE
        for k, x in zip(comp, xs):
            term = term * qpoch(T, k) / qpoch(Q, k) * as_ratfunc(x) ** k
        out = out + term
    return out


def symfunc_suite(seed: int = 0, maxsize: int = 4) -> list[VerifyReport]:
    rng = random.Random(seed)
    out: list[VerifyReport] = []
    for lam in _nonempty(maxsize):
        N = max(len(lam), 3)
        out.append(_prop("symfunc.monomial_orbit_sum", {**_lp(lam), "N": N},
                         lambda rep, lam=lam, N=N: sym_eval(m_in_p(lam), Alphabet.plain(N, range(N))) == orbit_sum(lam, N)))
    for d in range(1, maxsize + 1):
        ps = partitions_of(d)

        def herm(rep, ps=ps, d=d):
            f = _random_symf(rng, d)
            g = _random_symf(rng, d)
            h = _random_symf(rng, d)
            k = RatFunc(rng.randint(1, 5), rng.randint(1, 5))
            symmetric = hall_scalar(f, g) == hall_scalar(g, f)
            linear = hall_scalar(f + h.scale(k), g) == hall_scalar(f, g) + k * hall_scalar(h, g)
            return symmetric and linear
        out.append(_prop("symfunc.hall_bilinear_symmetric", {"degree": d}, herm))
    for r in range(1, maxsize + 1):
        A = _scalars(rng, 2) + Alphabet.scalars([Q])
        B = Alphabet.scalars([_rand_frac(rng), T])
        out.append(_prop("symfunc.plethystic_additivity", {"r": r},
                         lambda rep, r=r, A=A, B=B: p_eval(A + B, r) == p_eval(A, r) + p_eval(B, r)))
        xs = [_rand_frac(rng) for _ in range(2)]

        def grel(rep, r=r, xs=xs):
            X = Alphabet.scalars(xs)
            via_h = sym_eval_scalar(h_in_p(r), X.scaled(((1, ONE), (-1, T)), ((1, ONE), (-1, Q))))
            via_g = sym_eval_scalar(g_in_p(r), X)
            oracle = g_single_letter_oracle(r, xs)
            rep.lhs, rep.rhs = via_g, oracle
            return via_h == via_g == oracle
        out.append(_prop("symfunc.g_relation", {"r": r}, grel))
    for lam in _nonempty(maxsize):
        xs = [_rand_frac(rng) for _ in range(3)]
        a = _rand_frac(rng)

        def homog(rep, lam=lam, xs=xs, a=a):
            f = mac_P(lam)
            X = Alphabet.scalars(xs)
            base = sym_eval_scalar(f, X)
            eps = sym_eval_scalar(f, X.scaled(((1, -ONE),)))
            scaled = sym_eval_scalar(f, X.scaled(((1, as_ratfunc(a)),)))
            sign = -1 if sum(lam) % 2 else 1
            return eps == base * sign and scaled == base * as_ratfunc(a) ** sum(lam)
        out.append(_prop("symfunc.homogeneity", _lp(lam), homog))
    return out


def _random_symf(rng: random.Random, d: int) -> SymF:
    out = SymF(d)
    for rho in partitions_of(d):
        k = rng.randint(-3, 3)
        if k:
            out = out + power_sum(rho).scale(RatFunc(k) * (Q ** rng.randint(0, 2)) + T * rng.randint(0, 1))
    return out


# -- proof toolkit ------------------------------------------------------------

def cai_suite(seed: int = 0) -> list[VerifyReport]:
    out = []
    for n in (2, 3):
        for c in (1, 2):
            out.append(verify_cai_split(n, c, seed=seed))
    for n in (1, 2, 3):
        for c in (1, 2):
            out.append(verify_symmetrization(n, c, seed=seed))
    return out


def keylemma_suite(seed: int = 0, max_s: int = 3, max_bct: int = 3) -> list[VerifyReport]:
    """Every k in range for s <= max_s, b, c, t <= max_bct; one record per (s, b, c, t)."""
    out = []
    for s in range(1, max_s + 1):
        for b, c, t in product(range(max_bct + 1), repeat=3):
            params = {"s": s, "b": b, "c": c, "t": t}

            def classify(rep, s=s, b=b, c=c, t=t):
                bad = []
                total = 0
                for k in product(range(1, (s - 1) * c + b + t + 1), repeat=s):
                    total += 1
                    case = key_lemma_classify(k, b, c, t)
                    if not verify_case(k, b, c, t, case) or case.kind not in brute_force_cases(k, b, c, t):
                        bad.append(k)
                    if t == 1 and case.kind == 3 and k != tuple((s - i) * c + b + 1 for i in range(1, s + 1)):
                        bad.append(k)
                rep.notes.append(f"{total} tuples, {len(bad)} without a verified alternative")
                return not bad
            out.append(_prop("keylemma.classify", params, classify))
            if t < 1:
                continue

            def subs(rep, s=s, b=b, c=c, t=t):
                found = bad = 0
                for k in product(range(1, (s - 1) * c + b + t + 1), repeat=s):
                    if case3_witness(k, b, c, t) is None:
                        continue
                    found += 1
                    if subs_alphabet_check(s, b, c, t, k).status != "pass":
                        bad += 1
                rep.notes.append(f"{found} instances of the third alternative, {bad} failing")
                return bad == 0
            out.append(_prop("keylemma.subs_cardinality", params, subs))
    return out


def _v_vectors(n: int, total: int, top: int):
    """Integer vectors of length n with sum total and entries < top, entries bounded below."""
    lo = total - (n - 1) * (top - 1)
    for v in product(range(lo, top), repeat=n):
        if sum(v) == total:
            yield v


def vanish_suite(seed: int = 0, max_n: int = 2, max_c: int = 2, maxsize: int = 3) -> list[VerifyReport]:
    out = []
    for n in range(1, max_n + 1):
        for c in range(1, max_c + 1):
            for lam in _nonempty(maxsize):
                for v in _v_vectors(n, sum(lam), lam[0]):
                    out.append(verify_vanishing_h(n, c, v, lam))
                for mu in sub_partitions(lam):
                    if len(mu) >= len(lam):
                        continue
                    top = part(lam, len(mu) + 1)
                    for v in _v_vectors(n, sum(lam) - sum(mu), top):
                        out.append(verify_vanishing_skew(n, c, v, lam, mu))
    return out


def run_suite(name: str, seed: int = 0) -> list[VerifyReport]:
    if name == "mac":
        return mac_suite(seed)
    if name == "symfunc":
        return symfunc_suite(seed)
    if name == "cai":
        return cai_suite(seed)
    if name == "keylemma":
        return keylemma_suite(seed)
    if name == "vanish":
        return vanish_suite(seed)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")

