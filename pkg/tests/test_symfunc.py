from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmorris.arith import ONE, ZERO, Q, T, qpoch_scalar, qpow
from qmorris.laurent import LaurentPoly
from qmorris.partitions import partitions_of
from qmorris.symfunc import (
    Alphabet,
    SymF,
    g_in_p,
    h_in_p,
    hall_scalar,
    m_coords,
    m_in_p,
    mul_symf,
    omega_uv,
    p_eval,
    power_sum,
    sym_eval,
    sym_eval_scalar,
)

p1, p2, p11 = power_sum((1,)), power_sum((2,)), power_sum((1, 1))


def test_p_eval_plain_letters():
    A = Alphabet.plain(3, [0, 1, 2])
    assert p_eval(A, 2) == LaurentPoly(3, {(2, 0, 0): ONE, (0, 2, 0): ONE, (0, 0, 2): ONE})


def test_p_eval_epsilon_letter():
    eps = Alphabet.letter(1, -1, (1,))
    assert p_eval(eps, 3) == LaurentPoly(1, {(3,): -ONE})
    assert p_eval(eps, 2) == LaurentPoly(1, {(2,): ONE})


def test_p_eval_division_alphabet():
    A = Alphabet.ratio(1, ((1, ONE), (-1, T)), ((1, ONE), (-1, Q)), (1,))
    assert p_eval(A, 3) == LaurentPoly(1, {(3,): (1 - T ** 3) / (1 - Q ** 3)})


def test_p_eval_rejects_r0():
    with pytest.raises(ValueError):
        p_eval(Alphabet.plain(1, [0]), 0)


def test_sym_eval_examples():
    A = Alphabet.plain(2, [0, 1])
    assert sym_eval(p1, A) == LaurentPoly(2, {(1, 0): ONE, (0, 1): ONE})
    z = qpow(3)
    for r in range(4):
        val = sym_eval_scalar(h_in_p(r), Alphabet.geometric(0, z, Q))
        assert val == qpoch_scalar(3, r) / qpoch_scalar(1, r)


def test_basis_constructors():
    assert m_in_p((1,)) == p1
    assert h_in_p(2) == SymF(2, {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)})
    assert g_in_p(1) == p1.scale((1 - T) / (1 - Q))


def test_hall_examples():
    assert hall_scalar(p1, p1) == (1 - Q) / (1 - T)
    assert hall_scalar(p2, p11) == ZERO
    assert hall_scalar(p11, p11) == 2 * ((1 - Q) / (1 - T)) ** 2
    assert hall_scalar(p1, p2) == ZERO


def test_omega_examples():
    assert omega_uv(p1, Q, T) == p1.scale((1 - Q) / (1 - T))
    u, v = qpow(2), T * T
    assert omega_uv(p2, u, v) == p2.scale(-(1 - u ** 2) / (1 - v ** 2))
    f = h_in_p(3) + m_in_p((2, 1))
    assert omega_uv(omega_uv(f, Q, T), T, Q) == f
    with pytest.raises(ValueError):
        omega_uv(p1, Q, ONE)


def test_mul_examples():
    assert mul_symf(p1, p1) == p11
    assert mul_symf(p2, p1) == power_sum((2, 1))
    assert mul_symf(h_in_p(1), h_in_p(1)) == h_in_p(2) + m_in_p((1, 1))


def _orbit_sum(lam, n):
    padded = tuple(lam) + (0,) * (n - len(lam))
    return LaurentPoly(n, {e: ONE for e in set(permutations(padded))})


@pytest.mark.parametrize("d", range(1, 6))
def test_m_is_orbit_sum(d):
    for lam in partitions_of(d):
        for N in (len(lam), d):
            assert sym_eval(m_in_p(lam), Alphabet.plain(N, range(N))) == _orbit_sum(lam, N)


def test_m_coords_roundtrip():
    f = h_in_p(3)
    # h_3 is the sum of all monomials of degree 3
    assert m_coords(f) == {lam: ONE for lam in partitions_of(3)}


def test_homogeneous_scaling():
    a = qpow(2) * T
    A = Alphabet.plain(2, [0, 1])
    aA = Alphabet(2, tuple(L for L in Alphabet.letter(2, a, (1, 0)).letters + Alphabet.letter(2, a, (0, 1)).letters))
    f = h_in_p(3)
    assert sym_eval(f, aA) == sym_eval(f, A).scale(a ** 3)


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@settings(max_examples=25)
@given(st.lists(rationals, min_size=1, max_size=3), st.lists(rationals, min_size=1, max_size=3),
       st.integers(1, 4))
def test_plethystic_additivity(xs, ys, r):
    A, B = Alphabet.scalars(xs), Alphabet.scalars(ys)
    assert p_eval(A + B, r) == p_eval(A, r) + p_eval(B, r)


@settings(max_examples=15)
@given(st.lists(rationals, min_size=1, max_size=3), st.integers(1, 3))
def test_g_relation(xs, r):
    X = Alphabet.scalars(xs)
    scaled = X.scaled(((1, ONE), (-1, T)), ((1, ONE), (-1, Q)))
    assert sym_eval_scalar(g_in_p(r), X) == sym_eval_scalar(h_in_p(r), scaled)


@settings(max_examples=20)
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(
    st.sampled_from(partitions_of(d)), st.sampled_from(partitions_of(d)), st.sampled_from(partitions_of(d)))),
    st.integers(-3, 3))
def test_hall_symmetric_bilinear(trip, k):
    a, b, c = (m_in_p(x) for x in trip)
    assert hall_scalar(a, b) == hall_scalar(b, a)
    assert hall_scalar(a.scale(k) + c, b) == k * hall_scalar(a, b) + hall_scalar(c, b)
