from fractions import Fraction

import pytest
from conftest import small_fractions
from hypothesis import given
from hypothesis import strategies as st

from qmorris.arith import ONE, ZERO, Q, eval_point, qpoch_scalar, qpow
from qmorris.ct import ct_product, product_poly
from qmorris.laurent import LaurentPoly, qpoch_monomial, ratio


def test_two_factor_expansion():
    f = qpoch_monomial(ONE, ratio(2, 0, 1), 1) * qpoch_monomial(Q, ratio(2, 1, 0), 1)
    expected = LaurentPoly(2, {(0, 0): 1 + Q, (-1, 1): -Q, (1, -1): -ONE})
    assert f == expected


def test_times_zero_is_empty():
    f = qpoch_monomial(ONE, (1, -1), 3)
    assert len(f * LaurentPoly(2)) == 0


def test_qpoch_monomial_examples():
    assert qpoch_monomial(ONE, (1, -1), 1) == LaurentPoly(2, {(0, 0): ONE, (1, -1): -ONE})
    assert qpoch_monomial(ONE, (1, -1), 0) == LaurentPoly.constant(2)
    two = qpoch_monomial(Q, (-1, 1), 2)
    assert two == LaurentPoly(2, {(0, 0): ONE, (-1, 1): -(Q + Q ** 2), (-2, 2): Q ** 3})


def test_ct_var_and_ct_all():
    f = qpoch_monomial(ONE, (1, -1), 1) * qpoch_monomial(Q, (-1, 1), 1)
    assert f.ct_var(0) == LaurentPoly.constant(2, 1 + Q)
    assert f.ct_all() == 1 + Q
    assert LaurentPoly.constant(3, Q).ct_var(1) == LaurentPoly.constant(3, Q)
    assert qpoch_monomial(ONE, (1, -1), 1).ct_all() == ONE


def test_ct_of_dyson_n2():
    # (x1/x2)_1 (q x2/x1)_1 has constant term 1 + q
    f = qpoch_monomial(ONE, (0, 1, -1), 1) * qpoch_monomial(Q, (0, -1, 1), 1)
    assert f.ct_all() == 1 + Q


def test_homogeneous_nonzero_degree_has_zero_ct():
    f = LaurentPoly.monomial((1, 0)) * qpoch_monomial(ONE, (1, -1), 2)
    assert f.ct_all() == ZERO


def test_degree_in():
    assert qpoch_monomial(ONE, (1, -1), 1).degree_in(0) == (0, 1)
    assert qpoch_monomial(Q, (-1, 1), 2).degree_in(0) == (-2, 0)
    assert LaurentPoly.constant(2, 5).degree_in(1) == (0, 0)
    with pytest.raises(ValueError):
        LaurentPoly(2).degree_in(0)


def test_nvars_mismatch():
    with pytest.raises(ValueError):
        LaurentPoly.constant(2) + LaurentPoly.constant(3)


def test_rendering():
    f = qpoch_monomial(ONE, (1, -1), 1)
    text = str(f)
    assert "x0*x1^-1" in text or "x0^1*x1^-1" in text


@st.composite
def laurent_polys(draw, nvars=3):
    n = draw(st.integers(0, 5))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(-2, 2)) for _ in range(nvars))
        terms[e] = terms.get(e, ZERO) + draw(st.integers(-3, 3)) * qpow(draw(st.integers(0, 2)))
    return LaurentPoly(nvars, terms)


@given(laurent_polys(), st.sampled_from([(0, 1), (0, 2), (1, 2)]))
def test_ct_var_commutes(f, ij):
    i, j = ij
    assert f.ct_var(i).ct_var(j) == f.ct_var(j).ct_var(i)
    assert f.ct_var(0).ct_var(1).ct_var(2).ct_all() == f.ct_all()


@given(laurent_polys(), st.integers(1, 3))
def test_homogeneity_property(f, shift):
    # multiply by a monomial of degree `shift` after restricting to degree 0
    zero_part = LaurentPoly(3, {e: c for e, c in f.terms.items() if sum(e) == 0})
    g = zero_part * LaurentPoly.monomial((shift, 0, 0))
    assert g.ct_all() == ZERO


@given(st.integers(-3, 3), st.lists(st.integers(-2, 2), min_size=2, max_size=2), st.integers(0, 4))
def test_qpoch_monomial_at_one(e, mono, k):
    f = qpoch_monomial(qpow(e), tuple(mono), k)
    total = sum(f.terms.values(), ZERO)
    assert total == qpoch_scalar(e, k)


@given(laurent_polys(), laurent_polys(),
       st.lists(small_fractions(), min_size=3, max_size=3), small_fractions())
def test_evaluation_multiplicative(a, b, pt, q0):
    if any(x == 0 for x in pt) or q0 in (0, 1, -1):
        return
    assert (a * b).evaluate(pt, q0) == a.evaluate(pt, q0) * b.evaluate(pt, q0)


def test_pruned_ct_matches_full_expansion():
    factors = [(ONE, (1, -1, 0), 2), (Q, (-1, 1, 0), 1), (ONE, (0, 1, -1), 2), (Q, (0, -1, 1), 2),
               (qpow(-1), (1, 0, -1), 1)]
    F = LaurentPoly(3, {(0, 0, 0): ONE, (1, -1, 0): Q, (0, 2, -2): -ONE})
    full = (F * product_poly(3, factors)).ct_all()
    assert ct_product(F, factors) == full


def test_eval_point_used_in_laurent():
    f = qpoch_monomial(ONE, (1, -1), 1)
    assert f.evaluate([Fraction(2), Fraction(1)], Fraction(1, 2)) == -1
    assert eval_point(Q, 3) == 3
