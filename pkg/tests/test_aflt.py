import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmorris import aflt
from qmorris.aflt import (
    AfltParams,
    DegenerateInput,
    InterpolationError,
    QaPoly,
    build_integrand,
    lhs_value,
    newton_interpolate,
    poly_interpolate,
    reduced_params,
    rhs_aflt,
    rhs_qmorris,
    root_sets,
    verify_addpoints,
    verify_aflt,
    verify_qmorris,
    verify_recursion,
    verify_roots,
)
from qmorris.arith import ONE, ZERO, Q, qpow
from qmorris.laurent import LaurentPoly, qpoch_monomial
from qmorris.partitions import enumerate_partitions


def test_integrand_examples():
    assert build_integrand(AfltParams(1, 0, 0, 1, (1,))) == LaurentPoly.monomial((-1, 1))
    assert build_integrand(AfltParams(1, 1, 0, 1, (1,))) == LaurentPoly(2, {(-1, 1): ONE, (0, 0): -ONE})
    dyson = qpoch_monomial(ONE, (0, 1, -1), 1) * qpoch_monomial(Q, (0, -1, 1), 1)
    assert build_integrand(AfltParams(2, 0, 0, 1)) == dyson


def test_integrand_is_homogeneous_of_degree_zero():
    for p in [AfltParams(2, 1, 1, 2, (1,), (1,)), AfltParams(1, 2, 1, 3, (2,), (1, 1))]:
        assert build_integrand(p).is_homogeneous(0)
        assert lhs_value(p) == lhs_value(p, dehomogenize=True)


def test_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        build_integrand(AfltParams(1, 0, 0, 0, (), (1,)))
    with pytest.raises(DegenerateInput):
        lhs_value(AfltParams(1, -1, 0, 1))
    assert build_integrand(AfltParams(1, 1, 0, 1, (1, 1))) == LaurentPoly(2)


def test_lhs_examples():
    assert lhs_value(AfltParams(1, 1, 0, 1, (1,))) == -ONE
    assert lhs_value(AfltParams(1, 0, 0, 1, (1,))) == ZERO
    assert lhs_value(AfltParams(1, 1, 1, 0)) == 1 + Q


def test_rhs_examples():
    assert rhs_aflt(AfltParams(1, 1, 0, 1, (1,))) == -ONE
    assert rhs_aflt(AfltParams(1, 0, 0, 1, (1,))) == ZERO
    assert rhs_qmorris(1, 1, 1, 0) == 1 + Q
    assert rhs_qmorris(2, 0, 0, 1) == 1 + Q
    for n in range(1, 4):
        assert rhs_qmorris(n, 0, 0, 0) == ONE


@pytest.mark.parametrize("n", range(1, 5))
def test_rhs_reduces_to_qmorris(n):
    for a in range(5):
        for b in range(5):
            for c in range(5):
                assert rhs_aflt(AfltParams(n, a, b, c)) == rhs_qmorris(n, a, b, c)


def test_verify_examples():
    for p in [AfltParams(1, 1, 0, 1, (1,)), AfltParams(2, 0, 0, 1), AfltParams(1, 1, 1, 2, (1,))]:
        rep = verify_aflt(p, cross_dehomogenized=True)
        assert rep.equal, rep.record()
    assert verify_aflt(AfltParams(2, 0, 0, 1)).lhs == 1 + Q
    assert verify_qmorris(3, 1, 1, 1).equal


def test_root_set_examples():
    R = root_sets(AfltParams(1, 0, 2, 5))
    assert set(R.A1) == {-1, -2} and R.A2 == () and R.A3 == ()
    assert root_sets(AfltParams(1, 0, 0, 5, (1,))).A2 == (0,)
    assert root_sets(AfltParams(2, 0, 0, 7, (), (1,))).A3 == (-8,)
    R = root_sets(AfltParams(2, 0, 1, 5, (2, 1), (2,)))
    assert R.distinct() and len(R.union) == 2 * 1 + 3 + 2


def test_root_examples():
    p = AfltParams(1, 0, 0, 2, (1,))
    assert lhs_value(p) == ZERO
    assert verify_roots(p).equal
    poly = poly_interpolate(AfltParams(1, 0, 1, 3))
    assert poly.at_a(-1) == ZERO
    # length(mu) > n: the roots from j > n are positive and reachable directly
    assert lhs_value(AfltParams(1, 1, 0, 2, (), (1, 1))) == ZERO


def test_roots_refused_below_threshold():
    rep = verify_roots(AfltParams(1, 0, 1, 2, (1,)))
    assert rep.status == "refused" and "c > b" in rep.notes[0]


def test_interpolation_examples():
    assert poly_interpolate(AfltParams(1, 0, 0, 3)).degree == 0
    poly = poly_interpolate(AfltParams(1, 0, 1, 2), sample_as=[0, 1, 2])
    assert poly.degree <= 1
    assert poly_interpolate(AfltParams(1, 0, 1, 2, (1, 1))) == QaPoly(())
    with pytest.raises(ValueError):
        poly_interpolate(AfltParams(2, 0, 2, 2), sample_as=[0, 1])


def test_interpolation_inconsistency(monkeypatch):
    # a value sequence of degree 2 in q^a against a degree bound of 1
    monkeypatch.setattr(aflt, "lhs_value", lambda p, dehomogenize=False: qpow(2 * p.a))
    with pytest.raises(InterpolationError):
        poly_interpolate(AfltParams(1, 0, 1, 2))


def test_newton_interpolation_recovers_polynomial():
    target = QaPoly((ONE, Q, ZERO, Q * Q))
    xs = [qpow(k) for k in range(4)]
    assert newton_interpolate(xs, [target(x) for x in xs]) == target


def test_reduced_params_swap():
    r = reduced_params(AfltParams(2, 1, 0, 2, (2, 1), (1,)))
    assert r == AfltParams(1, 1, 2, 2, (2,), (1,))


def test_recursion_examples():
    assert verify_recursion(AfltParams(1, 1, 0, 2, (1,), (1,))).equal
    assert verify_recursion(AfltParams(2, 1, 1, 3)).equal
    rep = verify_recursion(AfltParams(2, 1, 0, 2, (2, 1), (1,)))
    assert rep.equal, rep.record()


def test_recursion_refusals():
    assert verify_recursion(AfltParams(1, 0, 0, 2, (), (1, 1))).status == "refused"
    assert verify_recursion(AfltParams(1, -1, 0, 2)).status == "refused"


def test_addpoint_examples():
    rep = verify_addpoints(AfltParams(1, 0, 1, 2))
    assert rep.equal and "first" in rep.notes[0]
    rep = verify_addpoints(AfltParams(1, 0, 0, 2, (1,), (1,)))
    assert rep.equal and "a = 1" in rep.notes[0]
    rep = verify_addpoints(AfltParams(1, 0, 1, 2, (), (2, 1)))
    assert rep.equal, rep.record()


def test_addpoint_guard():
    # the last part of mu is positive by construction, trailing zeros are stripped
    assert AfltParams(1, 0, 0, 2, (), (1, 0)).mu == (1,)
    assert verify_addpoints(AfltParams(1, 0, 0, 0, (), (1,))).status == "refused"


@settings(max_examples=20)
@given(st.integers(1, 2), st.integers(0, 2), st.integers(0, 1), st.integers(1, 2),
       st.sampled_from(list(enumerate_partitions(2, maxlen=1))),
       st.sampled_from(list(enumerate_partitions(2))))
def test_identity_random_points(n, a, b, c, lam, mu):
    rep = verify_aflt(AfltParams(n, a, b, c, lam, mu))
    assert rep.equal, rep.record()
