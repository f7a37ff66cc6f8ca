import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmorris.partitions import (
    conjugate,
    contains,
    dominance_leq,
    enumerate_partitions,
    horizontal_strips,
    is_horizontal_strip,
    make_partition,
    parse_partition,
    part,
    partitions_of,
    stats,
)


def test_stats():
    assert stats((7, 4, 3, 1)) == (15, 4, 13)
    assert stats(()) == (0, 0, 0)
    assert stats((3, 3)) == (6, 2, 3)


def test_conjugate():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((7, 4, 3, 1)) == (4, 3, 3, 2, 1, 1, 1)


def test_containment_and_dominance():
    assert contains((7, 4, 3, 1), (4, 3, 1))
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    with pytest.raises(ValueError):
        dominance_leq((2,), (2, 1))


def test_horizontal_strip_examples():
    assert is_horizontal_strip((7, 4, 3, 1), (4, 3, 1), 7)
    assert is_horizontal_strip((2, 1), (2, 1), 0)
    assert not is_horizontal_strip((2, 2), (1,), 3)


def test_enumerate_examples():
    assert list(enumerate_partitions(2)) == [(), (1,), (2,), (1, 1)]
    assert list(enumerate_partitions(3, maxlen=1)) == [(), (1,), (2,), (3,)]
    assert len(list(enumerate_partitions(4))) == 12
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_parse_and_validate():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("") == () == parse_partition("0")
    assert part((3, 1), 5) == 0
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        make_partition([2, -1])


partitions = st.integers(0, 8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


@given(partitions, partitions)
def test_containment_transposes(lam, mu):
    assert contains(lam, mu) == contains(conjugate(lam), conjugate(mu))


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)),
                                                      st.sampled_from(partitions_of(n)))))
def test_dominance_reverses_under_conjugation(pair):
    mu, lam = pair
    assert dominance_leq(mu, lam) == dominance_leq(conjugate(lam), conjugate(mu))


@given(partitions, st.integers(0, 4))
def test_strip_generator_matches_predicate(mu, r):
    strips = set(horizontal_strips(mu, r))
    brute = {lam for lam in partitions_of(sum(mu) + r) if is_horizontal_strip(lam, mu, r)}
    assert strips == brute
    for lam in strips:
        assert contains(lam, mu) and stats(lam)[0] - stats(mu)[0] == r
