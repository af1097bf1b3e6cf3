import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from prymcalc.brill_noether import (
    DomainError,
    RamificationSequence,
    WeightAssignment,
    divisorial_pairs,
    hurwitz_slope,
    limit_series_dimension_bound,
    prym_secant_expected_dim,
    ram_weight,
    rho,
    secant_expected_dim,
)


def test_rho_values():
    assert rho(9, 2, 8) == 0
    assert rho(4, 1, 2) == -2
    assert all(rho(g, 0, 0) == 0 for g in range(30))


def test_secant_values():
    assert secant_expected_dim(5, 0, 7) == 5
    assert secant_expected_dim(4, 2, 7) == -8
    for i in range(1, 10):
        assert secant_expected_dim(i, 1, 2 * i - 1) == -1
    with pytest.raises(DomainError):
        secant_expected_dim(2, 3, 4)
    with pytest.raises(DomainError):
        secant_expected_dim(2, -1, 4)


def test_prym_secant_values():
    assert prym_secant_expected_dim(9, 8, 3) == -1
    assert prym_secant_expected_dim(7, 4, 0) == 4
    for i in range(1, 10):
        assert prym_secant_expected_dim(2 * i + 1, i, 1) == -1
    with pytest.raises(DomainError):
        prym_secant_expected_dim(5, 5, 1)
    with pytest.raises(DomainError):
        prym_secant_expected_dim(5, 2, 3)


def test_divisorial_pair_examples():
    assert divisorial_pairs(5) == [(2, 1)]
    assert divisorial_pairs(9) == [(4, 1), (8, 3)]
    assert divisorial_pairs(3) == [(1, 1)]
    assert divisorial_pairs(4) == [(3, 2)]
    with pytest.raises(DomainError):
        divisorial_pairs(2)


def test_divisorial_pairs_sorted_by_f_then_e():
    for g in range(3, 80):
        pairs = divisorial_pairs(g)
        assert pairs == sorted(pairs, key=lambda p: (p[1], p[0]))


@given(st.integers(3, 60), st.data())
def test_rho_identity(g, data):
    e = data.draw(st.integers(0, g - 1))
    f = data.draw(st.integers(0, e))
    assert rho(g - 2, f, e) == prym_secant_expected_dim(g, e, f) == secant_expected_dim(e, f, g - 2)


def test_sequence_validation():
    s = RamificationSequence(2, 5, (0, 1, 3))
    assert ram_weight(s) == 4
    assert s.vanishing == (0, 2, 5)
    assert ram_weight(RamificationSequence(3, 7, (0, 0, 0, 0))) == 0
    assert ram_weight(RamificationSequence(3, 7, (4, 4, 4, 4))) == 16
    for bad in ((1, 0, 0), (0, 1, 4), (-1, 0, 0), (0, 0)):
        with pytest.raises(DomainError):
            RamificationSequence(2, 5, bad)


def random_assignment(rng, g, e, f, m):
    full = f * (e - f + 1)
    alpha = tuple(rng.randint(0, full) for _ in range(g))
    p0 = rng.randint(0, full)
    return WeightAssignment(g, e, f, m, alpha, tuple(full - a for a in alpha), (p0, full - p0))


def test_dimension_bound_examples():
    rng = random.Random(7)
    assert limit_series_dimension_bound(random_assignment(rng, 5, 2, 1, 2)).total == -1
    t1 = limit_series_dimension_bound(random_assignment(rng, 7, 4, 1, 4))
    t2 = limit_series_dimension_bound(random_assignment(rng, 7, 4, 1, 4))
    assert t1.total == t2.total == 1
    zero = WeightAssignment(6, 3, 0, 2, (0,) * 6, (0,) * 6, (0, 0))
    assert limit_series_dimension_bound(zero).total == 2


@given(st.integers(3, 15), st.data())
def test_dimension_bound_total_is_invariant(g, data):
    e = data.draw(st.integers(1, g - 1))
    f = data.draw(st.integers(0, e))
    m = data.draw(st.integers(0, e))
    seed = data.draw(st.integers(0, 2 ** 32))
    rng = random.Random(seed)
    for _ in range(5):
        b = limit_series_dimension_bound(random_assignment(rng, g, e, f, m))
        assert b.total == b.unmarked + b.marked + b.left + b.right == m - f * (g - 1 - e + f)


def test_weight_validation():
    ok = WeightAssignment(3, 2, 1, 1, (1, 0, 2), (1, 2, 0), (1, 1))
    limit_series_dimension_bound(ok)
    bad = [
        WeightAssignment(3, 2, 1, 1, (1, 0, 2), (1, 1, 0), (1, 1)),
        WeightAssignment(3, 2, 1, 1, (1, 0, 2), (1, 2, 0), (2, 1)),
        WeightAssignment(3, 2, 1, 1, (3, 0, 2), (-1, 2, 0), (1, 1)),
        WeightAssignment(3, 2, 1, 3, (1, 0, 2), (1, 2, 0), (1, 1)),
        WeightAssignment(3, 2, 1, 1, (1, 0), (1, 2), (1, 1)),
    ]
    for w in bad:
        with pytest.raises(DomainError):
            limit_series_dimension_bound(w)


def test_hurwitz_slope():
    assert hurwitz_slope(23) == Fraction(13, 2)
    assert hurwitz_slope(1) == 12
    assert hurwitz_slope(11) == 7
    with pytest.raises(DomainError):
        hurwitz_slope(0)
