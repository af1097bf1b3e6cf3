from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from prymcalc.rational import fmt, nullspace, parse


def test_fmt_drops_unit_denominator():
    assert fmt(Fraction(4, 2)) == "2"
    assert fmt(Fraction(-3, 4)) == "-3/4"


@given(st.fractions())
def test_fmt_parse_round_trip(x):
    assert parse(fmt(x)) == x


def test_parse_rejects_floats():
    with pytest.raises(TypeError):
        parse(0.5)


def test_nullspace_of_rank_two_system():
    ker = nullspace([[1, 2, 3], [0, 1, 1]])
    assert len(ker) == 1
    (v,) = ker
    assert [1 * v[0] + 2 * v[1] + 3 * v[2], v[1] + v[2]] == [0, 0]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=3))
def test_nullspace_vectors_are_annihilated(rows):
    ker = nullspace(rows)
    assert len(ker) >= 4 - len(rows)
    for v in ker:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0
