from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from prymcalc.lattice import (
    ExpressionError,
    LatticeModel,
    ParameterError,
    StructureError,
    build_model,
    class_from_expr,
    is_member,
    model_from_name,
    pair,
)

KINDS = ["standard", "standard-hyp", "nonstandard", "nonstandard-hyp"]


def model_for(kind, p):
    return build_model(kind, p)


def test_nonstandard_l_square():
    m = build_model("nonstandard", 2)
    assert m.square(m.cls("L")) == 28


def test_standard_g2_l_square():
    m = build_model("standard", 2)
    assert m.square(m.cls("L")) == 2


def test_hyperelliptic_e_pairings():
    m = build_model("standard-hyp", 7)
    assert m.pair(m.cls("E"), m.cls("L")) == 2
    assert m.square(m.cls("E")) == 0
    assert "R" not in m.named_classes
    n = build_model("nonstandard-hyp", 3)
    assert n.pair(n.cls("E"), n.cls("L")) == 4
    assert n.pair(n.cls("R"), n.cls("E")) == 2


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("p", [1, 2, 5])
def test_half_sum_identities(kind, p):
    if kind.startswith("standard"):
        p += 1
    m = model_for(kind, p)
    e = m.cls("e")
    assert m.square(e) == -4
    for j in range(1, 9):
        n = m.cls(f"N{j}")
        assert m.pair(e, n) == -1
        assert m.square(n) == -2
        assert m.pair(m.cls("L"), n) == 0


@pytest.mark.parametrize("i", [1, 2, 7])
def test_r_class_pairings(i):
    m = build_model("nonstandard", i)
    r = m.cls("R")
    assert m.square(r) == 4 * i - 2
    assert m.pair(r, m.cls("N1")) == 1
    assert m.pair(r, m.cls("N2")) == 1
    for j in range(3, 9):
        assert m.pair(r, m.cls(f"N{j}")) == 0
    assert r.coeffs[:3] == (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2))


def test_membership_examples():
    m = build_model("standard", 5)
    assert is_member(m, m.cls("e"))
    assert not is_member(m, m.cls("N1/2"))
    assert not is_member(m, m.cls("L/2"))
    n = build_model("nonstandard", 2)
    assert is_member(n, n.cls("R"))
    assert is_member(n, n.cls("Rp"))
    assert not is_member(n, n.cls("L/2"))
    assert not is_member(n, n.cls("L/2 - N1/2"))


def test_expression_parsing():
    m = build_model("standard", 5)
    assert m.cls("L - N1").coeffs == (1, -1) + (0,) * 7
    assert m.cls("e").coeffs == (0,) + (Fraction(1, 2),) * 8
    assert m.cls("2*(L - e) + -N3") == m.cls("2*L - 2*e - N3")
    with pytest.raises(ExpressionError):
        m.cls("L + Q")
    with pytest.raises(ExpressionError):
        m.cls("L ** 2")
    with pytest.raises(ExpressionError):
        m.cls("L/3")


def test_parameter_errors():
    with pytest.raises(ParameterError):
        build_model("standard", 1)
    with pytest.raises(ParameterError):
        build_model("nonstandard-hyp", 0)
    with pytest.raises(ValueError):
        build_model("weird", 3)


def test_cross_model_pairing_is_structural_error():
    a = build_model("standard", 5)
    b = build_model("standard", 6)
    with pytest.raises(StructureError):
        pair(a, a.cls("L"), b.cls("L"))


@pytest.mark.parametrize("kind", KINDS)
def test_json_round_trip(kind):
    m = model_for(kind, 3)
    back = LatticeModel.from_json(m.to_json())
    assert back.name == m.name and back.gram == m.gram
    assert back.parity_groups == m.parity_groups and back.even_sums == m.even_sums
    assert model_from_name(m.name).to_json() == m.to_json()


def classes(kind, p):
    m = model_for(kind, p)
    coeff = st.integers(-6, 6)
    vec = st.lists(coeff, min_size=m.rank, max_size=m.rank)
    return m, vec.map(lambda x: m.from_doubled(x))


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_pair_symmetric_and_bilinear(kind, data):
    m, cls = classes(kind, 3)
    u, v, w = data.draw(cls), data.draw(cls), data.draw(cls)
    assert m.pair(u, v) == m.pair(v, u)
    assert m.pair(u + v, w) == m.pair(u, w) + m.pair(v, w)
    assert m.pair(u * 3, w) == 3 * m.pair(u, w)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_membership_closed_under_group_operations(kind, data):
    m, cls = classes(kind, 2)
    u, v = data.draw(cls), data.draw(cls)
    if m.is_member(u) and m.is_member(v):
        assert m.is_member(u + v)
        assert m.is_member(-u)
        assert m.is_member(u - v)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_members_have_even_square(kind, data):
    # every Nikulin lattice here is even
    m, cls = classes(kind, 4)
    u = data.draw(cls)
    if m.is_member(u):
        sq = m.square(u)
        assert sq.denominator == 1 and sq % 2 == 0
