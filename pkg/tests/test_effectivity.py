from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from prymcalc.effectivity import (
    PeelLimitError,
    Prover,
    UnboundedSearchError,
    UnsupportedShapeError,
    check_no_moving_decomposition,
    enumerate_minus2_candidates,
    peel_base_curves,
    peel_trace,
    prove_non_effective,
    verify_vanishing_suite,
)
from prymcalc.lattice import LatticeClass, LatticeModel, build_model


# -- peeling -----------------------------------------------------------------


def test_peel_chain_example():
    for i in (2, 3, 6):
        m = build_model("standard-hyp", 2 * i + 1)
        assert peel_base_curves(m, m.cls(f"L + e - {i}*E")) == m.cls(f"L - e - {i}*E")


def test_peel_half_sum_flips_sign():
    m = build_model("standard", 5)
    assert peel_base_curves(m, m.cls("e")) == m.cls("-e")


def test_peel_fixed_point():
    m = build_model("standard", 5)
    a = m.cls("L - e")
    assert peel_base_curves(m, a) == a
    assert peel_trace(m, a)[1] == []


def test_peel_iteration_cap():
    m = build_model("standard", 5)
    with pytest.raises(PeelLimitError):
        peel_base_curves(m, m.cls("5*e"), max_iter=3)


# -- enumeration -------------------------------------------------------------


def test_enumeration_for_chain_lemma_i3():
    # a = 1 gives D = L - 3E - N_j; a = 0 gives D = -N_j with B.D = -1
    m = build_model("standard-hyp", 7)
    en = enumerate_minus2_candidates(m, m.cls("L - 3*E - e"))
    got = {D for D, _ in en.candidates}
    a1 = {m.cls(f"L - 3*E - N{j}") for j in range(1, 9)}
    a0 = {m.cls(f"-N{j}") for j in range(1, 9)}
    assert got == a1 | a0
    assert all(p == -1 for _, p in en.candidates)
    assert en.box == {"L": (0, 1), "E": (Fraction(-6), Fraction(3))}


def test_enumeration_skips_when_negative_on_nef():
    m = build_model("standard-hyp", 5)
    b = m.cls("-E - e")
    assert m.square(b) == -4 and m.pair(b, m.cls("L")) == -2
    en = enumerate_minus2_candidates(m, b)
    assert en.skipped["tag"] == "negative_on_nef" and en.candidates == []


def test_enumeration_rejects_other_squares():
    m = build_model("standard", 5)
    with pytest.raises(UnsupportedShapeError):
        enumerate_minus2_candidates(m, m.cls("L"))


def test_enumeration_satisfies_its_contract():
    m = build_model("nonstandard-hyp", 3)
    B = m.cls("R - 2*E - e")
    en = enumerate_minus2_candidates(m, B)
    assert en.candidates
    for D, p in en.candidates:
        assert m.is_member(D) and m.square(D) == -2
        assert p == m.pair(B, D) < 0
        for h in m.nef_classes:
            assert m.pair(D, h) >= 0 and m.pair(B - D, h) >= 0
        for n in m.known_neg2_curves:
            if m.pair(B, n) >= 0:
                assert D != n and m.pair(D, n) >= 0


def unbounded_model():
    # hyperbolic plane plus a (-2)-curve, with no nef class declared
    g = [[Fraction(0), Fraction(1), Fraction(0)], [Fraction(1), Fraction(0), Fraction(0)], [Fraction(0), Fraction(0), Fraction(-2)]]
    name = "toy-unbounded"
    n = LatticeClass(name, (0, 0, 2))
    return LatticeModel(name, 3, ("U", "V", "N"), tuple(map(tuple, g)), (), ((0,), (1,), (2,)), {"N": n}, (), (n,))


def test_unbounded_search_names_coordinate():
    m = unbounded_model()
    b = LatticeClass(m.name, (2, -4, 0))  # 2UV = -4
    with pytest.raises(UnboundedSearchError, match="coordinate U"):
        enumerate_minus2_candidates(m, b)


# -- proofs ------------------------------------------------------------------


@pytest.mark.parametrize("i", [2, 3, 5])
def test_chain_lemma_certificate(i):
    m = build_model("standard-hyp", 2 * i + 1)
    c = prove_non_effective(m, m.cls(f"L - {i}*E - e"))
    assert c.proved and c.depth == 1
    reasons = {(m.label_of(x.D), x.reason, x.data["subject"]) for x in c.candidates}
    for j in range(1, 9):
        assert (m.label_of(m.cls(f"-N{j}")), "exceptional_support", "D") in reasons
    assert all(x.data["subject"] == "B-D" for x in c.candidates if x.D.doubled[0] == 2)


def test_negative_target_is_a_leaf():
    for kind, p in (("standard", 4), ("nonstandard-hyp", 2)):
        m = build_model(kind, p)
        c = prove_non_effective(m, m.cls("-L"))
        assert c.proved and c.depth == 0 and c.leaf["tag"] == "negative_on_nef"


@pytest.mark.parametrize("i", [2, 3, 4])
def test_nonstandard_four_classes(i):
    m = build_model("nonstandard-hyp", i)
    prover = Prover(m)
    for x in (f"{i - 1}*E + e", f"{i}*E - e", f"R - {i - 1}*E - e", f"R - {i}*E + e"):
        assert prover.prove(m.cls(x), i + 2).proved, x


def test_multiple_of_e_needs_depth_growing_with_i():
    # kE - e reduces to (k-1)E - e after peeling, one level per step
    m = build_model("standard-hyp", 9)
    assert prove_non_effective(m, m.cls("4*E - e"), 4).depth == 4
    c = prove_non_effective(m, m.cls("4*E - e"), 3)
    assert not c.proved and c.survivors


def test_failure_lists_survivors_and_asserts_nothing():
    m = build_model("standard-hyp", 9)
    c = prove_non_effective(m, m.cls("4*E - e"), 1)
    assert not c.proved
    assert "no proof found" in c.note
    assert c.to_json()["survivors"]


def test_effective_exceptional_sum_is_not_proved():
    m = build_model("standard", 5)
    c = prove_non_effective(m, m.cls("N1 + N2"))
    assert not c.proved


def test_bad_depth_and_shape():
    m = build_model("standard", 5)
    with pytest.raises(ValueError):
        prove_non_effective(m, m.cls("-L"), 0)
    with pytest.raises(UnsupportedShapeError):
        prove_non_effective(m, m.cls("L - N1"))


# -- soundness against a hand-declared effective cone --------------------------


def toy_model():
    # H^2 = 4 with two disjoint (-2)-curves
    name = "toy-rank3"
    g = ((Fraction(4), Fraction(0), Fraction(0)), (Fraction(0), Fraction(-2), Fraction(0)), (Fraction(0), Fraction(0), Fraction(-2)))
    h = LatticeClass(name, (2, 0, 0))
    n1 = LatticeClass(name, (0, 2, 0))
    n2 = LatticeClass(name, (0, 0, 2))
    return LatticeModel(name, 3, ("H", "N1", "N2"), g, (), ((0,), (1,), (2,)), {"H": h, "N1": n1, "N2": n2}, (h,), (n1, n2))


# generators of the declared effective monoid: irreducible curves meeting each other >= 0,
# and only N1, N2 have H-coefficient 0
TOY_MOVING = ((1, 0, 0), (1, -1, 0), (1, 0, -1), (2, -3, 0), (2, 0, -3))
TOY_GENERATORS = TOY_MOVING + ((0, 1, 0), (0, 0, 1))


def toy_effective(c, start=0):
    h, a, b = c
    if h == 0:
        return a >= 0 and b >= 0
    for k in range(start, len(TOY_MOVING)):
        g = TOY_MOVING[k]
        if g[0] <= h and toy_effective((h - g[0], a - g[1], b - g[2]), k):
            return True
    return False


def test_toy_generators_are_consistent():
    m = toy_model()
    gens = [LatticeClass(m.name, tuple(2 * x for x in gen)) for gen in TOY_GENERATORS]
    for a in gens:
        assert m.pair(a, m.nef_classes[0]) >= 0
        for b in gens:
            if a != b:
                assert m.pair(a, b) >= 0


def test_toy_soundness_oracle():
    m = toy_model()
    proved = effective = 0
    for c in product(range(0, 6), range(-7, 8), range(-7, 8)):
        B = LatticeClass(m.name, tuple(2 * x for x in c))
        if m.square(B) != -4:
            continue
        cert = prove_non_effective(m, B, 4)
        if toy_effective(c):
            effective += 1
            assert not cert.proved, c
        proved += cert.proved
    assert effective >= 10 and proved >= 10


@given(st.integers(0, 5), st.integers(-7, 7), st.integers(-7, 7), st.integers(1, 3))
@settings(max_examples=80)
def test_monotone_in_depth(h, a, b, d):
    m = toy_model()
    B = LatticeClass(m.name, (2 * h, 2 * a, 2 * b))
    if m.square(B) != -4:
        return
    if prove_non_effective(m, B, d).proved:
        assert prove_non_effective(m, B, d + 1).proved


@pytest.mark.parametrize("i", [2, 3])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_monotone_on_chain_targets(i, d):
    m = build_model("nonstandard-hyp", i)
    for x in (f"{i}*E - e", f"R - {i - 1}*E - e"):
        if prove_non_effective(m, m.cls(x), d).proved:
            assert prove_non_effective(m, m.cls(x), d + 1).proved


# -- decompositions ----------------------------------------------------------


@pytest.mark.parametrize("g", [6, 11, 20])
def test_no_moving_decomposition(g):
    m = build_model("standard", g)
    ok, rep = check_no_moving_decomposition(m, m.cls("L - e"))
    assert ok and rep.inspected == 2 * 2 ** 8
    assert [s["a"] for s in rep.splits] == [[0, 1], [1, 0]]


def test_decomposition_shape_errors():
    m = build_model("standard", 7)
    with pytest.raises(UnsupportedShapeError):
        check_no_moving_decomposition(m, m.cls("N1"))
    with pytest.raises(UnsupportedShapeError):
        check_no_moving_decomposition(m, m.cls("2*L - e"))
    with pytest.raises(UnsupportedShapeError):
        check_no_moving_decomposition(build_model("standard-hyp", 7), build_model("standard-hyp", 7).cls("L - e"))
    with pytest.raises(UnsupportedShapeError):
        check_no_moving_decomposition(build_model("nonstandard", 2), build_model("nonstandard", 2).cls("L - e"))


def test_rigid_parts_certified_by_peeling():
    m = build_model("standard", 6)
    _, rep = check_no_moving_decomposition(m, m.cls("L - e"), cap=2)
    rows = rep.splits[0]["decompositions"]
    assert len(rows) == 3 ** 8 and all(r["rigid"] for r in rows)


# -- suites ------------------------------------------------------------------


def test_suites_pass_on_small_ranges():
    assert [e.status for e in verify_vanishing_suite("lemma_4_2", range(2, 5))] == ["pass"] * 3
    entries = verify_vanishing_suite("lemma_4_4", range(2, 4))
    assert all(e.status == "pass" and len(e.artifact["certificates"]) == 4 for e in entries)
    assert all(e.status == "pass" for e in verify_vanishing_suite("thm_4_1_chain", range(2, 4)))
    assert all(e.status == "pass" for e in verify_vanishing_suite("thm_3_1_decomposition", range(6, 8)))


def test_suite_failure_does_not_abort():
    entries = verify_vanishing_suite("lemma_4_2", [0, 2])
    assert [e.status for e in entries] == ["error", "pass"]
    entries = verify_vanishing_suite("lemma_4_4", [4], max_depth=1)
    assert entries[0].status == "fail"


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify_vanishing_suite("lemma_9_9", [1])
