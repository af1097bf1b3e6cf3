"""Test-curve calculus on the (lambda, d0', d0'', d0_ram) slice of the Prym moduli Picard group.

The two test curves are Lefschetz pencils on Nikulin surfaces.  Their
intersection numbers are derived here from the lattice models and a nodal
fibre count, so nothing in the tables below is typed in by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .lattice import LatticeClass, LatticeModel, build_model
from .rational import fmt, nullspace

K3_EULER = 24


class DivisorError(ValueError):
    pass


class DegeneracyError(DivisorError):
    pass


@dataclass(frozen=True)
class PicVector:
    lam: Fraction
    d0p: Fraction
    d0pp: Fraction
    d0ram: Fraction

    def __post_init__(self):
        for f in ("lam", "d0p", "d0pp", "d0ram"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.lam, self.d0p, self.d0pp, self.d0ram)

    def __add__(self, o: "PicVector") -> "PicVector":
        return PicVector(*(a + b for a, b in zip(self.as_tuple(), o.as_tuple())))

    def scale(self, c) -> "PicVector":
        return PicVector(*(Fraction(c) * a for a in self.as_tuple()))

    def to_json(self):
        return dict(zip(("lambda", "d0p", "d0pp", "d0ram"), map(fmt, self.as_tuple())))


@dataclass(frozen=True)
class TestCurveVector:
    lam: Fraction
    d0p: Fraction
    d0pp: Fraction
    d0ram: Fraction
    genus: int = 0
    name: str = ""

    __test__ = False  # not a pytest class

    def __post_init__(self):
        for f in ("lam", "d0p", "d0pp", "d0ram"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.lam, self.d0p, self.d0pp, self.d0ram)

    def to_json(self):
        doc = dict(zip(("lambda", "d0p", "d0pp", "d0ram"), map(fmt, self.as_tuple())))
        doc.update(genus=self.genus, name=self.name)
        return doc


def euler_nodal_count(surface_euler: int, curve_self_int: int) -> int:
    """Number of nodal fibres of a Lefschetz pencil of curves with the given square.

    Blowing up the ``C^2`` base points gives a fibration over P^1 with fibres of
    genus ``h = C^2/2 + 1``; each node adds one to the Euler number.
    """
    if curve_self_int < 0 or curve_self_int % 2:
        raise DivisorError(f"self-intersection must be even and >= 0, got {curve_self_int}")
    h = curve_self_int // 2 + 1
    return (surface_euler + curve_self_int) - 2 * (2 - 2 * h)


def _pencil(model: LatticeModel, curve: LatticeClass, genus: int, name: str) -> TestCurveVector:
    sq = model.square(curve)
    if sq.denominator != 1:
        raise DivisorError("pencil class must have integral square")
    sq = int(sq)
    # lambda = chi(O_S) + h - 1 with h = C^2/2 + 1 on a K3
    lam = sq // 2 + 2
    disjoint = [n for n in model.known_neg2_curves if model.pair(curve, n) == 0]
    crossing = [n for n in model.known_neg2_curves if model.pair(curve, n) == 1]
    # fibres through a disjoint (-2)-curve are counted in d0_ram, twice in the pullback of delta_0
    d0p = euler_nodal_count(K3_EULER, sq) - 2 * len(disjoint)
    d0ram = len(disjoint) + sum(model.square(n) for n in crossing) / 2
    # no member of either pencil is a d0'' fibre
    return TestCurveVector(lam, d0p, 0, d0ram, genus, name)


def standard_pencil_vector(g: int) -> TestCurveVector:
    """Pencil in |L| on a standard Nikulin surface of genus g."""
    if g < 2:
        raise DivisorError(f"need g >= 2, got {g}")
    m = build_model("standard", g)
    return _pencil(m, m.cls("L"), g, "standard")


def nonstandard_pencil_vector(g: int) -> TestCurveVector:
    """Pencil in |R| on a non-standard Nikulin surface of genus ``4g - 5``."""
    if g < 3 or g % 2 == 0:
        raise DivisorError(f"need odd g >= 3, got {g}")
    m = build_model("nonstandard", (g - 1) // 2)
    return _pencil(m, m.cls("R"), g, "nonstandard")


def intersect(v: PicVector, t: TestCurveVector) -> Fraction:
    return sum((a * b for a, b in zip(v.as_tuple(), t.as_tuple())), Fraction(0))


def pullback_delta0(t: TestCurveVector) -> Fraction:
    """Intersection with the pullback of delta_0, which is ``d0' + d0'' + 2 d0_ram``."""
    return t.d0p + t.d0pp + 2 * t.d0ram


@dataclass(frozen=True)
class DifferenceClassSolution:
    i: int
    vector: PicVector        # d0pp holds the display annotation, not a solved value
    d0pp_determined: bool
    pencils: tuple[TestCurveVector, TestCurveVector]
    residuals: tuple[Fraction, Fraction]

    def to_json(self):
        cls = self.vector.to_json()
        cls["d0pp"] = "undetermined"
        return {
            "i": self.i,
            "normalized_class": cls,
            "d0pp_annotation": fmt(self.vector.d0pp),
            "pencils": [p.to_json() for p in self.pencils],
            "residuals": [fmt(r) for r in self.residuals],
        }


def solve_difference_class(i: int) -> DifferenceClassSolution:
    """Class killed by both pencils of Prym genus ``2i+1``, normalised to ``lambda = 3i+1``.

    Solved in the (lambda, d0', d0_ram) slice; both pencils miss d0'', so that
    coefficient is left undetermined and carries ``-i/2`` only as an annotation.
    """
    if i < 1:
        raise DivisorError(f"need i >= 1, got {i}")
    g = 2 * i + 1
    ps = (standard_pencil_vector(g), nonstandard_pencil_vector(g))
    rows = [[p.lam, p.d0p, p.d0ram] for p in ps]
    ker = nullspace(rows)
    if len(ker) != 1:
        raise DegeneracyError(f"solution space has dimension {len(ker)}, expected 1")
    k = ker[0]
    if k[0] == 0:
        raise DegeneracyError("solution has zero lambda-coefficient")
    c = Fraction(3 * i + 1) / k[0]
    v = PicVector(c * k[0], c * k[1], Fraction(-i, 2), c * k[2])
    solved = PicVector(v.lam, v.d0p, 0, v.d0ram)
    res = tuple(intersect(solved, p) for p in ps)
    return DifferenceClassSolution(i, v, False, ps, res)


def srange_coefficients(i: int) -> tuple[Fraction, Fraction]:
    """The two multipliers in the effective combination bounding the Prym slope."""
    if i < 1:
        raise DivisorError(f"need i >= 1, got {i}")
    top = comb(4 * i, 2 * i - 1)
    first = Fraction(top, comb(2 * i, i - 1)) * Fraction(i - 1, 4 * i - 1)
    second = Fraction(top, comb(2 * i, i)) * Fraction(3, 4 * i - 1)
    return first, second
