"""Brill-Noether numbers, secant-locus dimensions and limit-series bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    pass


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number ``g - (r+1)(g-d+r)``."""
    return g - (r + 1) * (g - d + r)


def secant_expected_dim(e: int, f: int, r: int) -> int:
    """Expected dimension ``e - f(r+1-e+f)`` of the locus of degree-e divisors failing f conditions.

    Accepts ``0 <= f <= e``; ``f = e`` is allowed so the genus-3 case of the
    difference divisor (``e = f = 1``) stays in range.
    """
    if f < 0 or f > e:
        raise DomainError(f"need 0 <= f <= e, got e={e}, f={f}")
    return e - f * (r + 1 - e + f)


def prym_secant_expected_dim(g: int, e: int, f: int) -> int:
    """Same count for the Prym-canonical system, which has ``r = g-2``."""
    if f < 0 or f > e or e >= g:
        raise DomainError(f"need 0 <= f <= e < g, got g={g}, e={e}, f={f}")
    return e - f * (g - 1 - e + f)


def divisorial_pairs(g: int) -> list[tuple[int, int]]:
    """All ``(e, f)`` with ``0 <= f <= e <= g-1``, ``e >= 1`` and expected dimension -1.

    Sorted by f, then e.  Two families show up: ``(i, 1)`` when ``g = 2i+1``,
    and ``(f^2-1, f)`` when ``g = f^2``.  The second family sits at
    ``e = g - 1``; putting ``e = g`` into the dimension count would instead give
    ``g = f^2 - f - 1``.
    """
    if g < 3:
        raise DomainError(f"need g >= 3, got {g}")
    out = []
    for f in range(g):
        for e in range(max(f, 1), g):
            if e - f * (g - 1 - e + f) == -1:
                out.append((e, f))
    return out


@dataclass(frozen=True)
class RamificationSequence:
    r: int
    d: int
    entries: tuple[int, ...]

    def __post_init__(self):
        ent = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", ent)
        if self.r < 0 or len(ent) != self.r + 1:
            raise DomainError(f"need r+1 = {self.r + 1} entries, got {len(ent)}")
        if ent and (ent[0] < 0 or ent[-1] > self.d - self.r):
            raise DomainError(f"entries must lie in [0, d-r] = [0, {self.d - self.r}]")
        if any(a > b for a, b in zip(ent, ent[1:])):
            raise DomainError("entries must be non-decreasing")

    @property
    def vanishing(self) -> tuple[int, ...]:
        """Vanishing orders ``a_i = alpha_i + i``."""
        return tuple(a + i for i, a in enumerate(self.entries))


def ram_weight(seq: RamificationSequence) -> int:
    return sum(seq.entries)


@dataclass(frozen=True)
class WeightAssignment:
    """Ramification weights at the g attachment points and at the node, on both sides."""

    g: int
    e: int
    f: int
    m: int
    alpha_weights: tuple[int, ...]
    bar_alpha_weights: tuple[int, ...]
    p_weights: tuple[int, int]

    @property
    def full(self) -> int:
        return self.f * (self.e - self.f + 1)

    def validate(self) -> None:
        g, e, f, m, full = self.g, self.e, self.f, self.m, self.full
        if not (0 <= f <= e):
            raise DomainError(f"need 0 <= f <= e, got e={e}, f={f}")
        if not (0 <= m <= min(e, g)):
            raise DomainError(f"need 0 <= m <= min(e, g), got m={m}")
        if len(self.alpha_weights) != g or len(self.bar_alpha_weights) != g:
            raise DomainError(f"need {g} weights on each side")
        if len(self.p_weights) != 2:
            raise DomainError("need two node weights")
        weights = (*self.alpha_weights, *self.bar_alpha_weights, *self.p_weights)
        if any(w < 0 or w > full for w in weights):
            raise DomainError(f"weights must lie in [0, {full}]")
        for j, (a, b) in enumerate(zip(self.alpha_weights, self.bar_alpha_weights)):
            if a + b != full:
                raise DomainError(f"weights at point {j + 1} sum to {a + b}, expected {full}")
        if sum(self.p_weights) != full:
            raise DomainError(f"node weights sum to {sum(self.p_weights)}, expected {full}")


@dataclass(frozen=True)
class DimensionBound:
    unmarked: int     # elliptic tails j > m carrying no point of the divisor
    marked: int       # elliptic tails j <= m carrying one point each
    left: int         # rational spine half holding the first m attachment points
    right: int        # the other spine half
    total: int

    def to_json(self):
        return {"unmarked": self.unmarked, "marked": self.marked, "left": self.left,
                "right": self.right, "total": self.total}


def limit_series_dimension_bound(w: WeightAssignment) -> DimensionBound:
    """Itemised dimension count for the limit secant locus on a flag curve.

    The total always collapses to ``m - f(g-1-e+f)``; the weights only move
    dimension between the items.
    """
    w.validate()
    g, e, f, m = w.g, w.e, w.f, w.m
    a, ab = w.alpha_weights, w.bar_alpha_weights
    core = f * (e - f)
    unmarked = sum(core - a[j] for j in range(m, g))
    marked = sum(1 + core - a[j] for j in range(m))
    left = w.full - sum(ab[:m]) - w.p_weights[0]
    right = w.full - sum(ab[m:]) - w.p_weights[1]
    return DimensionBound(unmarked, marked, left, right, unmarked + marked + left + right)


def hurwitz_slope(g: int) -> Fraction:
    """Slope ``6 + 12/(g+1)`` of the Hurwitz divisor."""
    if g < 1:
        raise DomainError(f"need g >= 1, got {g}")
    return 6 + Fraction(12, g + 1)
