"""Exact-rational helpers: ``p/q`` formatting, parsing and a small nullspace solver."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ExactRational = Fraction


def fmt(x) -> str:
    """Format a rational as ``p/q`` (integers without ``/1``)."""
    return str(Fraction(x))


def parse(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot read {s!r} as an exact rational")


def fmt_vec(v: Iterable) -> list[str]:
    return [fmt(x) for x in v]


def nullspace(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix, by exact row reduction."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        raise ValueError("empty system")
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][fc]
        basis.append(v)
    return basis
