"""Picard lattices of (hyperelliptic) Nikulin surfaces in exact arithmetic.

Every model uses the ambient basis ``(L, [E], N1, ..., N8)``.  Classes are
stored as *doubled* integer coefficient vectors, so the half-integral classes
of the Nikulin lattice (``e = (N1 + ... + N8)/2``, ``R = (L - N1 - N2)/2``)
are represented exactly and membership reduces to parity tests.

Membership is the conjunction of two kinds of mod-2 conditions on the doubled
coefficients:

* ``parity_groups``: within a group all doubled coefficients share a parity;
* ``even_sums``: the doubled coefficients over the index set add up to an even
  number (a singleton set means the coordinate is integral).
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .rational import fmt, parse


class LatticeError(ValueError):
    """Base class for lattice-level failures."""


class ParameterError(LatticeError):
    pass


class StructureError(LatticeError):
    pass


class ExpressionError(LatticeError):
    pass


class ModelKind(str, Enum):
    STANDARD = "standard"
    STANDARD_HYP = "standard-hyp"
    NONSTANDARD = "nonstandard"
    NONSTANDARD_HYP = "nonstandard-hyp"

    @classmethod
    def coerce(cls, kind) -> "ModelKind":
        if isinstance(kind, cls):
            return kind
        key = str(kind).strip().lower().replace("_", "-")
        aliases = {
            "standard-hyperelliptic": cls.STANDARD_HYP,
            "nonstandard-hyperelliptic": cls.NONSTANDARD_HYP,
            "non-standard": cls.NONSTANDARD,
            "non-standard-hyp": cls.NONSTANDARD_HYP,
        }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ParameterError(f"unknown model kind {kind!r}") from None

    @property
    def hyperelliptic(self) -> bool:
        return self in (ModelKind.STANDARD_HYP, ModelKind.NONSTANDARD_HYP)

    @property
    def standard(self) -> bool:
        return self in (ModelKind.STANDARD, ModelKind.STANDARD_HYP)


@dataclass(frozen=True)
class LatticeClass:
    """A coefficient vector over a model's ambient basis, kept doubled."""

    model_name: str
    doubled: tuple[int, ...]

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def _check(self, other: "LatticeClass") -> None:
        if self.model_name != other.model_name or len(self.doubled) != len(other.doubled):
            raise StructureError(
                f"classes live in different models: {self.model_name!r} vs {other.model_name!r}"
            )

    def __add__(self, other: "LatticeClass") -> "LatticeClass":
        self._check(other)
        return LatticeClass(self.model_name, tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "LatticeClass") -> "LatticeClass":
        self._check(other)
        return LatticeClass(self.model_name, tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "LatticeClass":
        return LatticeClass(self.model_name, tuple(-a for a in self.doubled))

    def __mul__(self, k: int) -> "LatticeClass":
        if not isinstance(k, int):
            return NotImplemented
        return LatticeClass(self.model_name, tuple(k * a for a in self.doubled))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.doubled)

    def to_json(self) -> list[str]:
        return [fmt(c) for c in self.coeffs]


@dataclass(frozen=True, eq=False)
class LatticeModel:
    name: str
    rank: int
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    parity_groups: tuple[tuple[int, ...], ...] = ()
    even_sums: tuple[tuple[int, ...], ...] = ()
    named_classes: Mapping[str, LatticeClass] = field(default_factory=dict)
    nef_classes: tuple[LatticeClass, ...] = ()
    known_neg2_curves: tuple[LatticeClass, ...] = ()

    def __post_init__(self):
        if self.rank < 1 or len(self.basis_labels) != self.rank:
            raise StructureError("rank and basis labels disagree")
        if len(self.gram) != self.rank or any(len(r) != self.rank for r in self.gram):
            raise StructureError("gram matrix must be rank x rank")
        for i in range(self.rank):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise StructureError(f"gram not symmetric at ({i}, {j})")
        den = lcm(*(x.denominator for row in self.gram for x in row))
        object.__setattr__(self, "_gden", den)
        object.__setattr__(
            self, "_gnum", tuple(tuple(int(x * den) for x in row) for row in self.gram)
        )
        for label, c in self.named_classes.items():
            self._own(c)
            if not self.is_member(c):
                raise StructureError(f"named class {label} is not in the lattice")
        for c in (*self.nef_classes, *self.known_neg2_curves):
            self._own(c)
            if not self.is_member(c):
                raise StructureError("nef / (-2) classes must be lattice members")
        for n in self.known_neg2_curves:
            if self.pair(n, n) != -2:
                raise StructureError("known (-2)-curve with self-intersection != -2")
            for h in self.nef_classes:
                if self.pair(h, n) < 0:
                    raise StructureError("nef class negative on a known (-2)-curve")

    def _own(self, v: LatticeClass) -> None:
        if v.model_name != self.name or len(v.doubled) != self.rank:
            raise StructureError(
                f"class of model {v.model_name!r} (length {len(v.doubled)}) "
                f"used with model {self.name!r} (rank {self.rank})"
            )

    # -- arithmetic -----------------------------------------------------

    def pair(self, v: LatticeClass, w: LatticeClass) -> Fraction:
        self._own(v)
        self._own(w)
        g = self._gnum
        total = 0
        for i, x in enumerate(v.doubled):
            if x:
                row = g[i]
                total += x * sum(row[j] * y for j, y in enumerate(w.doubled) if y)
        return Fraction(total, 4 * self._gden)

    def square(self, v: LatticeClass) -> Fraction:
        return self.pair(v, v)

    def is_member(self, v: LatticeClass) -> bool:
        self._own(v)
        x = v.doubled
        for grp in self.parity_groups:
            if len({x[k] & 1 for k in grp}) > 1:
                return False
        for s in self.even_sums:
            if sum(x[k] for k in s) & 1:
                return False
        return True

    # -- construction helpers -------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise ExpressionError(f"{label!r} is not a basis label of {self.name}") from None

    def from_doubled(self, doubled: Sequence[int]) -> LatticeClass:
        if len(doubled) != self.rank:
            raise StructureError("dimension mismatch")
        return LatticeClass(self.name, tuple(int(x) for x in doubled))

    def from_coeffs(self, coeffs: Sequence) -> LatticeClass:
        if len(coeffs) != self.rank:
            raise StructureError("dimension mismatch")
        out = []
        for c in coeffs:
            d = 2 * parse(c)
            if d.denominator != 1:
                raise ExpressionError(f"coefficient {fmt(c)} is not a half-integer")
            out.append(int(d))
        return LatticeClass(self.name, tuple(out))

    def basis_vector(self, k: int) -> LatticeClass:
        x = [0] * self.rank
        x[k] = 2
        return LatticeClass(self.name, tuple(x))

    def zero(self) -> LatticeClass:
        return LatticeClass(self.name, (0,) * self.rank)

    def cls(self, expr: str) -> LatticeClass:
        return class_from_expr(self, expr)

    def label_of(self, v: LatticeClass) -> str:
        """Readable ``a*L + b*E + ...`` form of a class."""
        terms = []
        for lab, c in zip(self.basis_labels, v.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = lab if mag == 1 else f"{fmt(mag)}*{lab}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    @cached_property
    def neg2_coords(self) -> tuple[int, ...]:
        """Basis coordinates that are themselves known (-2)-curves."""
        out = []
        for n in self.known_neg2_curves:
            nz = [k for k, x in enumerate(n.doubled) if x]
            if len(nz) == 1 and n.doubled[nz[0]] == 2:
                out.append(nz[0])
        return tuple(out)

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "labels": list(self.basis_labels),
            "gram": [[fmt(x) for x in row] for row in self.gram],
            "parity_groups": [list(g) for g in self.parity_groups],
            "even_sums": [list(s) for s in self.even_sums],
            "named_classes": {k: v.to_json() for k, v in self.named_classes.items()},
            "nef": [v.to_json() for v in self.nef_classes],
            "neg2": [v.to_json() for v in self.known_neg2_curves],
        }

    @classmethod
    def from_json(cls, doc) -> "LatticeModel":
        if isinstance(doc, str):
            doc = json.loads(doc)
        name = doc["name"]
        rank = int(doc["rank"])

        def vec(coeffs):
            d = [2 * parse(c) for c in coeffs]
            if any(x.denominator != 1 for x in d) or len(d) != rank:
                raise StructureError(f"bad class vector {coeffs!r}")
            return LatticeClass(name, tuple(int(x) for x in d))

        return cls(
            name=name,
            rank=rank,
            basis_labels=tuple(doc["labels"]),
            gram=tuple(tuple(parse(x) for x in row) for row in doc["gram"]),
            parity_groups=tuple(tuple(g) for g in doc.get("parity_groups", [])),
            even_sums=tuple(tuple(s) for s in doc.get("even_sums", [])),
            named_classes={k: vec(v) for k, v in doc.get("named_classes", {}).items()},
            nef_classes=tuple(vec(v) for v in doc.get("nef", [])),
            known_neg2_curves=tuple(vec(v) for v in doc.get("neg2", [])),
        )


def build_model(kind, genus_param: int) -> LatticeModel:
    """Build one of the four Nikulin Picard lattices.

    ``genus_param`` is the genus ``g`` for the standard kinds and the integer
    ``i`` (with ``L^2 = 16i - 4``) for the non-standard kinds.
    """
    kind = ModelKind.coerce(kind)
    if isinstance(genus_param, bool) or not isinstance(genus_param, int):
        raise ParameterError("genus parameter must be an integer")
    if kind.standard:
        if genus_param < 2:
            raise ParameterError(f"genus g={genus_param} gives L^2 = {2 * genus_param - 2} <= 0")
        l2 = 2 * genus_param - 2
        el = 2
        tag = f"g{genus_param}"
    else:
        if genus_param < 1:
            raise ParameterError(f"i={genus_param} gives L^2 = {16 * genus_param - 4} <= 0")
        l2 = 16 * genus_param - 4
        el = 4
        tag = f"i{genus_param}"
    hyp = kind.hyperelliptic
    labels = ["L"] + (["E"] if hyp else []) + [f"N{j}" for j in range(1, 9)]
    rank = len(labels)
    off = 2 if hyp else 1
    g = [[Fraction(0)] * rank for _ in range(rank)]
    g[0][0] = Fraction(l2)
    if hyp:
        g[0][1] = g[1][0] = Fraction(el)
    for j in range(8):
        g[off + j][off + j] = Fraction(-2)
    name = f"{kind.value}-{tag}"

    def dv(**coeffs):
        x = [0] * rank
        for lab, c in coeffs.items():
            x[labels.index(lab)] = int(2 * Fraction(c))
        return LatticeClass(name, tuple(x))

    ns = [f"N{j}" for j in range(1, 9)]
    named = {"L": dv(L=1)}
    if hyp:
        named["E"] = dv(E=1)
    for n in ns:
        named[n] = dv(**{n: 1})
    named["e"] = dv(**{n: Fraction(1, 2) for n in ns})
    n_idx = tuple(range(off, off + 8))
    if kind.standard:
        parity_groups = (n_idx,)
        even_sums = ((0,),) + (((1,),) if hyp else ())
    else:
        named["R"] = dv(L=Fraction(1, 2), N1=Fraction(-1, 2), N2=Fraction(-1, 2))
        named["Rp"] = dv(L=Fraction(1, 2), **{n: Fraction(-1, 2) for n in ns[2:]})
        # doubled L-parity + parity of {N3..N8} = parity of {N1, N2}
        parity_groups = (n_idx[:2], n_idx[2:])
        even_sums = ((0, n_idx[0], n_idx[2]),) + (((1,),) if hyp else ())
    nef = (named["L"], named["E"]) if hyp else (named["L"],)
    return LatticeModel(
        name=name,
        rank=rank,
        basis_labels=tuple(labels),
        gram=tuple(tuple(r) for r in g),
        parity_groups=parity_groups,
        even_sums=even_sums,
        named_classes=named,
        nef_classes=nef,
        known_neg2_curves=tuple(named[n] for n in ns),
    )


def pair(model: LatticeModel, v: LatticeClass, w: LatticeClass) -> Fraction:
    return model.pair(v, w)


def is_member(model: LatticeModel, v: LatticeClass) -> bool:
    return model.is_member(v)


_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)


def class_from_expr(model: LatticeModel, expr: str) -> LatticeClass:
    """Resolve a rational combination of named classes, e.g. ``"L - 3*E - e"``.

    The result need not be a lattice member, but its coefficients must be
    half-integers.
    """
    if not isinstance(expr, str) or not expr.strip():
        raise ExpressionError("empty expression")
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"malformed expression {expr!r}: {exc.msg}") from None

    # values are either Fraction scalars or lists of Fraction (vectors)
    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in model.named_classes:
                raise ExpressionError(f"unknown class name {node.id!r} in model {model.name}")
            return list(model.named_classes[node.id].coeffs)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            if isinstance(node.op, ast.UAdd):
                return v
            return -v if isinstance(v, Fraction) else [-x for x in v]
        if isinstance(node, ast.BinOp) and isinstance(node.op, _BINOPS):
            a, b = ev(node.left), ev(node.right)
            sa, sb = isinstance(a, Fraction), isinstance(b, Fraction)
            op = node.op
            if isinstance(op, (ast.Add, ast.Sub)):
                if sa != sb:
                    raise ExpressionError("cannot add a number to a class")
                sign = 1 if isinstance(op, ast.Add) else -1
                if sa:
                    return a + sign * b
                return [x + sign * y for x, y in zip(a, b)]
            if isinstance(op, ast.Mult):
                if sa and sb:
                    return a * b
                if sa:
                    return [a * y for y in b]
                if sb:
                    return [x * b for x in a]
                raise ExpressionError("product of two classes is not a class")
            if not sb:
                raise ExpressionError("division by a class")
            if b == 0:
                raise ExpressionError("division by zero")
            return a / b if sa else [x / b for x in a]
        raise ExpressionError(f"unsupported syntax in {expr!r}")

    val = ev(tree.body)
    if isinstance(val, Fraction):
        if val != 0:
            raise ExpressionError("expression evaluates to a number, not a class")
        val = [Fraction(0)] * model.rank
    return model.from_coeffs(val)


def classes(model: LatticeModel, exprs: Iterable[str]) -> list[LatticeClass]:
    return [class_from_expr(model, e) for e in exprs]


def model_from_name(name: str) -> LatticeModel:
    """Rebuild a model from names like ``standard-hyp-g7`` or ``nonstandard-i2``."""
    kind, _, tag = name.rpartition("-")
    if not kind or len(tag) < 2 or tag[0] not in "gi" or not tag[1:].isdigit():
        raise ParameterError(f"cannot read model name {name!r}")
    model = build_model(kind, int(tag[1:]))
    if model.name != name:
        raise ParameterError(f"cannot read model name {name!r}")
    return model
