"""Certificate-producing non-effectivity prover for classes on Nikulin surfaces.

The prover knows one inference rule and three leaf rules.

Inference: if an effective class ``B`` has ``B^2 < 0`` then some irreducible
(-2)-curve ``D`` satisfies ``B.D < 0`` and ``B - D`` is effective.  For a
target with ``B^2 = -4`` every such ``D`` is enumerated inside a finite box
cut out by the declared nef classes, and each one must be eliminated.

Leaves:

* ``negative_on_nef``: a class pairing negatively with a nef class is not
  effective;
* ``exceptional_support``: a class in the span of the (-2)-curves ``N_j`` is
  effective only if it is a non-negative integral combination of them;
* ``direct_contradiction``: a branch of the search whose lattice solutions
  all have ``B.D >= 0`` (recorded per branch, never per candidate).

Before enumerating, fixed components are peeled off: if ``B.N < 0`` for a
known (-2)-curve ``N`` then ``B`` is effective iff ``B - N`` is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable

from . import kernels
from .lattice import LatticeClass, LatticeError, LatticeModel, StructureError, build_model
from .rational import fmt

DEFAULT_MAX_DEPTH = 3
DEFAULT_COEFF_CAP = 32
DEFAULT_PEEL_CAP = 1024
DEFAULT_DECOMP_CAP = 1

SCHEMA = "prymcalc.noneffectivity/1"


class EffectivityError(LatticeError):
    pass


class UnboundedSearchError(EffectivityError):
    pass


class UnsupportedShapeError(EffectivityError):
    pass


class PeelLimitError(EffectivityError):
    pass


# ---------------------------------------------------------------------------
# peeling


def peel_trace(model: LatticeModel, A: LatticeClass, max_iter: int = DEFAULT_PEEL_CAP):
    """Peel fixed (-2)-curves off ``A``; returns ``(result, steps)``.

    Each step is ``(curve_index, pairing)`` with ``pairing = A_current . N < 0``.
    """
    if not model.is_member(A):
        raise EffectivityError("peeling needs a lattice member")
    curves = model.known_neg2_curves
    cur = [model.pair(A, n) for n in curves]
    mutual = [[model.pair(n, m) for m in curves] for n in curves]
    x = list(A.doubled)
    steps = []
    for _ in range(max_iter):
        k = next((k for k, p in enumerate(cur) if p < 0), None)
        if k is None:
            return LatticeClass(A.model_name, tuple(x)), steps
        steps.append((k, cur[k]))
        for j, d in enumerate(curves[k].doubled):
            x[j] -= d
        for m in range(len(curves)):
            cur[m] -= mutual[k][m]
    raise PeelLimitError(f"peeling did not stabilise within {max_iter} steps")


def peel_base_curves(model: LatticeModel, A: LatticeClass, max_iter: int = DEFAULT_PEEL_CAP) -> LatticeClass:
    """Subtract known (-2)-curves meeting ``A`` negatively until none is left.

    If ``A`` is effective, so is the result.
    """
    return peel_trace(model, A, max_iter)[0]


# ---------------------------------------------------------------------------
# structure helpers


def _split_coords(model: LatticeModel):
    neg = model.neg2_coords
    if len(neg) != len(model.known_neg2_curves):
        raise StructureError("every known (-2)-curve must be a basis vector")
    pos = tuple(k for k in range(model.rank) if k not in neg)
    g = model.gram
    for a in neg:
        for b in range(model.rank):
            if b != a and g[a][b] != 0:
                raise StructureError(
                    "enumeration needs (-2)-curve coordinates orthogonal to every other basis vector"
                )
    return pos, neg


def in_exceptional_span(model: LatticeModel, v: LatticeClass) -> bool:
    neg = set(model.neg2_coords)
    return all(x == 0 for k, x in enumerate(v.doubled) if k not in neg)


def is_exceptional_effective(model: LatticeModel, v: LatticeClass) -> bool:
    """True iff ``v`` is a non-negative integral combination of the known (-2)-curves."""
    return all(x >= 0 and x % 2 == 0 for x in (v.doubled[k] for k in model.neg2_coords))


def _target_leaf(model: LatticeModel, B: LatticeClass, subject: str):
    for h in model.nef_classes:
        p = model.pair(B, h)
        if p < 0:
            return {"tag": "negative_on_nef", "data": {"subject": subject, "nef": h.to_json(), "pairing": fmt(p)}}
    if in_exceptional_span(model, B) and not is_exceptional_effective(model, B):
        return {"tag": "exceptional_support", "data": {"subject": subject, "class": B.to_json()}}
    return None


def _half_ceil(x: Fraction) -> Fraction:
    return Fraction(math.ceil(2 * x), 2)


def _half_floor(x: Fraction) -> Fraction:
    return Fraction(math.floor(2 * x), 2)


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class Inequality:
    """``sum(coeffs[label] * d_label) >= rhs`` over the non-exceptional coordinates of D."""

    coeffs: tuple[tuple[str, Fraction], ...]
    rhs: Fraction
    source: str
    nef: LatticeClass

    def holds(self, model: LatticeModel, D: LatticeClass) -> bool:
        c = D.coeffs
        return sum(a * c[model.index(lab)] for lab, a in self.coeffs) >= self.rhs

    def to_json(self):
        return {
            "coeffs": {lab: fmt(a) for lab, a in self.coeffs},
            "rhs": fmt(self.rhs),
            "source": self.source,
            "nef": self.nef.to_json(),
        }


def nef_inequalities(model: LatticeModel, B: LatticeClass) -> list[Inequality]:
    pos, neg = _split_coords(model)
    out = []
    for h in model.nef_classes:
        row = []
        for k in range(model.rank):
            p = model.pair(model.basis_vector(k), h)
            if k in neg:
                if p != 0:
                    raise StructureError("nef classes must be orthogonal to the (-2)-curves")
            elif p != 0:
                row.append((model.basis_labels[k], p))
        row = tuple(row)
        out.append(Inequality(row, Fraction(0), "D.H>=0", h))
        out.append(Inequality(tuple((lab, -a) for lab, a in row), -model.pair(B, h), "(B-D).H>=0", h))
    return out


def propagate_bounds(model: LatticeModel, ineqs: list[Inequality], cap: int = DEFAULT_COEFF_CAP):
    """Interval propagation on the non-exceptional coordinates.

    Returns ``(box, steps)``: ``box`` maps labels to ``(lo, hi)`` half-integer
    bounds, ``steps`` records each tightening as
    ``(label, side, value, inequality_index)`` in the order it happened.
    """
    pos, _ = _split_coords(model)
    labels = [model.basis_labels[k] for k in pos]
    lo: dict[str, Fraction | None] = {lab: None for lab in labels}
    hi: dict[str, Fraction | None] = {lab: None for lab in labels}
    steps = []
    for _ in range(64):
        changed = False
        for idx, ineq in enumerate(ineqs):
            coeffs = dict(ineq.coeffs)
            for lab, a in coeffs.items():
                rest = Fraction(0)
                ok = True
                for m, c in coeffs.items():
                    if m == lab:
                        continue
                    bound = hi[m] if c > 0 else lo[m]
                    if bound is None:
                        ok = False
                        break
                    rest += c * bound
                if not ok:
                    continue
                val = (ineq.rhs - rest) / a
                if a > 0:
                    val = _half_ceil(val)
                    if lo[lab] is None or val > lo[lab]:
                        lo[lab] = val
                        steps.append((lab, "lower", val, idx))
                        changed = True
                else:
                    val = _half_floor(val)
                    if hi[lab] is None or val < hi[lab]:
                        hi[lab] = val
                        steps.append((lab, "upper", val, idx))
                        changed = True
        if not changed:
            break
    for lab in labels:
        if lo[lab] is None or hi[lab] is None:
            raise UnboundedSearchError(f"unbounded search: coordinate {lab} is not bounded by the nef inequalities")
        if max(abs(lo[lab]), abs(hi[lab])) > cap:
            raise UnboundedSearchError(
                f"unbounded search: coordinate {lab} range [{fmt(lo[lab])}, {fmt(hi[lab])}] exceeds cap {cap}"
            )
    return {lab: (lo[lab], hi[lab]) for lab in labels}, steps


def _parity_masks(model: LatticeModel, pos, neg, point: dict[int, int]):
    """Membership conditions as (mask over neg coords, parity); None if the positive part already fails."""
    where = {k: i for i, k in enumerate(neg)}
    masks, pars = [], []

    def add(idx_set):
        m, par = 0, 0
        for k in idx_set:
            if k in where:
                m |= 1 << where[k]
            else:
                par ^= point[k] & 1
        if m == 0:
            return par == 0
        masks.append(m)
        pars.append(par)
        return True

    for grp in model.parity_groups:
        for a, b in zip(grp, grp[1:]):
            if not add((a, b)):
                return None
    for s in model.even_sums:
        if not add(s):
            return None
    return masks, pars


@dataclass
class Enumeration:
    target: LatticeClass
    inequalities: list[Inequality] = field(default_factory=list)
    box: dict = field(default_factory=dict)
    steps: list = field(default_factory=list)
    branches: list[dict] = field(default_factory=list)
    candidates: list[tuple[LatticeClass, Fraction]] = field(default_factory=list)
    skipped: dict | None = None


def enumerate_minus2_candidates(model: LatticeModel, B: LatticeClass, cap: int = DEFAULT_COEFF_CAP) -> Enumeration:
    """All member classes D with ``D^2 = -2`` and ``B.D < 0`` inside the nef box.

    Also imposed: ``D.N >= 0`` (so ``D != N``) for every known (-2)-curve with
    ``B.N >= 0``, and ``D.H >= 0``, ``(B-D).H >= 0`` for every nef ``H``.
    """
    if not model.is_member(B):
        raise EffectivityError("target is not a lattice member")
    sq = model.square(B)
    if sq != -4:
        raise UnsupportedShapeError(f"enumeration needs B^2 = -4, got {fmt(sq)}")
    res = Enumeration(target=B)
    for h in model.nef_classes:
        p = model.pair(B, h)
        if p < 0:
            res.skipped = {"tag": "negative_on_nef", "data": {"subject": "B", "nef": h.to_json(), "pairing": fmt(p)}}
            return res
    pos, neg = _split_coords(model)
    res.inequalities = nef_inequalities(model, B)
    res.box, res.steps = propagate_bounds(model, res.inequalities, cap)
    weights = []
    for k in neg:
        w = -model.gram[k][k]
        if w <= 0 or w.denominator != 1:
            raise StructureError("(-2)-curve block must have negative integral diagonal")
        weights.append(int(w))
    b_pos_n = [model.pair(B, model.basis_vector(k)) >= 0 for k in neg]
    ranges = [range(int(2 * res.box[model.basis_labels[k]][0]), int(2 * res.box[model.basis_labels[k]][1]) + 1) for k in pos]
    for pt in product(*ranges):
        point = dict(zip(pos, pt))
        x = [0] * model.rank
        for k, v in point.items():
            x[k] = v
        P = LatticeClass(model.name, tuple(x))
        rec = {"point": {model.basis_labels[k]: fmt(Fraction(v, 2)) for k, v in point.items()}}
        res.branches.append(rec)
        if not all(q.holds(model, P) for q in res.inequalities):
            rec.update(tag="outside", solutions=0, candidates=0)
            continue
        t = 4 * (model.square(P) + 2)
        rec["norm"] = fmt(t)
        pm = _parity_masks(model, pos, neg, point)
        if t < 0 or t.denominator != 1 or pm is None:
            rec.update(tag="empty", solutions=0, candidates=0)
            continue
        t = int(t)
        lo, hi = [], []
        for w, ok in zip(weights, b_pos_n):
            r = math.isqrt(t // w)
            lo.append(-r)
            hi.append(0 if ok else r)
        sols = kernels.norm_vectors(lo, hi, weights, t, *pm)
        n_cand = 0
        min_pair = None
        for s in sols:
            for k, v in zip(neg, s):
                x[k] = v
            D = LatticeClass(model.name, tuple(x))
            p = model.pair(B, D)
            min_pair = p if min_pair is None else min(min_pair, p)
            if p < 0:
                res.candidates.append((D, p))
                n_cand += 1
        for k in neg:
            x[k] = 0
        rec.update(solutions=len(sols), candidates=n_cand)
        if min_pair is not None:
            rec["min_pairing"] = fmt(min_pair)
        rec["tag"] = "empty" if not sols else ("direct_contradiction" if n_cand == 0 else "open")
    return res


# ---------------------------------------------------------------------------
# certificates


@dataclass
class CandidateRecord:
    D: LatticeClass
    pairing: Fraction
    reason: str | None
    data: dict
    sub: "NonEffectivityCertificate | None" = None


@dataclass
class NonEffectivityCertificate:
    model_name: str
    target: LatticeClass
    proved: bool
    depth: int
    reduced: LatticeClass
    leaf: dict | None = None
    peeled: list[dict] = field(default_factory=list)
    enumeration: Enumeration | None = None
    candidates: list[CandidateRecord] = field(default_factory=list)
    note: str = ""
    reduced_cert: "NonEffectivityCertificate | None" = None

    @property
    def survivors(self) -> list[LatticeClass]:
        return [c.D for c in self.candidates if c.reason is None]

    def sub_certificates(self) -> list["NonEffectivityCertificate"]:
        """Every distinct certificate reachable through recursive eliminations."""
        seen: dict[tuple, NonEffectivityCertificate] = {}

        def walk(c):
            for s in [c.reduced_cert] + [cand.sub for cand in c.candidates]:
                if s is not None and s.target.doubled not in seen:
                    seen[s.target.doubled] = s
                    walk(s)

        walk(self)
        return sorted(seen.values(), key=lambda c: (c.depth, c.target.doubled))

    def to_json(self, nested: bool = True) -> dict:
        en = self.enumeration
        doc = {
            "schema": SCHEMA,
            "model": self.model_name,
            "target": self.target.to_json(),
            "proved": self.proved,
            "depth": self.depth,
            "leaf": self.leaf,
            "peeled": self.peeled,
            "reduced": self.reduced.to_json(),
            "inequalities": [q.to_json() for q in en.inequalities] if en else [],
            "bounds": [
                {"coordinate": lab, "side": side, "value": fmt(v), "inequality": idx}
                for lab, side, v, idx in en.steps
            ] if en else [],
            "box": {lab: [fmt(a), fmt(b)] for lab, (a, b) in en.box.items()} if en else {},
            "branches": en.branches if en else [],
            "candidates": [
                {"D": c.D.to_json(), "pairing": fmt(c.pairing), "reason": c.reason, "data": c.data}
                for c in self.candidates
            ],
            "survivors": [s.to_json() for s in self.survivors],
            "reduced_proof": self.reduced_cert.target.to_json() if self.reduced_cert else None,
            "note": self.note,
        }
        if nested:
            doc["sub_certificates"] = [s.to_json(nested=False) for s in self.sub_certificates()]
        return doc


class Prover:
    """Proof search with a memo shared across targets of one model."""

    def __init__(self, model: LatticeModel, cap: int = DEFAULT_COEFF_CAP):
        self.model = model
        self.cap = cap
        self.proved: dict[tuple, NonEffectivityCertificate] = {}
        self.failed: dict[tuple, tuple[int, NonEffectivityCertificate]] = {}
        self.active: set[tuple] = set()

    def prove(self, B: LatticeClass, max_depth: int = DEFAULT_MAX_DEPTH) -> NonEffectivityCertificate:
        if max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if not self.model.is_member(B):
            raise EffectivityError("target is not a lattice member")
        sq = self.model.square(B)
        if sq != -4 and _target_leaf(self.model, B, "target") is None:
            raise UnsupportedShapeError(f"prover accepts B^2 = -4 targets only, got {fmt(sq)}")
        return self._prove(B, max_depth)

    def _prove(self, B: LatticeClass, budget: int) -> NonEffectivityCertificate:
        model = self.model
        key = B.doubled
        hit = self.proved.get(key)
        if hit is not None and hit.depth <= budget:
            return hit
        miss = self.failed.get(key)
        if miss is not None and miss[0] >= budget:
            return miss[1]
        if key in self.active:
            return NonEffectivityCertificate(model.name, B, False, 0, B, note="cyclic reduction")

        def done(cert: NonEffectivityCertificate, cache: bool = True):
            if cert.proved:
                self.proved[key] = cert
            elif cache:
                self.failed[key] = (budget, cert)
            return cert

        leaf = _target_leaf(model, B, "target")
        if leaf:
            return done(NonEffectivityCertificate(model.name, B, True, 0, B, leaf=leaf))
        if in_exceptional_span(model, B):
            return done(NonEffectivityCertificate(model.name, B, False, 0, B, note="effective sum of (-2)-curves"))
        reduced, steps = peel_trace(model, B)
        peeled = [
            {"curve": model.known_neg2_curves[k].to_json(), "pairing": fmt(p)} for k, p in steps
        ]
        cert = NonEffectivityCertificate(model.name, B, False, 0, reduced, peeled=peeled)
        if steps:
            leaf = _target_leaf(model, reduced, "reduced")
            if leaf:
                cert.leaf, cert.proved = leaf, True
                return done(cert)
            if in_exceptional_span(model, reduced):
                cert.note = "reduces to an effective sum of (-2)-curves"
                return done(cert)
            # the reduced class gets its own certificate so repeated reductions share it
            self.active.add(key)
            try:
                sub = self._prove(reduced, budget)
            finally:
                self.active.discard(key)
            cert.reduced_cert = sub
            cert.proved, cert.depth = sub.proved, sub.depth
            if not sub.proved:
                cert.note = f"reduced class: {sub.note}"
            return done(cert, cache=sub.note != "cyclic reduction")
        rsq = model.square(reduced)
        if rsq != -4:
            cert.note = f"reduced class has square {fmt(rsq)}; prover handles -4 only"
            return done(cert)
        if budget < 1:
            cert.note = "depth exhausted"
            return done(cert)
        en = enumerate_minus2_candidates(model, reduced, self.cap)
        cert.enumeration = en
        self.active.add(key)
        try:
            cycles = False
            for D, p in en.candidates:
                rec = self._eliminate(reduced, D, p, budget)
                if rec.reason is None and rec.data.get("cyclic"):
                    cycles = True
                cert.candidates.append(rec)
        finally:
            self.active.discard(key)
        cert.proved = all(c.reason is not None for c in cert.candidates)
        subs = [c.sub.depth for c in cert.candidates if c.sub is not None]
        cert.depth = 1 + max(subs, default=0)
        if not cert.proved:
            cert.note = f"no proof found: {len(cert.survivors)} surviving candidate(s)"
        return done(cert, cache=not cycles)

    def _eliminate(self, B, D, p, budget) -> CandidateRecord:
        model = self.model
        if in_exceptional_span(model, D) and not is_exceptional_effective(model, D):
            return CandidateRecord(D, p, "exceptional_support", {"subject": "D", "class": D.to_json()})
        rest = B - D
        for h in model.nef_classes:
            q = model.pair(rest, h)
            if q < 0:
                return CandidateRecord(
                    D, p, "negative_on_nef", {"subject": "B-D", "nef": h.to_json(), "pairing": fmt(q)}
                )
        if in_exceptional_span(model, rest) and not is_exceptional_effective(model, rest):
            return CandidateRecord(D, p, "exceptional_support", {"subject": "B-D", "class": rest.to_json()})
        sub = self._prove(rest, budget - 1)
        if sub.proved:
            return CandidateRecord(D, p, "recursive", {"class": rest.to_json(), "depth": sub.depth}, sub)
        return CandidateRecord(D, p, None, {"class": rest.to_json(), "cyclic": sub.note == "cyclic reduction"})


def prove_non_effective(
    model: LatticeModel, B: LatticeClass, max_depth: int = DEFAULT_MAX_DEPTH, cap: int = DEFAULT_COEFF_CAP
) -> NonEffectivityCertificate:
    """Try to certify that ``B`` is not effective.

    Sound but incomplete: an unproved certificate lists the surviving
    candidates and says nothing about effectivity.
    """
    return Prover(model, cap).prove(B, max_depth)


# ---------------------------------------------------------------------------
# decompositions (no moving splitting of L - e)


@dataclass
class DecompositionReport:
    target: LatticeClass
    no_moving_decomposition: bool
    splits: list[dict]
    inspected: int

    def to_json(self):
        return {
            "target": self.target.to_json(),
            "no_moving_decomposition": self.no_moving_decomposition,
            "splits": self.splits,
            "inspected": self.inspected,
        }


def check_no_moving_decomposition(model: LatticeModel, H: LatticeClass, cap: int = DEFAULT_DECOMP_CAP):
    """Check that every splitting ``H = A1 + A2`` has a rigid summand.

    Splittings are organised by the L-coefficients ``a1 + a2 = 1``.  The summand
    with L-coefficient 0 lies in the span of the N_j; its effective forms are the
    combinations ``sum c_j N_j`` with ``0 <= c_j <= cap`` and each is certified
    rigid (``h^0 = 1``) by peeling it down to zero.  Returns
    ``(bool, DecompositionReport)``.
    """
    pos, neg = _split_coords(model)
    if [model.basis_labels[k] for k in pos] != ["L"]:
        raise UnsupportedShapeError("decomposition check needs the standard (non-hyperelliptic) model")
    li = pos[0]
    if (li,) not in model.even_sums:
        raise UnsupportedShapeError("decomposition check needs a primitive (standard) embedding of L")
    if not model.is_member(H):
        raise EffectivityError("class is not a lattice member")
    if H.doubled[li] != 2:
        raise UnsupportedShapeError(f"need L-coefficient 1, got {fmt(Fraction(H.doubled[li], 2))}")
    zero = model.zero()
    splits = []
    inspected = 0
    all_rigid = True
    for a1 in (0, 1):
        a2 = 1 - a1
        rows = []
        for cs in product(range(cap + 1), repeat=len(neg)):
            x = [0] * model.rank
            for k, c in zip(neg, cs):
                x[k] = 2 * c
            A0 = LatticeClass(model.name, tuple(x))
            rigid = peel_base_curves(model, A0) == zero
            all_rigid &= rigid
            inspected += 1
            rows.append({"rigid_part": list(cs), "rigid": rigid})
        splits.append({"a": [a1, a2], "rigid_side": 0 if a1 == 0 else 1, "decompositions": rows})
    return all_rigid, DecompositionReport(H, all_rigid, splits, inspected)


# ---------------------------------------------------------------------------
# batch suites


SUITES = ("lemma_4_2", "lemma_4_4", "thm_3_1_decomposition", "thm_4_1_chain")


@dataclass
class SuiteEntry:
    suite: str
    parameter: int
    status: str
    artifact: dict

    def to_json(self):
        return {"suite": self.suite, "parameter": self.parameter, "status": self.status, "artifact": self.artifact}


def suite_depth(param: int, max_depth: int | None) -> int:
    # iE - e needs one recursion level per multiple of E
    return max_depth if max_depth is not None else max(DEFAULT_MAX_DEPTH, param + 1)


def _run_one(kind: str, p: int, max_depth: int | None) -> SuiteEntry:
    depth = suite_depth(p, max_depth)
    if kind == "lemma_4_2":
        m = build_model("standard-hyp", 2 * p + 1)
        cert = prove_non_effective(m, m.cls(f"L - {p}*E - e"), depth)
        return SuiteEntry(kind, p, "pass" if cert.proved else "fail", {"model": m.name, "certificates": [cert.to_json()]})
    if kind == "lemma_4_4":
        m = build_model("nonstandard-hyp", p)
        exprs = [f"{p - 1}*E + e", f"{p}*E - e", f"R - {p - 1}*E - e", f"R - {p}*E + e"]
        prover = Prover(m)
        certs = [prover.prove(m.cls(x), depth) for x in exprs]
        ok = all(c.proved for c in certs)
        return SuiteEntry(kind, p, "pass" if ok else "fail",
                          {"model": m.name, "classes": exprs, "certificates": [c.to_json() for c in certs]})
    if kind == "thm_3_1_decomposition":
        m = build_model("standard", p)
        ok, rep = check_no_moving_decomposition(m, m.cls("L - e"))
        return SuiteEntry(kind, p, "pass" if ok else "fail", {"model": m.name, "report": rep.to_json()})
    if kind == "thm_4_1_chain":
        m = build_model("standard-hyp", 2 * p + 1)
        start = m.cls(f"L + e - {p}*E")
        peeled = peel_base_curves(m, start)
        expected = m.cls(f"L - e - {p}*E")
        prover = Prover(m)
        c1 = prover.prove(peeled, depth)
        c2 = prover.prove(m.cls(f"{p}*E - e"), depth)
        ok = peeled == expected and c1.proved and c2.proved
        return SuiteEntry(kind, p, "pass" if ok else "fail", {
            "model": m.name,
            "peel": {"from": start.to_json(), "to": peeled.to_json(), "expected": expected.to_json()},
            "certificates": [c1.to_json(), c2.to_json()],
        })
    raise ValueError(f"unknown suite {kind!r}; choose from {', '.join(SUITES)}")


def verify_vanishing_suite(kind: str, param_range: Iterable[int], max_depth: int | None = None) -> list[SuiteEntry]:
    """Run a named lattice suite over a parameter range; failures never abort the sweep."""
    if kind not in SUITES:
        raise ValueError(f"unknown suite {kind!r}; choose from {', '.join(SUITES)}")
    out = []
    for p in param_range:
        try:
            out.append(_run_one(kind, p, max_depth))
        except LatticeError as exc:
            out.append(SuiteEntry(kind, p, "error", {"error": str(exc)}))
    return out
