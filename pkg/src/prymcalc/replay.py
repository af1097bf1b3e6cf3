"""Independent replay of non-effectivity certificates.

Works from the JSON form only and touches the lattice through ``pair`` and
``is_member``.  Exhaustiveness is re-established by a numpy brute force over
the recorded box, not by re-running the prover's enumeration kernel.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .lattice import LatticeClass, LatticeModel
from .rational import fmt, parse


@dataclass
class ReplayResult:
    ok: bool = True
    proved: bool = False
    errors: list[str] = field(default_factory=list)
    certificates: int = 0
    candidates: int = 0

    def fail(self, where: str, msg: str) -> None:
        self.ok = False
        self.errors.append(f"{where}: {msg}")


class _Checker:
    def __init__(self, model: LatticeModel, validated: set | None = None):
        self.m = model
        # canonical JSON of certificates already validated against this model
        self.validated = validated if validated is not None else set()
        self.neg = [self._coord_of(n) for n in model.known_neg2_curves]
        self.pos = [k for k in range(model.rank) if k not in self.neg]
        self._meshes: dict[tuple, np.ndarray] = {}
        self._member_table: np.ndarray | None = None

    def member_table(self) -> np.ndarray:
        """``is_member`` tabulated on doubled coordinates mod 2 (membership only sees parities)."""
        if self._member_table is None:
            rank = self.m.rank
            if rank > 20:
                raise ValueError("membership table limited to rank 20")
            tab = np.zeros(1 << rank, dtype=bool)
            for bits in range(1 << rank):
                x = tuple((bits >> k) & 1 for k in range(rank))
                tab[bits] = self.m.is_member(LatticeClass(self.m.name, x))
            self._member_table = tab
        return self._member_table

    def mesh(self, ranges: tuple) -> np.ndarray:
        hit = self._meshes.get(ranges)
        if hit is None:
            axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in ranges]
            hit = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(ranges))
            self._meshes[ranges] = hit
        return hit

    def _coord_of(self, n: LatticeClass) -> int | None:
        nz = [k for k, x in enumerate(n.doubled) if x]
        return nz[0] if len(nz) == 1 and n.doubled[nz[0]] == 2 else None

    def vec(self, coeffs) -> LatticeClass:
        if len(coeffs) != self.m.rank:
            raise ValueError("class has the wrong length")
        out = []
        for c in coeffs:
            num, _, den = str(c).partition("/")
            if den in ("", "1"):
                out.append(2 * int(num))
            elif den == "2":
                out.append(int(num))
            else:
                raise ValueError(f"coefficient {c!r} is not a half-integer")
        return LatticeClass(self.m.name, tuple(out))

    def basis(self, k) -> LatticeClass:
        x = [0] * self.m.rank
        x[k] = 2
        return LatticeClass(self.m.name, tuple(x))

    def in_n_span(self, v: LatticeClass) -> bool:
        return all(v.doubled[k] == 0 for k in self.pos)

    def n_effective(self, v: LatticeClass) -> bool:
        return all(v.doubled[k] >= 0 and v.doubled[k] % 2 == 0 for k in self.neg)

    def nef(self, coeffs) -> LatticeClass | None:
        h = self.vec(coeffs)
        return h if h in self.m.nef_classes else None

    # -- leaves -----------------------------------------------------------

    def leaf_holds(self, tag: str, data: dict, subject: LatticeClass) -> str | None:
        if tag == "negative_on_nef":
            h = self.nef(data.get("nef", []))
            if h is None:
                return "witness is not a declared nef class"
            p = self.m.pair(subject, h)
            if p >= 0 or fmt(p) != data.get("pairing"):
                return f"pairing with nef class is {fmt(p)}, recorded {data.get('pairing')}"
            return None
        if tag == "exceptional_support":
            if not self.in_n_span(subject):
                return "class is not in the span of the (-2)-curves"
            if self.n_effective(subject):
                return "class is an effective sum of (-2)-curves"
            return None
        return f"unknown leaf tag {tag!r}"

    # -- the main check ---------------------------------------------------

    def check(self, doc: dict, subs: dict, res: ReplayResult, where: str, seen: set) -> None:
        key = json.dumps({k: v for k, v in doc.items() if k != "sub_certificates"}, sort_keys=True)
        res.certificates += 1
        if key in self.validated:
            return
        before = len(res.errors)
        self._check(doc, subs, res, where, seen)
        if len(res.errors) == before and doc.get("proved"):
            self.validated.add(key)

    def _check(self, doc: dict, subs: dict, res: ReplayResult, where: str, seen: set) -> None:
        m = self.m
        if doc.get("model") != m.name:
            res.fail(where, f"model {doc.get('model')!r} does not match {m.name!r}")
            return
        try:
            B0 = self.vec(doc["target"])
            red = self.vec(doc["reduced"])
        except (KeyError, ValueError) as exc:
            res.fail(where, f"malformed classes: {exc}")
            return
        if not m.is_member(B0):
            res.fail(where, "target is not a lattice member")
            return
        cur = B0
        for step in doc.get("peeled", []):
            n = self.vec(step["curve"])
            if n not in m.known_neg2_curves:
                res.fail(where, "peeled curve is not a known (-2)-curve")
                return
            p = m.pair(cur, n)
            if p >= 0 or fmt(p) != step.get("pairing"):
                res.fail(where, f"peel step pairing {fmt(p)} is not the recorded negative value")
                return
            cur = cur - n
        if cur != red:
            res.fail(where, "peeling does not reach the recorded reduced class")
            return
        leaf = doc.get("leaf")
        if leaf:
            subj = B0 if leaf["data"].get("subject") == "target" else red
            err = self.leaf_holds(leaf["tag"], leaf["data"], subj)
            if err:
                res.fail(where, f"leaf {leaf['tag']}: {err}")
            elif not doc.get("proved"):
                res.fail(where, "valid leaf but certificate not marked proved")
            if doc.get("depth") != 0:
                res.fail(where, "leaf certificates have depth 0")
            return
        if not doc.get("proved"):
            # an honest failure: nothing to re-validate beyond the peel
            return
        if doc.get("reduced_proof") is not None:
            if self.vec(doc["reduced_proof"]) != red or not doc.get("peeled"):
                res.fail(where, "reduced_proof must name the reduced class of a peeled target")
                return
            sub = subs.get(red.doubled)
            if sub is None or not sub.get("proved"):
                res.fail(where, "missing or unproved certificate for the reduced class")
                return
            if sub.get("peeled") or sub.get("depth") != doc.get("depth"):
                res.fail(where, "reduced-class certificate must be unpeeled and of equal depth")
                return
            if red.doubled not in seen:
                seen.add(red.doubled)
                self.check(sub, subs, res, f"sub {m.label_of(red)}", seen)
            return
        if any(m.pair(red, n) < 0 for n in m.known_neg2_curves):
            res.fail(where, "reduced class still meets a (-2)-curve negatively")
        if m.square(red) != -4:
            res.fail(where, f"reduced class has square {fmt(m.square(red))}, need -4")
            return
        if None in self.neg:
            res.fail(where, "known (-2)-curves must be basis vectors for replay")
            return
        ineqs = self.check_inequalities(doc, red, res, where)
        if ineqs is None:
            return
        box = self.check_bounds(doc, ineqs, res, where)
        if box is None:
            return
        iq = self.integer_form(ineqs)
        recorded = self.check_candidates(doc, red, iq, box, subs, res, where, seen)
        if recorded is None:
            return
        brute = self.brute_force(red, iq, box)
        if brute != recorded:
            miss = len(brute - recorded)
            extra = len(recorded - brute)
            res.fail(where, f"candidate list not exhaustive: {miss} missing, {extra} spurious")

    def check_inequalities(self, doc, red, res, where):
        m = self.m
        labels = [m.basis_labels[k] for k in self.pos]
        expect = []
        for h in m.nef_classes:
            for k in self.neg:
                if m.pair(self.basis(k), h) != 0:
                    res.fail(where, "nef class meets a (-2)-curve coordinate")
                    return None
            row = {m.basis_labels[k]: m.pair(self.basis(k), h) for k in self.pos}
            row = {lab: a for lab, a in row.items() if a != 0}
            expect.append((row, Fraction(0)))
            expect.append(({lab: -a for lab, a in row.items()}, -m.pair(red, h)))
        got = []
        for q in doc.get("inequalities", []):
            got.append(({lab: parse(a) for lab, a in q["coeffs"].items()}, parse(q["rhs"])))
        if got != expect:
            res.fail(where, "recorded inequalities differ from the nef constraints")
            return None
        if any(lab not in labels for row, _ in got for lab in row):
            res.fail(where, "inequality mentions a (-2)-curve coordinate")
            return None
        return got

    def check_bounds(self, doc, ineqs, res, where):
        labels = [self.m.basis_labels[k] for k in self.pos]
        lo = {lab: None for lab in labels}
        hi = {lab: None for lab in labels}
        for b in doc.get("bounds", []):
            lab, side, val, idx = b["coordinate"], b["side"], parse(b["value"]), b["inequality"]
            if lab not in lo or not (0 <= idx < len(ineqs)):
                res.fail(where, f"bound refers to unknown coordinate or inequality: {b}")
                return None
            row, rhs = ineqs[idx]
            a = row.get(lab, 0)
            if a == 0 or (a > 0) != (side == "lower"):
                res.fail(where, f"inequality {idx} cannot give a {side} bound on {lab}")
                return None
            rest = Fraction(0)
            for other, c in row.items():
                if other == lab:
                    continue
                known = hi[other] if c > 0 else lo[other]
                if known is None:
                    res.fail(where, f"bound on {lab} uses {other} before it is bounded")
                    return None
                rest += c * known
            implied = (rhs - rest) / a
            # D has half-integral coordinates, so a bound may be rounded onto the half grid
            if side == "lower":
                if val > Fraction(math.ceil(2 * implied), 2):
                    res.fail(where, f"lower bound {fmt(val)} on {lab} exceeds implied {fmt(implied)}")
                    return None
                lo[lab] = val if lo[lab] is None else max(lo[lab], val)
            else:
                if val < Fraction(math.floor(2 * implied), 2):
                    res.fail(where, f"upper bound {fmt(val)} on {lab} is below implied {fmt(implied)}")
                    return None
                hi[lab] = val if hi[lab] is None else min(hi[lab], val)
        box = {}
        rec = doc.get("box", {})
        for lab in labels:
            if lo[lab] is None or hi[lab] is None:
                res.fail(where, f"coordinate {lab} left unbounded")
                return None
            if rec.get(lab) != [fmt(lo[lab]), fmt(hi[lab])]:
                res.fail(where, f"recorded box for {lab} disagrees with the bound steps")
                return None
            box[lab] = (lo[lab], hi[lab])
        return box

    def integer_form(self, ineqs) -> list:
        """Inequalities on doubled coordinates: ``sum(a_k x_k) >= rhs`` with integers."""
        out = []
        for row, rhs in ineqs:
            den = math.lcm(rhs.denominator, *(a.denominator for a in row.values()))
            out.append(([(self.m.index(lab), int(a * den)) for lab, a in row.items()], int(2 * rhs * den)))
        return out

    @staticmethod
    def satisfies(D, iq) -> bool:
        x = D.doubled
        return all(sum(a * x[k] for k, a in row) >= rhs for row, rhs in iq)

    def check_candidates(self, doc, red, iq, box, subs, res, where, seen):
        m = self.m
        out = set()
        child_depths = []
        surv = 0
        guarded = [n for n in m.known_neg2_curves if m.pair(red, n) >= 0]
        for idx, c in enumerate(doc.get("candidates", [])):
            res.candidates += 1
            w = f"{where} candidate {idx}"
            D = self.vec(c["D"])
            p = m.pair(red, D)
            if not m.is_member(D) or m.square(D) != -2:
                res.fail(w, "not a member (-2)-class")
            if p >= 0 or fmt(p) != c.get("pairing"):
                res.fail(w, f"B.D = {fmt(p)} is not the recorded negative value")
            if not self.satisfies(D, iq):
                res.fail(w, "violates a recorded inequality")
            for lab, (a, b) in box.items():
                if not a <= D.coeffs[m.index(lab)] <= b:
                    res.fail(w, f"coordinate {lab} outside the box")
            for n in guarded:
                if D == n or m.pair(D, n) < 0:
                    res.fail(w, "excluded by a (-2)-curve met non-negatively by B")
            out.add(D.doubled)
            reason, data = c.get("reason"), c.get("data", {})
            rest = red - D
            if reason is None:
                surv += 1
            elif reason == "exceptional_support":
                subj = D if data.get("subject") == "D" else rest
                err = self.leaf_holds(reason, data, subj)
                if err:
                    res.fail(w, err)
            elif reason == "negative_on_nef":
                err = self.leaf_holds(reason, data, rest)
                if err:
                    res.fail(w, err)
            elif reason == "recursive":
                sub = subs.get(rest.doubled)
                if sub is None:
                    res.fail(w, "no sub-certificate for B - D")
                    continue
                if not sub.get("proved"):
                    res.fail(w, "sub-certificate is not a proof")
                child_depths.append(sub.get("depth", 0))
                if rest.doubled not in seen:
                    seen.add(rest.doubled)
                    self.check(sub, subs, res, f"sub {m.label_of(rest)}", seen)
            else:
                res.fail(w, f"unknown reason {reason!r}")
        if surv:
            res.fail(where, f"{surv} uneliminated candidate(s) in a certificate marked proved")
        depth = 1 + max(child_depths, default=0)
        if doc.get("depth") != depth:
            res.fail(where, f"depth {doc.get('depth')} should be {depth}")
        if any(d >= doc.get("depth", 0) for d in child_depths):
            res.fail(where, "sub-certificate depth does not decrease")
        return out

    def brute_force(self, red, iq, box) -> set:
        """Every member D with D^2 = -2, B.D < 0 and the side conditions, by direct search."""
        m = self.m
        rank = m.rank
        gram = [[m.pair(self.basis(a), self.basis(b)) * 4 for b in range(rank)] for a in range(rank)]
        if any(v.denominator != 1 for row in gram for v in row):
            raise ValueError("brute force needs a Gram matrix with denominators dividing 4")
        if any(gram[a][b] != 0 for a in self.neg for b in range(rank) if b != a):
            raise ValueError("brute force needs orthogonal (-2)-curve coordinates")
        # pair(x, y) = x G y / 16 on doubled vectors; G is block diagonal
        G = np.array([[int(v) for v in row] for row in gram], dtype=np.int64)
        bvec = np.array(red.doubled, dtype=np.int64)
        gb = G @ bvec
        w = -np.diag(G)[self.neg]
        gb_neg = gb[self.neg]
        pos_labels = [m.basis_labels[k] for k in self.pos]
        grids = [range(int(2 * box[lab][0]), int(2 * box[lab][1]) + 1) for lab in pos_labels]
        # D.N >= 0 for N with B.N >= 0 means a non-positive coordinate there
        sign_free = [m.pair(red, self.basis(k)) < 0 for k in self.neg]
        found = set()
        table = self.member_table()
        neg_bits = np.array([1 << k for k in self.neg], dtype=np.int64)
        for pt in product(*grids):
            x = np.zeros(rank, dtype=np.int64)
            x[self.pos] = pt
            # the inequalities only see the positive coordinates
            if not self.satisfies(LatticeClass(m.name, tuple(int(v) for v in x)), iq):
                continue
            t = int(x @ G @ x) + 32
            if t < 0:
                continue
            ranges = []
            for wk, free in zip(w, sign_free):
                r = math.isqrt(t // int(wk))
                ranges.append((-r, r if free else 0))
            mesh = self.mesh(tuple(ranges))
            pos_bits = sum(1 << k for k, v in zip(self.pos, pt) if v & 1)
            bits = ((mesh & 1) @ neg_bits) | pos_bits
            keep = ((mesh * mesh) @ w == t) & (mesh @ gb_neg + int(x @ gb) < 0) & table[bits]
            for row in mesh[keep]:
                y = [int(v) for v in x]
                for k, v in zip(self.neg, row):
                    y[k] = int(v)
                found.add(tuple(y))
        return found


class ReplaySession:
    """Replays many certificates for one model, validating each distinct sub-certificate once."""

    def __init__(self, model: LatticeModel):
        self.model = model
        self._checker = _Checker(model)

    def replay(self, doc: dict) -> ReplayResult:
        res = ReplayResult()
        chk = self._checker
        subs = {}
        for s in doc.get("sub_certificates", []):
            try:
                subs[chk.vec(s["target"]).doubled] = s
            except (KeyError, ValueError) as exc:
                res.fail("sub_certificates", f"malformed target: {exc}")
        if doc.get("schema") not in (None, "prymcalc.noneffectivity/1"):
            res.fail("certificate", f"unknown schema {doc.get('schema')!r}")
        chk.check(doc, subs, res, "certificate", set())
        res.proved = res.ok and bool(doc.get("proved"))
        return res


def replay_certificate(model: LatticeModel, doc: dict) -> ReplayResult:
    """Re-validate a certificate (JSON form) with its sub-certificates."""
    return ReplaySession(model).replay(doc)
