"""Aggregate verification run behind ``prymcalc verify-all``."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .brill_noether import divisorial_pairs, prym_secant_expected_dim, rho
from .divisor_calculus import (
    euler_nodal_count,
    nonstandard_pencil_vector,
    pullback_delta0,
    solve_difference_class,
    srange_coefficients,
    standard_pencil_vector,
)
from .effectivity import SuiteEntry, verify_vanishing_suite
from .lattice import LatticeError, model_from_name
from .rational import fmt
from .replay import ReplaySession


class ReportParameterError(ValueError):
    pass


@dataclass
class SuiteReport:
    tool_version: str
    timestamp: str
    entries: list[SuiteEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self):
        return {
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
            "passed": self.passed,
            "entries": [e.to_json() for e in self.entries],
        }


def _replayed(entry: SuiteEntry) -> SuiteEntry:
    """Downgrade a lattice entry whose certificates fail independent replay."""
    certs = entry.artifact.get("certificates")
    if entry.status != "pass" or not certs:
        return entry
    session = ReplaySession(model_from_name(entry.artifact["model"]))
    errors = []
    for c in certs:
        r = session.replay(c)
        if not r.proved:
            errors.extend(r.errors or ["certificate does not replay as a proof"])
    entry.artifact["replay"] = {"ok": not errors, "errors": errors[:20]}
    if errors:
        entry.status = "fail"
    return entry


def _lattice(kind: str, p: int) -> SuiteEntry:
    return _replayed(verify_vanishing_suite(kind, [p])[0])


def _brill_noether(g: int) -> SuiteEntry:
    pairs = divisorial_pairs(g)
    brute = [(e, f) for f in range(g) for e in range(max(f, 1), g) if prym_secant_expected_dim(g, e, f) == -1]
    identity = all(
        rho(g - 2, f, e) == prym_secant_expected_dim(g, e, f) for e in range(1, g) for f in range(e + 1)
    )
    expected = []
    if g % 2:
        expected.append(((g - 1) // 2, 1))
    f = round(g ** 0.5)
    if f * f == g:
        expected.append((g - 1, f))
    ok = pairs == brute and identity and all(p in pairs for p in expected)
    return SuiteEntry("brill_noether", g, "pass" if ok else "fail", {
        "pairs": [list(p) for p in pairs],
        "exhaustive_match": pairs == brute,
        "rho_identity": identity,
    })


def _difference_class(i: int) -> SuiteEntry:
    g = 2 * i + 1
    sol = solve_difference_class(i)
    v = sol.vector
    want = (Fraction(3 * i + 1), Fraction(-i, 2), Fraction(-(2 * i + 1), 4))
    s, ns = standard_pencil_vector(g), nonstandard_pencil_vector(g)
    checks = {
        "class": (v.lam, v.d0p, v.d0ram) == want,
        "residuals": all(r == 0 for r in sol.residuals),
        "standard_pencil": s.as_tuple() == (2 * i + 2, 12 * i + 8, 0, 8)
        and pullback_delta0(s) == euler_nodal_count(24, 2 * g - 2),
        "nonstandard_pencil": ns.as_tuple() == (2 * i + 1, 12 * i + 6, 0, 4)
        and ns.d0p == euler_nodal_count(24, 2 * g - 4) - 12,
        "srange_nonnegative": all(c >= 0 for c in srange_coefficients(i)),
    }
    art = sol.to_json()
    art["checks"] = checks
    art["srange"] = [fmt(c) for c in srange_coefficients(i)]
    return SuiteEntry("difference_class", i, "pass" if all(checks.values()) else "fail", art)


_RUNNERS = {
    "lemma_4_2": lambda p: _lattice("lemma_4_2", p),
    "lemma_4_4": lambda p: _lattice("lemma_4_4", p),
    "thm_4_1_chain": lambda p: _lattice("thm_4_1_chain", p),
    "thm_3_1_decomposition": lambda p: _lattice("thm_3_1_decomposition", p),
    "brill_noether": _brill_noether,
    "difference_class": _difference_class,
}


def run_task(task: tuple[str, int]) -> SuiteEntry:
    suite, p = task
    try:
        return _RUNNERS[suite](p)
    except (LatticeError, ValueError, ArithmeticError) as exc:
        return SuiteEntry(suite, p, "error", {"error": f"{type(exc).__name__}: {exc}"})


def plan(max_i: int, max_g: int) -> list[tuple[str, int]]:
    tasks = []
    for suite in ("lemma_4_2", "lemma_4_4", "thm_4_1_chain"):
        tasks += [(suite, i) for i in range(2, max_i + 1)]
    tasks += [("thm_3_1_decomposition", g) for g in range(6, max_g + 1)]
    tasks += [("brill_noether", g) for g in range(3, max_g + 1)]
    tasks += [("difference_class", i) for i in range(1, max_i + 1)]
    return tasks


def verify_all(max_i: int, max_g: int, workers: int | None = None) -> SuiteReport:
    """Run every suite; entries come back in plan order whatever the worker count."""
    if max_i < 2 or max_g < 6:
        raise ReportParameterError(f"need max_i >= 2 and max_g >= 6, got {max_i}, {max_g}")
    tasks = plan(max_i, max_g)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(run_task, tasks))
    else:
        entries = [run_task(t) for t in tasks]
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return SuiteReport(__version__, stamp, entries)
