"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .brill_noether import (
    divisorial_pairs,
    hurwitz_slope,
    prym_secant_expected_dim,
    rho,
    secant_expected_dim,
)
from .divisor_calculus import (
    nonstandard_pencil_vector,
    pullback_delta0,
    solve_difference_class,
    srange_coefficients,
    standard_pencil_vector,
)
from .effectivity import DEFAULT_MAX_DEPTH, check_no_moving_decomposition, peel_base_curves, prove_non_effective
from .lattice import ModelKind, build_model, model_from_name
from .rational import fmt
from .replay import replay_certificate
from .report import verify_all

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _model(args):
    if args.model is None:
        raise UsageError("--model is required")
    kind = ModelKind.coerce(args.model)
    if kind.standard:
        if args.g is None:
            raise UsageError(f"--g is required for the {kind.value} model")
        return build_model(kind, args.g)
    if args.i is None:
        raise UsageError(f"--i is required for the {kind.value} model")
    return build_model(kind, args.i)


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")


def _classes(args, model, count=None):
    exprs = args.cls or []
    if count is not None and len(exprs) != count:
        raise UsageError(f"expected {count} --class argument(s), got {len(exprs)}")
    return [model.cls(x) for x in exprs]


# -- subcommand bodies; each returns (status, json document, text) ---------


def bn_rho(args):
    _need(args, "g", "r", "d")
    v = rho(args.g, args.r, args.d)
    return OK, {"rho": v}, str(v)


def bn_expdim(args):
    _need(args, "e", "f")
    if args.r is not None:
        v = secant_expected_dim(args.e, args.f, args.r)
    else:
        _need(args, "g")
        v = prym_secant_expected_dim(args.g, args.e, args.f)
    return OK, {"expected_dim": v}, str(v)


def bn_pairs(args):
    _need(args, "g")
    pairs = divisorial_pairs(args.g)
    return OK, {"g": args.g, "pairs": [list(p) for p in pairs]}, " ".join(f"({e},{f})" for e, f in pairs) or "none"


def bn_slope(args):
    _need(args, "g")
    v = hurwitz_slope(args.g)
    return OK, {"g": args.g, "slope": fmt(v)}, fmt(v)


def lattice_pair(args):
    m = _model(args)
    a, b = _classes(args, m, 2)
    v = m.pair(a, b)
    return OK, {"model": m.name, "pairing": fmt(v)}, fmt(v)


def lattice_member(args):
    m = _model(args)
    (a,) = _classes(args, m, 1)
    v = m.is_member(a)
    return OK, {"model": m.name, "member": v}, "true" if v else "false"


def lattice_prove(args):
    m = _model(args)
    (b,) = _classes(args, m, 1)
    cert = prove_non_effective(m, b, args.depth)
    doc = cert.to_json()
    if cert.proved:
        text = f"non-effective: {m.label_of(b)} (depth {cert.depth}, {len(cert.candidates)} candidate(s))"
    else:
        text = f"no proof found for {m.label_of(b)}: {cert.note}"
        for s in cert.survivors:
            text += f"\n  survivor D = {m.label_of(s)}"
    return (OK if cert.proved else FAILED), doc, text


def lattice_peel(args):
    m = _model(args)
    (a,) = _classes(args, m, 1)
    r = peel_base_curves(m, a)
    return OK, {"model": m.name, "from": a.to_json(), "to": r.to_json()}, m.label_of(r)


def lattice_decomp(args):
    m = _model(args)
    h = _classes(args, m, 1)[0] if args.cls else m.cls("L - e")
    ok, rep = check_no_moving_decomposition(m, h)
    text = f"{'no moving decomposition' if ok else 'moving decomposition not excluded'} ({rep.inspected} inspected)"
    return (OK if ok else FAILED), rep.to_json(), text


def lattice_replay(args):
    _need(args, "cert")
    with open(args.cert) as fh:
        doc = json.load(fh)
    m = model_from_name(doc.get("model", ""))
    res = replay_certificate(m, doc)
    out = {"ok": res.ok, "proved": res.proved, "certificates": res.certificates,
           "candidates": res.candidates, "errors": res.errors}
    text = "replay ok" if res.ok else "replay FAILED\n" + "\n".join(res.errors)
    if res.ok and not res.proved:
        text = "replay ok (certificate records no proof)"
    return (OK if res.proved else FAILED), out, text


def class_pencils(args):
    _need(args, "g")
    ps = [standard_pencil_vector(args.g)]
    if args.g % 2:
        ps.append(nonstandard_pencil_vector(args.g))
    doc = {"g": args.g, "pencils": [dict(p.to_json(), pullback_delta0=fmt(pullback_delta0(p))) for p in ps]}
    text = "\n".join(f"{p.name}: ({', '.join(fmt(x) for x in p.as_tuple())})" for p in ps)
    return OK, doc, text


def class_solve(args):
    _need(args, "i")
    sol = solve_difference_class(args.i)
    v = sol.vector
    text = f"({fmt(v.lam)}, {fmt(v.d0p)}, undetermined [{fmt(v.d0pp)}], {fmt(v.d0ram)})"
    return OK, sol.to_json(), text


def class_srange(args):
    _need(args, "i")
    a, b = srange_coefficients(args.i)
    return OK, {"i": args.i, "coefficients": [fmt(a), fmt(b)]}, f"{fmt(a)} {fmt(b)}"


def verify_all_cmd(args):
    rep = verify_all(args.max_i, args.max_g, args.workers)
    lines = [f"{e.status:5s} {e.suite} {e.parameter}" for e in rep.entries]
    lines.append(f"{sum(e.status == 'pass' for e in rep.entries)}/{len(rep.entries)} passed")
    return rep.exit_code, rep.to_json(), "\n".join(lines)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON")
    common.add_argument("--out", default=argparse.SUPPRESS, help="also write the JSON document here")

    def ints(p, *names):
        for n in names:
            p.add_argument(f"--{n.replace('_', '-')}", dest=n, type=int)

    def lattice_opts(p):
        p.add_argument("--model", choices=[k.value for k in ModelKind])
        ints(p, "g", "i")
        p.add_argument("--class", dest="cls", action="append", help="class expression, repeatable")

    parser = argparse.ArgumentParser(prog="prymcalc", description="Exact verification tools for Prym moduli computations.")
    parser.add_argument("--version", action="version", version=f"prymcalc {__version__}")
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--out", default=None)
    top = parser.add_subparsers(dest="group", required=True)

    bn = top.add_parser("bn", help="Brill-Noether calculators").add_subparsers(dest="cmd", required=True)
    for name, fn, opts in (
        ("rho", bn_rho, ("g", "r", "d")),
        ("expdim", bn_expdim, ("g", "e", "f", "r")),
        ("pairs", bn_pairs, ("g",)),
        ("slope", bn_slope, ("g",)),
    ):
        p = bn.add_parser(name, parents=[common])
        ints(p, *opts)
        p.set_defaults(fn=fn)

    lat = top.add_parser("lattice", help="Nikulin lattice computations").add_subparsers(dest="cmd", required=True)
    for name, fn in (("pair", lattice_pair), ("member", lattice_member), ("peel", lattice_peel), ("decomp", lattice_decomp)):
        p = lat.add_parser(name, parents=[common])
        lattice_opts(p)
        p.set_defaults(fn=fn)
    p = lat.add_parser("prove", parents=[common])
    lattice_opts(p)
    p.add_argument("--depth", type=int, default=DEFAULT_MAX_DEPTH)
    p.set_defaults(fn=lattice_prove)
    p = lat.add_parser("replay", parents=[common])
    p.add_argument("--cert", help="certificate JSON file")
    p.set_defaults(fn=lattice_replay)

    cl = top.add_parser("class", help="divisor classes and test curves").add_subparsers(dest="cmd", required=True)
    for name, fn, opts in (("pencils", class_pencils, ("g",)), ("solve", class_solve, ("i",)), ("srange", class_srange, ("i",))):
        p = cl.add_parser(name, parents=[common])
        ints(p, *opts)
        p.set_defaults(fn=fn)

    p = top.add_parser("verify-all", parents=[common], help="run every suite")
    p.add_argument("--max-i", dest="max_i", type=int, default=10)
    p.add_argument("--max-g", dest="max_g", type=int, default=20)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(fn=verify_all_cmd)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else 0
    try:
        status, doc, text = args.fn(args)
    except UsageError as exc:
        print(f"prymcalc: error: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"prymcalc: error: {exc}", file=sys.stderr)
        return USAGE
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if args.json:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
