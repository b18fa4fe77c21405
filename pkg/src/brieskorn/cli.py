"""``brieskorn`` command-line interface.

Exit codes: 0 success, 1 input error, 2 verification failure, 3 hypothesis rejected.
With ``--json`` the result goes to stdout as
``{"command", "input", "payload", "warnings"}``; diagnostics go to stderr.
Exact rationals are written as ``{"num": ..., "den": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .certify import HypothesisRejected, build_certificate
from .core import BrieskornError, InputError, parse_exponents, parse_reflection
from .invariants import (
    CriterionInapplicableError,
    delta_at_one,
    eigenvalue_multiset,
    milnor_number,
)
from .jointop import component_count, lagrangian_homotopy_type, reduced_homology
from .reeb import chord_count, chord_strata, growth_proxy, reeb_period
from .verify import DEFAULT_TOL, FAULTS, run_all
from .zerodim import classify_zero_dim

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_REJECTED = 3


def rational(q) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def jsonable(obj):
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    return obj


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _action_bound(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("action bound must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(
        prog="brieskorn",
        description="Invariants of Brieskorn Milnor fibers and their real Lagrangians.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="Milnor number, monodromy profile, Delta(1)")
    p.add_argument("exponents", help="comma-separated exponents, e.g. 3,4,2,2,2,2")
    p.add_argument("--budget", type=int, default=None, help="max Milnor number to enumerate")

    p = sub.add_parser("lagrangian", parents=[common], help="homotopy type of L_m")
    p.add_argument("exponents")
    p.add_argument("--m", required=True, help="comma-separated reflection indices")

    p = sub.add_parser("chords", parents=[common], help="Reeb chord strata and growth proxy")
    p.add_argument("exponents")
    p.add_argument("--m", required=True)
    p.add_argument("--action", type=_action_bound, default=Fraction(0),
                   help="action bound in units of pi (e.g. 5 or 7/2)")

    p = sub.add_parser("certify", parents=[common], help="hypothesis check and reduction certificate")
    p.add_argument("exponents")

    p = sub.add_parser("verify", parents=[common], help="floating-point checks of the explicit maps")
    p.add_argument("exponents")
    p.add_argument("--m", required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--inject-fault", choices=FAULTS, default=None,
                   help="deliberately break one check (negative control)")
    return parser


def cmd_invariants(args, warnings):
    a = parse_exponents(args.exponents)
    profile = eigenvalue_multiset(a, args.budget)
    delta = delta_at_one(a, args.budget)
    if a.n >= 3:
        sphere = abs(delta) == 1
    else:
        sphere = None
        warnings.append(str(CriterionInapplicableError(f"sphere criterion needs n >= 3, got n = {a.n}")))
    payload = {
        "exponents": list(a),
        "n": a.n,
        "milnor_number": milnor_number(a),
        "eigenvalue_profile": profile.to_dict(),
        "eigenvalue_total": profile.total,
        "delta_at_one": delta,
        "sphere_link": sphere,
        "reeb_period": reeb_period(a),
    }
    lines = [
        f"exponents      {a}",
        f"milnor number  {payload['milnor_number']}",
        "eigenvalues    " + (", ".join(f"d={d}: {m}" for d, m in profile.to_dict().items()) or "none"),
        f"Delta(1)       {delta}",
        "sphere link    " + ("inapplicable, n < 3" if sphere is None else str(sphere).lower()),
        f"Reeb period    {payload['reeb_period']} pi",
    ]
    return payload, lines, EXIT_OK


def cmd_lagrangian(args, warnings):
    a = parse_exponents(args.exponents)
    m = parse_reflection(args.m, a)
    factors = []
    for j, (aj, mj) in enumerate(zip(a, m)):
        cls = classify_zero_dim(aj, mj)
        factors.append({
            "index": j, "a": aj, "m": mj, "class": cls.tag.value,
            "points": [p.value for p in cls.sorted_points()],
        })
    h = lagrangian_homotopy_type(a, m)
    payload = {
        "exponents": list(a),
        "reflection": list(m),
        "factors": factors,
        "homotopy_type": h,
        "component_count": component_count(h),
        "reduced_homology": reduced_homology(h),
    }
    lines = [f"L_m for a=({a}), m=({m})"]
    for f in factors:
        pts = ", ".join(str(p) for p in f["points"]) or "-"
        lines.append(f"  factor {f['index']}: a={f['a']} m={f['m']}  {f['class']:<12} angles {pts}")
    lines.append(f"homotopy type    {h}")
    lines.append(f"components       {payload['component_count']}")
    hom = payload["reduced_homology"]
    lines.append("reduced homology " + (", ".join(f"H~_{d} = Z^{r}" for d, r in hom.items()) or "0"))
    return payload, lines, EXIT_OK


def cmd_chords(args, warnings):
    a = parse_exponents(args.exponents)
    m = parse_reflection(args.m, a)
    strata = chord_strata(a, m)
    count = chord_count(a, m, args.action)
    proxy = growth_proxy(a, m)
    payload = {
        "exponents": list(a),
        "reflection": list(m),
        "reeb_period": reeb_period(a),
        "strata": strata,
        "stratum_count": len(strata),
        "action": args.action,
        "chord_count": count,
        "growth_proxy": proxy,
    }
    lines = [f"{len(strata)} chord strata (Reeb period {payload['reeb_period']} pi)"]
    for s in strata:
        signs = "".join("+" if e > 0 else "-" for e in s.signs)
        lines.append(f"  J={s.support} rays={''.join(s.rays)} signs={signs} lattice={s.lattice_gen} pi")
    lines.append(f"chord count up to {args.action} pi: {count}")
    lines.append(f"growth proxy: {proxy} / pi")
    return payload, lines, EXIT_OK


def cmd_certify(args, warnings):
    a = parse_exponents(args.exponents)
    try:
        cert = build_certificate(a)
    except HypothesisRejected as exc:
        payload = {"accepted": False, "reason": exc.reason}
        return payload, [f"rejected: {exc.reason}"], EXIT_REJECTED
    payload = {"accepted": True, "certificate": cert}
    lines = [
        f"accepted: {a}",
        f"arranged as W{cert.arranged} (permutation {list(cert.permutation)})",
        f"base W{cert.base}, k = {cert.k}, reflection {cert.base_reflection}: "
        f"{cert.base_type}, each component contractible",
        f"axiom: {cert.axiom['statement']} [{cert.axiom['citation']}]",
    ]
    for i, s in enumerate(cert.steps, 1):
        lines.append(
            f"step {i}: extend by b={s.exponent} with index {s.reflection_index} "
            f"(factor {s.factor}) -> {s.homotopy_type}; proxy {s.proxy_before} -> {s.proxy_after}"
        )
    lines.extend(f"conclusion: {c}" for c in cert.conclusion)
    lines.extend(f"note: {n}" for n in cert.notes)
    return payload, lines, EXIT_OK


def cmd_verify(args, warnings):
    a = parse_exponents(args.exponents)
    m = parse_reflection(args.m, a)
    if args.samples <= 0:
        raise InputError("--samples must be positive")
    reports, extra = run_all(a, m, args.samples, args.seed, args.tol, fault=args.inject_fault)
    warnings.extend(extra)
    ok = all(r.passed for r in reports)
    payload = {
        "exponents": list(a), "reflection": list(m), "samples": args.samples,
        "seed": args.seed, "tol": args.tol, "fault": args.inject_fault,
        "reports": reports, "all_passed": ok,
    }
    lines = []
    for r in reports:
        if r.skipped:
            lines.append(f"SKIP {r.name:<18} {r.detail}")
        else:
            rel = "<=" if r.kind == "within" else ">"
            lines.append(
                f"{'PASS' if r.passed else 'FAIL'} {r.name:<18} {r.passed_count}/{r.attempted}  "
                f"worst {r.max_residual:.3e} {rel} {r.tolerance:.0e}  {r.detail}".rstrip()
            )
    return payload, lines, EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "invariants": cmd_invariants,
    "lagrangian": cmd_lagrangian,
    "chords": cmd_chords,
    "certify": cmd_certify,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings: list[str] = []
    try:
        payload, lines, code = COMMANDS[args.command](args, warnings)
    except InputError as exc:
        print(f"brieskorn: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrieskornError as exc:
        print(f"brieskorn: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    inputs = {k: v for k, v in vars(args).items() if k not in {"command", "json"}}
    if args.json:
        doc = {"command": args.command, "input": inputs, "payload": payload, "warnings": warnings}
        json.dump(jsonable(doc), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print("\n".join(lines))
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
