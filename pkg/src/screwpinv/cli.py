"""Command-line front end: JSON documents in, deterministic JSON reports out.

Exit codes: 0 success, 2 no h-pseudoinverse, 3 malformed or unsupported input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .control import cost_phi, cost_psi, damped_solution, point_direction_task, projector_h
from .errors import NoPseudoinverse, ScrewError
from .involution import LineSet, is_in_involution
from .linalg import Mat, nullspace
from .pinv import ScrewJacobian, gram_pencil, h_pseudoinverse, verify_axioms
from .se3 import Finite, Infinity, as_pitch, q_matrix
from .systems import (ScrewSystem, classify, no_pinv_for_all_h, principal_pitches,
                      reciprocal_system)

EXIT_OK, EXIT_NO_PINV, EXIT_MALFORMED = 0, 2, 3

FORM_CONVENTION = ("Q_h = [[-2hI, I], [I, 0]] (unhalved): s^T Q_h s = -2h w.w + 2 w.v; "
                   "pairings and Phi_h are twice the halved-form values")


class InputError(Exception):
    """Malformed document or argument (exit 3)."""


@dataclass(frozen=True)
class JacobianDocument:
    jacobian: Mat
    mode: str
    labels: Optional[tuple] = None


def parse_scalar(value, float_mode: bool):
    if isinstance(value, bool) or value is None:
        raise InputError(f"not a number: {value!r}")
    if float_mode:
        try:
            return float(Fraction(value)) if isinstance(value, str) and "/" in value else float(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a number: {value!r}") from exc
    if isinstance(value, float):
        raise InputError(f"float {value!r} in rational mode")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {value!r}") from exc


def _all_rational(values) -> bool:
    try:
        for v in values:
            if isinstance(v, (bool, float)) or v is None:
                return False
            Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError):
        return False
    return True


def parse_document(text: str, mode: Optional[str] = None) -> JacobianDocument:
    try:
        # keep decimals as text so they parse exactly as rationals
        data = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "jacobian" not in data:
        raise InputError("document must be an object with a 'jacobian' field")
    rows = data["jacobian"]
    if not isinstance(rows, list) or len(rows) != 6 or not all(isinstance(r, list) for r in rows):
        raise InputError("jacobian must be a list of 6 rows")
    m = len(rows[0])
    if not 1 <= m <= 6 or any(len(r) != m for r in rows):
        raise InputError("jacobian rows must share a length between 1 and 6")
    mode = mode or data.get("mode")
    flat = [x for r in rows for x in r]
    if mode is None:
        mode = "rational" if _all_rational(flat) else "float"
    if mode not in ("rational", "float"):
        raise InputError(f"unknown mode {mode!r}")
    fl = mode == "float"
    M = Mat([[parse_scalar(x, fl) for x in r] for r in rows], (6, m), fl)
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != m:
            raise InputError("labels must list one name per column")
        labels = tuple(str(x) for x in labels)
    return JacobianDocument(M, mode, labels)


def serialize(x):
    """JSON-ready value: rationals as canonical strings, floats as shortest decimals."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, Mat):
        return [[serialize(v) for v in r] for r in x.tolist()]
    if isinstance(x, dict):
        return {k: serialize(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [serialize(v) for v in x]
    if isinstance(x, (Finite, Infinity)):
        return str(x) if isinstance(x, Infinity) else serialize(x.h)
    if hasattr(x, "value"):  # enums
        return x.value
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _rows_of_columns(M: Mat) -> list:
    return serialize([list(c) for c in M.columns()])


def _parse_vector(text: str, n: int, fl: bool, what: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise InputError(f"{what} needs {n} comma-separated entries")
    return tuple(parse_scalar(p, fl) for p in parts)


def _parse_h(text: Optional[str], fl: bool, allow_inf: bool = False):
    if text is None:
        raise InputError("--h is required")
    try:
        p = as_pitch(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad pitch {text!r}") from exc
    if isinstance(p, Infinity):
        if allow_inf:
            return p
        raise InputError("h = inf is rejected: Q_inf is degenerate, so no h-pseudoinverse or "
                         "reciprocal is defined there")
    return float(p.h) if fl else p.h


def _pencil_info(J: ScrewJacobian) -> dict:
    pencil = gram_pencil(J)
    info = {"detpoly": str(pencil.detpoly), "detpoly_coefficients": serialize(pencil.detpoly.coeffs)}
    if J.full_column_rank and J.m <= 5:
        info["principal_pitches"] = serialize(principal_pitches(ScrewSystem(J)))
    return info


def cmd_pinv(doc: JacobianDocument, args) -> tuple[int, dict, list]:
    J = ScrewJacobian(doc.jacobian)
    h = _parse_h(args.h, doc.mode == "float")
    try:
        res = h_pseudoinverse(J, h)
    except NoPseudoinverse as exc:
        return EXIT_NO_PINV, {"exists": False, "reason": str(exc), **_pencil_info(J)}, []
    axioms = verify_axioms(J, res)
    results = {"exists": True, "method": res.method, "pseudoinverse": res.matrix,
               "axioms": dict(zip(("hP1", "hP2", "hP3", "hP4"), axioms)), "h": res.h}
    return EXIT_OK, results, []


def cmd_classify(doc: JacobianDocument, args) -> tuple[int, dict, list]:
    S = ScrewSystem(ScrewJacobian(doc.jacobian))
    gh = classify(S)
    results = {"class": gh.tag, "label": gh.label, "dimension": gh.dimension,
               "d": gh.dim_inf, "moduli": list(gh.moduli),
               "no_pinv_for_all_h": no_pinv_for_all_h(S)}
    if args.reciprocal is not None:
        h = _parse_h(args.reciprocal, S.is_float)
        results["reciprocal"] = {"h": h, "basis": _rows_of_columns(reciprocal_system(S, h).basis)}
    return EXIT_OK, results, list(gh.warnings)


def cmd_involution(doc: JacobianDocument, args) -> tuple[int, dict, list]:
    report = is_in_involution(LineSet(doc.jacobian.columns()))
    cert = None
    if report.certificate is not None:
        z, w = report.certificate
        cert = {"twist": z.vector, "wrench": w.vector}
    results = {"in_involution": report.in_involution, "certificate": cert,
               "geometric_case": report.geometric_case,
               "transversal_count": report.transversal_count}
    return EXIT_OK, results, list(report.warnings)


def cmd_reciprocal(doc: JacobianDocument, args) -> tuple[int, dict, list]:
    h = _parse_h(args.h if args.h is not None else "0", doc.mode == "float")
    J = ScrewJacobian(doc.jacobian)
    basis = nullspace(J.matrix.T @ q_matrix(Finite(h)))
    return EXIT_OK, {"h": h, "basis": _rows_of_columns(basis), "dimension": basis.cols}, []


def cmd_project(doc: JacobianDocument, args) -> tuple[int, dict, list]:
    fl = doc.mode == "float"
    J = ScrewJacobian(doc.jacobian)
    h = _parse_h(args.h, fl)
    if args.twist is None:
        raise InputError("--twist is required")
    s = _parse_vector(args.twist, 6, fl, "--twist")
    results: dict = {"h": h}
    try:
        if args.damp is not None:
            eps = parse_scalar(args.damp, fl)
            x, P = damped_solution(J, s, eps, h)
            cost = cost_psi(J, s, x, h, eps)
            results.update(damping=eps, cost_kind="Psi")
        else:
            P = projector_h(J, h).matrix
            x = h_pseudoinverse(J, h).matrix.apply(s)
            cost = cost_phi(J, s, x, h)
            results["cost_kind"] = "Phi"
    except NoPseudoinverse as exc:
        return EXIT_NO_PINV, {"exists": False, "reason": str(exc), **_pencil_info(J)}, []
    grad_norm = math.sqrt(sum(float(g) ** 2 for g in cost.gradient))
    results.update(projected_twist=P.apply(s), joint_rates=x, cost=cost.value,
                   gradient=cost.gradient, gradient_norm=grad_norm)
    if (args.point is None) != (args.direction is None):
        raise InputError("--point and --direction go together")
    if args.point is not None:
        xp = _parse_vector(args.point, 3, fl, "--point")
        q = _parse_vector(args.direction, 3, fl, "--direction")
        try:
            basis = point_direction_task(J, xp, q, h)
        except NoPseudoinverse as exc:
            return EXIT_NO_PINV, {"exists": False, "reason": str(exc), **_pencil_info(J)}, []
        results["point_direction_rates"] = _rows_of_columns(basis)
    return EXIT_OK, results, []


COMMANDS = {
    "pinv": cmd_pinv,
    "classify": cmd_classify,
    "involution": cmd_involution,
    "reciprocal": cmd_reciprocal,
    "project": cmd_project,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="screwpinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="JSON document path (default: stdin)")
        p.add_argument("--mode", choices=("rational", "float"))
        p.add_argument("--json", dest="json_out", help="also write the report to this path")
        if name in ("pinv", "reciprocal", "project"):
            p.add_argument("--h", help="pitch: rational, decimal or 'inf'")
        if name == "classify":
            p.add_argument("--reciprocal", help="also report the h-reciprocal basis")
        if name == "project":
            p.add_argument("--twist", help="six comma-separated entries")
            p.add_argument("--damp", help="damping eps for Lambda = eps I")
            p.add_argument("--point", help="x,y,z")
            p.add_argument("--direction", help="x,y,z")
    return parser


def _digest(args: argparse.Namespace, text: str) -> str:
    """sha256 over the document text and the arguments that affect the result."""
    relevant = {k: v for k, v in sorted(vars(args).items()) if k not in ("input", "json_out")}
    h = hashlib.sha256()
    h.update(json.dumps(relevant, sort_keys=True).encode())
    h.update(b"\0")
    h.update(text.encode())
    return h.hexdigest()


def run(argv: Sequence[str], stdin_text: Optional[str] = None) -> tuple[int, str]:
    """Execute the CLI and return (exit code, report text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_MALFORMED), ""
    warnings: list = []
    digest = ""
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = stdin_text if stdin_text is not None else sys.stdin.read()
        digest = _digest(args, text)
        doc = parse_document(text, args.mode)
        code, results, warnings = COMMANDS[args.command](doc, args)
    except (InputError, ScrewError, ValueError, OSError, ZeroDivisionError) as exc:
        code = EXIT_MALFORMED
        results = {"error": f"{type(exc).__name__}: {exc}"}
    report = {
        "command": args.command,
        "inputs_digest": digest,
        "results": serialize(results),
        "warnings": list(warnings),
        "form_convention": FORM_CONVENTION,
    }
    out = dumps(report)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    return code, out


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if code == EXIT_MALFORMED and out:
        print(json.loads(out)["results"].get("error", "malformed input"), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
