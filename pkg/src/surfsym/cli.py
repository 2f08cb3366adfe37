"""Command-line interface: parse a parametrization file, run the engine, report.

Input grammar, one component per line (blank lines and ``#`` comments allowed)::

    x = -s^3 + 3*s*t^2 + 3*s
    y = 3*s^2*t - t^3 + 3*t
    z = 3*s^2 - 3*t^2

Expressions use ``+ - * ^`` (``**`` also accepted), parentheses, integer and
rational literals ``p/q``, and the variables ``t`` and ``s``.
"""
from __future__ import annotations

import argparse
import ast
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import MPoly
from .arith.algebraic import AlgElem
from .classifier import Line, Plane, Point, SymmetryReport
from .errors import ParseError, PreconditionError, SymmetryError
from .surface import PARAMS, Parametrization

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INTERNAL, EXIT_PRECONDITION = 0, 1, 2


# -- input ----------------------------------------------------------------------

@dataclass
class InputSpec:
    x: MPoly
    y: MPoly
    z: MPoly
    texts: tuple = ("", "", "")
    options: dict = field(default_factory=dict)

    def parametrization(self):
        return Parametrization(self.x, self.y, self.z)


class _ExprBuilder:
    """Turn a Python ``ast`` expression into an MPoly over (t, s)."""

    def __init__(self, line, colmap):
        self.line = line
        self.colmap = colmap

    def error(self, node, msg):
        col = self.colmap(getattr(node, "col_offset", 0)) + 1
        return ParseError(msg, self.line, col)

    def build(self, node):
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise self.error(node, f"unsupported literal {node.value!r}")
            return MPoly.const(node.value, PARAMS)
        if isinstance(node, ast.Name):
            if node.id not in PARAMS:
                raise self.error(node, f"unknown variable {node.id!r} (expected t or s)")
            return MPoly.var(node.id, PARAMS)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = self.build(node.operand)
            return -inner if isinstance(node.op, ast.USub) else inner
        if isinstance(node, ast.BinOp):
            left = self.build(node.left)
            if isinstance(node.op, ast.Pow):
                right = self.build(node.right)
                if not right.is_constant():
                    raise self.error(node.right, "exponent must be a constant")
                k = right.constant_value()
                if not isinstance(k, int) or k < 0:
                    raise self.error(node.right, "exponent must be a nonnegative integer")
                return left ** k
            right = self.build(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if not right.is_constant() or right.is_zero():
                    raise self.error(node.right, "division only by nonzero constants")
                return left * (Fraction(1) / Fraction(right.constant_value()))
        raise self.error(node, f"unsupported syntax {type(node).__name__}")


def _parse_expr(text, line, start_col):
    # '^' means power here; Python's '^' is xor with the wrong precedence
    chars, origin = [], []
    for i, ch in enumerate(text):
        if ch == "^":
            chars.extend("**")
            origin.extend((i, i))
        else:
            chars.append(ch)
            origin.append(i)
    origin.append(len(text))
    src = "".join(chars)

    def colmap(c):
        return start_col + origin[min(max(c, 0), len(origin) - 1)]

    lead = len(src) - len(src.lstrip())
    try:
        tree = ast.parse(src.lstrip(), mode="eval")
    except SyntaxError as exc:
        col = colmap(lead + (exc.offset or 1) - 1) + 1
        raise ParseError(f"syntax error: {exc.msg}", line, col) from None
    return _ExprBuilder(line, lambda c: colmap(c + lead)).build(tree.body)


def parse_input(text: str) -> InputSpec:
    """Parse ``x = ...``, ``y = ...``, ``z = ...`` lines into an InputSpec."""
    found = {}
    texts = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if "=" not in body:
            raise ParseError("expected '<component> = <expression>'", lineno, 1)
        lhs, rhs = body.split("=", 1)
        name = lhs.strip()
        if name not in ("x", "y", "z"):
            raise ParseError(f"unknown component {name!r} (expected x, y or z)", lineno,
                             len(lhs) - len(lhs.lstrip()) + 1)
        if name in found:
            raise ParseError(f"component {name} given twice", lineno, 1)
        if not rhs.strip():
            raise ParseError(f"empty expression for {name}", lineno, len(lhs) + 2)
        found[name] = _parse_expr(rhs, lineno, len(lhs) + 1)
        texts[name] = rhs.strip()
    missing = [c for c in "xyz" if c not in found]
    if missing:
        raise ParseError(f"missing component{'s' if len(missing) > 1 else ''}: {', '.join(missing)}")
    return InputSpec(found["x"], found["y"], found["z"], (texts["x"], texts["y"], texts["z"]))


# -- output -----------------------------------------------------------------------

def _decimal(q: Fraction, digits: int) -> str:
    scaled = round(q * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}" if digits else f"{sign}{s}"


def scalar_json(x, digits):
    if isinstance(x, AlgElem):
        q = x.rational_value()
        if q is None:
            iv = x.root_interval("x")
            if iv.exact is None:
                iv = iv.refine(Fraction(1, 10 ** digits))
                return {"lo": str(iv.lo), "hi": str(iv.hi),
                        "minpoly": str(MPoly.from_univariate(list(iv.poly), "x"))}
            q = iv.exact
        x = q
    return str(Fraction(x))


def scalar_text(x, digits):
    if isinstance(x, AlgElem):
        q = x.rational_value()
        if q is None:
            lo, hi = x.enclosure(Fraction(1, 10 ** digits))
            return "~" + _decimal((lo + hi) / 2, digits)
        x = q
    return str(Fraction(x))


def element_json(e, digits):
    if isinstance(e, Point):
        return {"type": "point", "center": [scalar_json(c, digits) for c in e.center]}
    if isinstance(e, Line):
        return {"type": "line", "point": [scalar_json(c, digits) for c in e.point],
                "direction": [scalar_json(c, digits) for c in e.direction]}
    if isinstance(e, Plane):
        return {"type": "plane", "normal": [scalar_json(c, digits) for c in e.normal],
                "offset": scalar_json(e.offset, digits)}
    return None


def _vec_text(v, digits):
    return "(" + ", ".join(scalar_text(c, digits) for c in v) + ")"


def element_text(e, digits):
    if isinstance(e, Point):
        return f"center {_vec_text(e.center, digits)}"
    if isinstance(e, Line):
        return f"axis through {_vec_text(e.point, digits)} direction {_vec_text(e.direction, digits)}"
    names = "xyz"
    terms = []
    for i, c in enumerate(e.normal):
        if isinstance(c, AlgElem) or c != 0:
            coef = scalar_text(c, digits)
            if coef in ("1", "-1"):
                coef = coef[:-1]
            else:
                coef += "*"
            terms.append(f"{coef}{names[i]}")
    text = " + ".join(terms).replace("+ -", "- ").replace("+ ~-", "- ~")
    return f"plane {text} = {scalar_text(e.offset, digits)}"


def report_json(report: SymmetryReport, digits=12, timings=False, seed=0):
    invs = []
    for inv in report.involutions:
        invs.append({
            "kind": inv.kind,
            "case": inv.case.label,
            "detQ": inv.detQ,
            "Q": [[scalar_json(x, digits) for x in row] for row in inv.Q],
            "b": [scalar_json(x, digits) for x in inv.b],
            "phi": {"matrix": [[scalar_json(x, digits) for x in row] for row in inv.phi.matrix],
                    "shift": [scalar_json(x, digits) for x in inv.phi.shift]},
            "element": element_json(inv.element, digits),
            "exact": inv.exact,
        })
    rev = None
    if report.revolution is not None:
        r = report.revolution
        rev = {"axis": element_json(r["axis"], digits) if r["axis"] is not None else None,
               "case": r["case"].label, "witness": str(r["witness"]), "source": r["source"]}
    diag = {
        "seed": seed,
        "cases": [{"case": o.case.label, "status": o.status, "detail": o.detail} for o in report.outcomes],
        "warnings": list(report.warnings),
    }
    if timings:
        diag["timings"] = {o.case.label: {k: round(v, 6) for k, v in o.timings.items()}
                           for o in report.outcomes}
    return {
        "schema": SCHEMA_VERSION,
        "surface": dict(zip("xyz", report.surface)),
        "involutions": invs,
        "revolution": rev,
        "diagnostics": diag,
    }


def report_text(report: SymmetryReport, digits=12, timings=False):
    lines = ["surface:"]
    for name, expr in zip("xyz", report.surface):
        lines.append(f"  {name} = {expr}")
    n_ax, n_pl, n_ce = len(report.axial), len(report.planar), len(report.central)
    lines.append(f"involutions: {len(report.involutions)} "
                 f"({n_ax} axial, {n_pl} planar, {n_ce} central)")
    for k, inv in enumerate(report.involutions, start=1):
        tag = "" if inv.exact else "  [algebraic]"
        lines.append(f"  [{k}] {inv.kind:<7} case {inv.case.label:<6} {element_text(inv.element, digits)}{tag}")
    if report.revolution is None:
        lines.append("revolution: no")
    else:
        r = report.revolution
        axis = element_text(r["axis"], digits) if r["axis"] is not None else "axis unknown"
        lines.append(f"revolution: yes, {axis} (curve {r['witness']} = 0 in case {r['case'].label})")
    lines.append("cases:")
    for o in report.outcomes:
        extra = ""
        if timings and o.timings:
            extra = "  [" + ", ".join(f"{k} {v * 1000:.1f} ms" for k, v in o.timings.items()) + "]"
        lines.append(f"  {o.case.label:<6} {o.status:<8} {o.detail}{extra}")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


# -- driver -----------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="surfsym", description="Detect involutive symmetries of "
                                 "a polynomially parametrized surface.")
    ap.add_argument("input", help="parametrization file ('-' for stdin)")
    ap.add_argument("--seed", type=int, default=0, help="seed for the reparametrization (default 0)")
    ap.add_argument("--digits", type=int, default=12, help="decimal digits for algebraic values")
    ap.add_argument("--only", choices=("direct", "opposite"), help="restrict to one det(Q) sign")
    ap.add_argument("--case", help="run a single case, e.g. D1, D1+ or D2ii-")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--dump-systems", metavar="DIR", help="write each polynomial system to DIR")
    ap.add_argument("--time", action="store_true", help="report per-stage wall times")
    return ap


def run(spec: InputSpec, out=None, err=None) -> int:
    """Execute the pipeline for a parsed spec and write the report; returns the exit code."""
    from .engine import analyze, select_cases

    out = out or sys.stdout
    err = err or sys.stderr
    opts = spec.options
    digits = opts.get("digits", 12)
    if digits < 1:
        err.write("error: --digits must be positive\n")
        return EXIT_PRECONDITION
    try:
        cases = select_cases(opts.get("only"), opts.get("case"))
        t0 = time.perf_counter()
        report = analyze(spec.parametrization(), seed=opts.get("seed", 0), cases=cases,
                         dump_dir=opts.get("dump_systems"), surface_text=spec.texts)
        total = time.perf_counter() - t0
    except PreconditionError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except SymmetryError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    if opts.get("json"):
        doc = report_json(report, digits, opts.get("time", False), opts.get("seed", 0))
        if opts.get("time"):
            doc["diagnostics"]["total_seconds"] = round(total, 6)
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(report_text(report, digits, opts.get("time", False)))
        if opts.get("time"):
            out.write(f"total: {total:.3f} s\n")
    return EXIT_OK


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        spec = parse_input(text)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    spec.options = {"seed": args.seed, "digits": args.digits, "only": args.only, "case": args.case,
                    "json": args.json, "dump_systems": args.dump_systems, "time": args.time}
    try:
        return run(spec)
    except Exception as exc:  # noqa: BLE001 - last-resort exit status
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
