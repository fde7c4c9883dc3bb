"""Command-line interface: exact coefficients, verification runs, data tables.

Three top-level commands:

* ``coeffs``  -- exact member coefficients for one family member
* ``verify``  -- re-derive an identity over a range of indices and report
  one line per check (orthogonality, ode3, pencil, recurrence,
  integral-rep, limit, psi)
* ``table``   -- numeric data emissions (roots, eval-grid, quad-rule,
  discriminant-grid)

Output formats: ``text`` (default), ``csv``, and ``json``.  The JSON
document is always the record {command, params, results, pass}; rational
numbers cross the boundary as "p/q" strings, floats are printed with 17
significant digits in the delimited formats.  Output is deterministic:
identical invocations produce identical bytes.

Exit codes: 0 success, 1 a verification failed (or an iteration did not
converge), 2 usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import discriminant_L, discriminant_P, integral_rep_check, limit_check, roots
from .diffop import ode3_residual, pencil_residual
from .families import (
    BOLD_L,
    BOLD_P,
    SCRIPT_L,
    SCRIPT_P,
    FamilySpec,
    PoleError,
    bold_l,
    bold_p,
    make_member,
    script_l,
    script_p,
)
from .recurrence import (
    DomainError,
    psi_consistency,
    recurrence_residual_L,
    recurrence_residual_P,
)
from .sobolev import (
    ConvergenceError,
    a_n_normalized,
    gauss_rule,
    jacobi_weight,
    laguerre_weight,
    sobolev_form_for,
    sobolev_inner_exact,
    verify_orthogonality,
)

__all__ = ["main"]

RATIO_WINDOW = (1.8, 2.2)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _rational_list(text: str) -> list[Fraction]:
    items = [part for part in text.split(",") if part.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of rationals")
    return [_rational(part.strip()) for part in items]


def _rational_range(text: str) -> list[Fraction]:
    """Parse ``lo:hi:count`` into an inclusive, exactly spaced rational grid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected lo:hi:count, got {text!r}")
    lo, hi = _rational(parts[0]), _rational(parts[1])
    try:
        count = int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"grid count must be an integer in {text!r}") from exc
    if count < 1:
        raise argparse.ArgumentTypeError("grid count must be at least 1")
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _family_from_args(args, allowed) -> FamilySpec:
    kind = args.family
    if kind not in allowed:
        raise ValueError(f"family must be one of {', '.join(allowed)} here, got {kind}")
    if kind == SCRIPT_L:
        if args.q is None or args.r is None:
            raise ValueError("scriptL needs --q and --r")
        return script_l(args.q, args.r)
    if kind == SCRIPT_P:
        if args.a is None or args.b is None or args.c is None:
            raise ValueError("scriptP needs --a, --b and --c")
        return script_p(args.a, args.b, args.c)
    if kind == BOLD_L:
        if args.q is None:
            raise ValueError("boldL needs --q (and optionally --rs)")
        return bold_l(args.q, args.rs or [])
    if kind == BOLD_P:
        if args.a is None or args.b is None:
            raise ValueError("boldP needs --a and --b (and optionally --cs)")
        return bold_p(args.a, args.b, args.cs or [])
    raise ValueError(f"unknown family {kind!r}")


def _spec_params(spec: FamilySpec) -> dict:
    if spec.kind == SCRIPT_L:
        return {"q": str(spec.params[0]), "r": str(spec.params[1])}
    if spec.kind == SCRIPT_P:
        return {"a": str(spec.params[0]), "b": str(spec.params[1]), "c": str(spec.params[2])}
    if spec.kind == BOLD_L:
        return {"q": str(spec.params[0]), "rs": [str(p) for p in spec.params[1:]]}
    return {
        "a": str(spec.params[0]),
        "b": str(spec.params[1]),
        "cs": [str(p) for p in spec.params[2:]],
    }


def _document(command: str, params: dict, results: dict, passed: bool) -> dict:
    return {"command": command, "params": params, "results": results, "pass": passed}


def _residual_rows(residual_at, nmax: int):
    rows = []
    ok_all = True
    for n in range(nmax + 1):
        res = residual_at(n)
        peak = max((abs(cc) for cc in res.coeffs), default=Fraction(0))
        ok = res.is_zero
        ok_all = ok_all and ok
        rows.append([n, str(peak), ok])
    return rows, ok_all


# --- handlers --------------------------------------------------------------


def _cmd_coeffs(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P, BOLD_L, BOLD_P))
    if args.n is None:
        raise ValueError("coeffs needs --n")
    member = make_member(spec, args.n)
    coefficients = [str(member.coefficient(k)) for k in range(args.n + 1)]
    params = {"family": spec.kind, **_spec_params(spec), "n": args.n}
    results = {
        "columns": ["k", "coefficient"],
        "rows": [[k, coefficients[k]] for k in range(args.n + 1)],
        "degree": member.degree,
        "coefficients": coefficients,
    }
    return _document("coeffs", params, results, True)


def _cmd_verify_orthogonality(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P, BOLD_L, BOLD_P))
    report = verify_orthogonality(spec, args.nmax)
    failed = {(n, m) for n, m, _, _ in report.failures}
    rows = []
    form = sobolev_form_for(spec)
    for n in range(args.nmax + 1):
        yn = make_member(spec, n)
        for m in range(n + 1):
            inner = sobolev_inner_exact(form, yn, make_member(spec, m))
            want = a_n_normalized(spec, n) if n == m else Fraction(0)
            rows.append([n, m, str(inner), str(want), (n, m) not in failed])
    params = {"family": spec.kind, **_spec_params(spec), "nmax": args.nmax}
    results = {
        "columns": ["n", "m", "inner_product", "expected", "ok"],
        "rows": rows,
        "pairs_checked": report.pairs_checked,
        "failures": len(report.failures),
    }
    return _document("verify orthogonality", params, results, report.ok)


def _cmd_verify_ode3(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P))
    rows, ok = _residual_rows(lambda n: ode3_residual(spec, n), args.nmax)
    params = {"family": spec.kind, **_spec_params(spec), "nmax": args.nmax}
    results = {"columns": ["n", "residual_max_coeff", "ok"], "rows": rows}
    return _document("verify ode3", params, results, ok)


def _cmd_verify_pencil(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P, BOLD_L, BOLD_P))
    rows, ok = _residual_rows(lambda n: pencil_residual(spec, n), args.nmax)
    params = {"family": spec.kind, **_spec_params(spec), "nmax": args.nmax}
    results = {"columns": ["n", "residual_max_coeff", "ok"], "rows": rows}
    return _document("verify pencil", params, results, ok)


def _cmd_verify_recurrence(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P))
    if spec.kind == SCRIPT_L:
        q, r = spec.params
        residual_at = lambda n: recurrence_residual_L(q, r, n)
    else:
        a, b, c = spec.params
        residual_at = lambda n: recurrence_residual_P(a, b, c, n)
    rows, ok = _residual_rows(residual_at, args.nmax)
    params = {"family": spec.kind, **_spec_params(spec), "nmax": args.nmax}
    results = {"columns": ["n", "residual_max_coeff", "ok"], "rows": rows}
    return _document("verify recurrence", params, results, ok)


def _cmd_verify_integral_rep(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P))
    z = args.z
    if z is None:
        raise ValueError("integral-rep needs --z (the evaluation point)")
    rows = []
    ok_all = True
    for n in range(args.nmax + 1):
        lhs, rhs = integral_rep_check(spec, n, z, args.points)
        err = abs(lhs - rhs)
        ok = err <= args.tol * max(1.0, abs(lhs))
        ok_all = ok_all and ok
        rows.append([n, lhs, rhs, err, ok])
    params = {
        "family": spec.kind,
        **_spec_params(spec),
        "nmax": args.nmax,
        "z": z,
        "tol": args.tol,
    }
    results = {"columns": ["n", "direct", "integral", "abs_err", "ok"], "rows": rows}
    return _document("verify integral-rep", params, results, ok_all)


def _cmd_verify_limit(args):
    x = args.z if args.z is not None else Fraction(1)
    bs = args.b_values or [Fraction(2) ** k for k in range(8, 13)]
    errors = limit_check(args.q, args.r, args.n, x, bs)
    rows = [[str(b), e] for b, e in zip(bs, errors)]
    ratios = [
        errors[i] / errors[i + 1] if errors[i + 1] else None
        for i in range(len(errors) - 1)
    ]
    if all(e == 0.0 for e in errors):
        passed = True  # already exact at every tested b
        ratios = []
    else:
        lo, hi = RATIO_WINDOW
        passed = bool(ratios) and all(rr is not None and lo <= rr <= hi for rr in ratios)
    params = {
        "q": str(args.q),
        "r": str(args.r),
        "n": args.n,
        "x": str(x),
        "b_values": [str(b) for b in bs],
    }
    results = {
        "columns": ["b", "error"],
        "rows": rows,
        "ratios": ratios,
        "ratio_window": list(RATIO_WINDOW),
    }
    return _document("verify limit", params, results, passed)


def _cmd_verify_psi(args):
    rows = []
    ok_all = True
    for n in range(2, args.nmax + 1):
        res = psi_consistency(args.a, args.b, args.c, n)
        ok = all(v == 0 for v in res)
        ok_all = ok_all and ok
        rows.append([n, *[str(v) for v in res], ok])
    params = {"a": str(args.a), "b": str(args.b), "c": str(args.c), "nmax": args.nmax}
    results = {
        "columns": ["n", "relation1", "relation2", "relation3", "relation4", "ok"],
        "rows": rows,
    }
    return _document("verify psi", params, results, ok_all)


def _cmd_table_roots(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P, BOLD_L, BOLD_P))
    if args.n is None:
        raise ValueError("roots needs --n")
    member = make_member(spec, args.n)
    if member.degree is None or member.degree < 1:
        raise ValueError("roots needs a member of degree at least 1 (n >= 1)")
    found = roots(member)
    rows = [[i, z.real, z.imag] for i, z in enumerate(found.roots)]
    params = {"family": spec.kind, **_spec_params(spec), "n": args.n}
    results = {
        "columns": ["index", "real", "imag"],
        "rows": rows,
        "residual_bound": found.residual_bound,
        "iterations": found.iterations,
    }
    return _document("table roots", params, results, True)


def _cmd_table_eval_grid(args):
    spec = _family_from_args(args, (SCRIPT_L, SCRIPT_P, BOLD_L, BOLD_P))
    if args.n is None:
        raise ValueError("eval-grid needs --n")
    if args.x_range is None:
        raise ValueError("eval-grid needs --x-range lo:hi:count")
    member = make_member(spec, args.n)
    rows = [[float(x), float(member(x))] for x in args.x_range]
    params = {
        "family": spec.kind,
        **_spec_params(spec),
        "n": args.n,
        "x_range": [str(x) for x in args.x_range],
    }
    results = {"columns": ["x", "value"], "rows": rows}
    return _document("table eval-grid", params, results, True)


def _cmd_table_quad_rule(args):
    if args.weight == "laguerre":
        if args.q is None:
            raise ValueError("laguerre weight needs --q")
        weight = laguerre_weight(args.q)
        wparams = {"q": str(args.q)}
    else:
        if args.a is None or args.b is None:
            raise ValueError("jacobi weight needs --a and --b")
        weight = jacobi_weight(args.a, args.b)
        wparams = {"a": str(args.a), "b": str(args.b)}
    if args.points is None:
        raise ValueError("quad-rule needs --points")
    rule = gauss_rule(weight, args.points)
    rows = [[i, x, w] for i, (x, w) in enumerate(zip(rule.nodes, rule.weights))]
    params = {"weight": args.weight, **wparams, "points": args.points}
    results = {"columns": ["index", "node", "weight"], "rows": rows}
    return _document("table quad-rule", params, results, True)


def _cmd_table_discriminant_grid(args):
    if args.family == SCRIPT_L:
        if args.q_range is None or args.r_range is None:
            raise ValueError("scriptL discriminant grid needs --q-range and --r-range")
        rows = []
        for q in args.q_range:
            for r in args.r_range:
                d = discriminant_L(q, r)
                rows.append([str(q), str(r), str(d), (d > 0) - (d < 0)])
        params = {
            "family": SCRIPT_L,
            "q_range": [str(v) for v in args.q_range],
            "r_range": [str(v) for v in args.r_range],
        }
        results = {"columns": ["q", "r", "discriminant", "sign"], "rows": rows}
    elif args.family == SCRIPT_P:
        if args.a_range is None or args.b_range is None or args.c_range is None:
            raise ValueError("scriptP discriminant grid needs --a-range, --b-range and --c-range")
        rows = []
        for a in args.a_range:
            for b in args.b_range:
                for c in args.c_range:
                    d = discriminant_P(a, b, c)
                    rows.append([str(a), str(b), str(c), str(d), (d > 0) - (d < 0)])
        params = {
            "family": SCRIPT_P,
            "a_range": [str(v) for v in args.a_range],
            "b_range": [str(v) for v in args.b_range],
            "c_range": [str(v) for v in args.c_range],
        }
        results = {"columns": ["a", "b", "c", "discriminant", "sign"], "rows": rows}
    else:
        raise ValueError("discriminant-grid supports scriptL and scriptP")
    return _document("table discriminant-grid", params, results, True)


# --- rendering -------------------------------------------------------------


def _cell_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt(value)
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_cell_text(v) for v in value) + "]"
    return str(value)


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    columns = doc["results"].get("columns", [])
    rows = doc["results"].get("rows", [])
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_cell_text(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    # text
    lines = [f"command: {doc['command']}"]
    for key, value in doc["params"].items():
        lines.append(f"  {key} = {_cell_text(value)}")
    lines.append("  ".join(columns))
    for row in rows:
        lines.append("  ".join(_cell_text(v) for v in row))
    for key, value in doc["results"].items():
        if key in ("columns", "rows"):
            continue
        lines.append(f"{key}: {_cell_text(value)}")
    lines.append(f"pass: {_cell_text(doc['pass'])}")
    return "\n".join(lines) + "\n"


# --- parser ----------------------------------------------------------------


def _add_family_flags(p: argparse.ArgumentParser):
    p.add_argument("--family", required=True,
                   choices=[SCRIPT_L, SCRIPT_P, BOLD_L, BOLD_P])
    p.add_argument("--q", type=_rational)
    p.add_argument("--r", type=_rational)
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_rational)
    p.add_argument("--c", type=_rational)
    p.add_argument("--rs", type=_rational_list, metavar="R1,R2,...")
    p.add_argument("--cs", type=_rational_list, metavar="C1,C2,...")


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--out", metavar="PATH", default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sobhyp",
        description="Hypergeometric Sobolev orthogonal polynomial families: "
                    "exact coefficients, identity verification, numeric tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="exact coefficients of one family member")
    _add_family_flags(p)
    p.add_argument("--n", type=int)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_coeffs)

    verify = sub.add_parser("verify", help="re-derive identities over an index range")
    vsub = verify.add_subparsers(dest="subject", required=True)

    p = vsub.add_parser("orthogonality", help="exact Sobolev orthogonality with diagonal values")
    _add_family_flags(p)
    p.add_argument("--nmax", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_orthogonality)

    p = vsub.add_parser("ode3", help="third-order differential equation residuals")
    _add_family_flags(p)
    p.add_argument("--nmax", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_ode3)

    p = vsub.add_parser("pencil", help="operator-pencil eigenfunction residuals")
    _add_family_flags(p)
    p.add_argument("--nmax", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_pencil)

    p = vsub.add_parser("recurrence", help="five-polynomial recurrence residuals")
    _add_family_flags(p)
    p.add_argument("--nmax", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_recurrence)

    p = vsub.add_parser("integral-rep", help="integral representation vs direct evaluation")
    _add_family_flags(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--z", type=float, help="evaluation point")
    p.add_argument("--points", type=int, default=None, help="quadrature points override")
    p.add_argument("--tol", type=float, default=1e-10)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_integral_rep)

    p = vsub.add_parser("limit", help="large-b limit of the Jacobi-side family")
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--r", type=_rational, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", type=_rational, help="evaluation point (default 1)")
    p.add_argument("--b-values", type=_rational_list, metavar="B1,B2,...")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_limit)

    p = vsub.add_parser("psi", help="scaled-coefficient linear identities")
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_rational, required=True)
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--nmax", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_psi)

    table = sub.add_parser("table", help="numeric data tables")
    tsub = table.add_subparsers(dest="what", required=True)

    p = tsub.add_parser("roots", help="all roots of one member")
    _add_family_flags(p)
    p.add_argument("--n", type=int)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_table_roots)

    p = tsub.add_parser("eval-grid", help="member values on an x grid")
    _add_family_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--x-range", type=_rational_range, metavar="LO:HI:COUNT")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_table_eval_grid)

    p = tsub.add_parser("quad-rule", help="Gauss rule nodes and weights")
    p.add_argument("--weight", choices=["laguerre", "jacobi"], required=True)
    p.add_argument("--q", type=_rational)
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_rational)
    p.add_argument("--points", type=int)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_table_quad_rule)

    p = tsub.add_parser("discriminant-grid", help="degree-2 discriminants over parameter grids")
    p.add_argument("--family", required=True, choices=[SCRIPT_L, SCRIPT_P])
    p.add_argument("--q-range", type=_rational_range, metavar="LO:HI:COUNT")
    p.add_argument("--r-range", type=_rational_range, metavar="LO:HI:COUNT")
    p.add_argument("--a-range", type=_rational_range, metavar="LO:HI:COUNT")
    p.add_argument("--b-range", type=_rational_range, metavar="LO:HI:COUNT")
    p.add_argument("--c-range", type=_rational_range, metavar="LO:HI:COUNT")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_table_discriminant_grid)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.handler(args)
    except (PoleError, DomainError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rendered = _render(doc, args.format)
    if args.out:
        Path(args.out).write_text(rendered)
    else:
        sys.stdout.write(rendered)
    return 0 if doc["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
