"""Command-line frontend.

Exit codes: 0 success or verified, 1 verification failed, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bma, census, designs, jacobi, projective
from .exactnum import default_tol, format_scalar, format_with_float

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


def _tol(args) -> float:
    tol = args.tol if args.tol is not None else default_tol()
    if tol <= 0:
        raise UsageError("--tol must be positive")
    return tol


def _angle_strings(values) -> list[str]:
    return [format_with_float(v) for v in values]


def _residual_str(v) -> str:
    return format_scalar(v) if not isinstance(v, float) else f"{v:.3e}"


# -- verify -------------------------------------------------------------------

def verify_report(ps, t: int, tol: float) -> dict:
    jac = designs.is_t_design(ps, t)
    mom = designs.averaging_check(ps, t)
    doc = {
        "field": ps.field, "n": ps.n, "size": len(ps), "backend": ps.backend, "t": t,
        "is_design": jac.is_design,
        "moments_agree": mom.is_design,
        "degrees": [
            {"i": i + 1,
             "jacobi_residual": _residual_str(jac.worst_sums[i] if jac.exact else jac.residuals[i]),
             "moment_residual": _residual_str(mom.worst_sums[i] if mom.exact else mom.residuals[i]),
             "passed": jac.passed[i]}
            for i in range(t)
        ],
        "certificate": None,
    }
    if jac.is_design:
        cert = designs.tightness(ps, t, tol)
        doc["certificate"] = {
            "s": cert.s, "e": cert.e, "eps": cert.eps, "t_max": cert.t_max,
            "bound": str(cert.bound), "cardinality_match": cert.cardinality_match,
            "angle_roots_match": cert.angle_roots_match,
            "annihilator": str(cert.annihilator),
            "angles": _angle_strings(cert.angles),
            "tight": cert.tight,
        }
    return doc


def _verify_text(doc: dict) -> str:
    lines = [f"design: {doc['field']}P^{doc['n']}, {doc['size']} points, backend {doc['backend']}",
             "degree  jacobi-residual  moment-residual  status"]
    for d in doc["degrees"]:
        lines.append(f"{d['i']:>6}  {d['jacobi_residual']:>15}  {d['moment_residual']:>15}  "
                     f"{'PASS' if d['passed'] else 'FAIL'}")
    lines.append(f"{doc['t']}-design: {'yes' if doc['is_design'] else 'no'}")
    lines.append(f"moment check agrees: {'yes' if doc['moments_agree'] == doc['is_design'] else 'no'}")
    cert = doc["certificate"]
    if cert:
        lines.append("angle set: " + ", ".join(cert["angles"]))
        lines.append(f"s={cert['s']} e={cert['e']} eps={cert['eps']} t_max={cert['t_max']}")
        lines.append(f"bound R_e^eps(1) = {cert['bound']}, |X| = {doc['size']}")
        lines.append(f"annihilator xi^eps R_e^eps: {cert['annihilator']} "
                     f"({'vanishes on A(X)' if cert['angle_roots_match'] else 'does not match A(X)'})")
        lines.append("tight" if cert["tight"] else "not tight")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    ps = projective.load_design(args.path)
    t = _require_t(args)
    doc = verify_report(ps, t, _tol(args))
    _emit(_json(doc) if args.format == "json" else _verify_text(doc), args.output)
    return EXIT_OK if doc["is_design"] else EXIT_FAIL


# -- construct ------------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.which == "cp1-5design":
        ps = designs.construct_cp1_5design()
        t = 5
    else:
        if args.t is None or args.t < 1:
            raise UsageError("rp1-polygon needs --t >= 1")
        t = args.t
        ps = designs.construct_rp1_polygon(t)
    angles = projective.angle_set(projective.gram(ps))
    bound = jacobi.design_bound(jacobi.DesignParams(ps.field, ps.n, t))
    summary = (f"{args.which}: |X| = {len(ps)}, bound = {bound}, "
               f"angle set = {{{', '.join(_angle_strings(angles.values))}}}\n")
    if args.output:
        projective.save_design(ps, args.output)
        sys.stdout.write(summary)
    else:
        sys.stdout.write(projective.dump_design(ps))
        sys.stderr.write(summary)
    return EXIT_OK


# -- bma ------------------------------------------------------------------------

def bma_report(ps, t: int, tol: float) -> dict:
    alg = bma.build(ps, t, tol=tol)
    reports = [bma.verify_mult_table(alg), bma.verify_idempotents(alg), bma.verify_closure(alg)]
    doc = alg.summary()
    doc["reports"] = [r.to_dict() for r in reports]
    doc["passed"] = all(r.passed for r in reports)
    if alg.params.eps:
        cmp = bma.E_trace_comparison(alg.params)
        doc["E_s"] = {"Q_s(1)": str(cmp.Q_s_at_1), "rank_L_s": str(cmp.rank_Ls), "differs": cmp.differs}
    return doc


def _bma_text(doc: dict) -> str:
    lines = [f"Bose-Mesner algebra: {doc['field']}P^{doc['n']}, t={doc['t']}, |X|={doc['size']}, "
             f"s={doc['s']}, backend {doc['backend']}",
             "ranks: " + ", ".join(str(r) for r in doc["ranks"]),
             "traces: " + ", ".join(doc["traces"]),
             "rho: " + ", ".join(doc["rho"]),
             "chi: " + ", ".join(doc["chi"])]
    if doc["lambda_s"] is not None:
        lines.append(f"lambda_s: {doc['lambda_s']}")
    for rep in doc["reports"]:
        lines.append(f"{rep['name']}: {'PASS' if rep['passed'] else 'FAIL'}")
        for c in rep["checks"]:
            if not c["passed"]:
                lines.append(f"  FAIL {c['identity']} witness={c['witness']} {c['detail']}".rstrip())
    if "E_s" in doc:
        e = doc["E_s"]
        lines.append(f"tr E_s = Q_s(1) = {e['Q_s(1)']}, rank L_s = {e['rank_L_s']}, "
                     f"E_s idempotent: {'no' if e['differs'] else 'possible'}")
    return "\n".join(lines) + "\n"


def cmd_bma(args) -> int:
    ps = projective.load_design(args.path)
    t = _require_t(args)
    try:
        doc = bma_report(ps, t, args.tol if args.tol is not None else bma.FLOAT_TOL)
    except designs.NotADesignError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_FAIL
    _emit(_json(doc) if args.format == "json" else _bma_text(doc), args.output)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


# -- census / rationality / bound -----------------------------------------------

def cmd_census(args) -> int:
    n_max = args.n_max_pos if args.n_max_pos is not None else args.n_max
    s_max = args.s_max_pos if args.s_max_pos is not None else args.s_max
    if n_max < 1 or s_max < 1:
        raise UsageError("n_max and s_max must be >= 1")
    rows = census.sweep(jacobi.FIELDS, n_max, s_max, jobs=args.jobs)
    if args.format == "json":
        text = census.rows_to_json(rows)
    elif args.format == "csv":
        text = census.rows_to_csv(rows)
    else:
        equal = [r for r in rows if r.equal]
        lines = [f"{len(rows)} rows, {len(equal)} with rank L_s = rank L_1"]
        lines += [f"equal: F={r.field} n={r.n} s={r.s} t={r.t} rank={r.rank_L1} |X|={r.bound}"
                  for r in equal]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_rationality(args) -> int:
    if args.t_max < 1:
        raise UsageError("--t-max must be >= 1")
    table = census.rationality_table(args.t_max)
    if args.format == "json":
        text = _json([{"t": t, "rational": ok} for t, ok in table])
    elif args.format == "csv":
        text = "t,rational\n" + "".join(f"{t},{'true' if ok else 'false'}\n" for t, ok in table)
    else:
        text = "rational at t = " + ", ".join(str(t) for t, ok in table if ok) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_bound(args) -> int:
    field = args.field_pos or args.field
    n = args.n_pos if args.n_pos is not None else args.n
    t = args.t_pos if args.t_pos is not None else args.t
    if field is None or n is None or t is None:
        raise UsageError("bound needs a field, n and t")
    try:
        params = jacobi.DesignParams(field, n, t)
    except jacobi.DomainError as err:
        raise UsageError(str(err)) from None
    bound = jacobi.design_bound(params)
    roots = jacobi.tight_angle_set(params)
    exact = [format_scalar(r) for r in roots.exact] if roots.exact is not None else None
    doc = {"field": field, "n": n, "t": t, "m": str(params.m), "N": str(params.N),
           "alpha": str(params.alpha), "beta": str(params.beta),
           "s": params.s, "e": params.e, "eps": params.eps,
           "bound": str(bound), "annihilator": str(jacobi.annihilator(params)),
           "angles": [f"{v:.15g}" for v in roots.values], "angles_exact": exact}
    if args.format == "json":
        text = _json(doc)
    else:
        angles = exact if exact is not None else doc["angles"]
        text = (f"F={field} n={n} t={t}: m={doc['m']} N={doc['N']} alpha={doc['alpha']} "
                f"beta={doc['beta']} s={params.s} e={params.e} eps={params.eps}\n"
                f"bound R_e^eps(1) = {bound}\n"
                f"tight angle set: {{{', '.join(doc['angles'])}}}\n")
        if exact is not None:
            text += f"exact: {{{', '.join(angles)}}}\n"
    _emit(text, args.output)
    return EXIT_OK


def _require_t(args) -> int:
    if args.t is None or args.t < 1:
        raise UsageError("--t >= 1 is required")
    return args.t


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--tol", type=float, default=None,
                        help="float tolerance (default 1e-9, or PROJDES_TOL)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--output", default=None)

    parser = argparse.ArgumentParser(prog="projdes",
                                     description="Projective t-designs in RP^n, CP^n, HP^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a design file")
    p.add_argument("path")
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="write a built-in design")
    p.add_argument("which", choices=("cp1-5design", "rp1-polygon"))
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bma", parents=[common], help="Bose-Mesner algebra report")
    p.add_argument("path")
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_bma)

    p = sub.add_parser("census", parents=[common], help="rank L_s vs rank L_1 sweep")
    p.add_argument("n_max_pos", nargs="?", type=int, metavar="N_MAX")
    p.add_argument("s_max_pos", nargs="?", type=int, metavar="S_MAX")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--s-max", type=int, default=12)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("rationality", parents=[common], help="RP^1 angle-set rationality")
    p.add_argument("--t-max", type=int, default=30)
    p.set_defaults(func=cmd_rationality)

    p = sub.add_parser("bound", parents=[common], help="tight-design bound and angles")
    p.add_argument("field_pos", nargs="?", choices=jacobi.FIELDS, metavar="FIELD")
    p.add_argument("n_pos", nargs="?", type=int, metavar="N")
    p.add_argument("t_pos", nargs="?", type=int, metavar="T")
    p.add_argument("--field", choices=jacobi.FIELDS)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args)
    except (UsageError, projective.DesignFileError, ValueError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
