"""Command-line interface.

Usage examples::

    orbindex dedekind --q 1 --p 5
    orbindex index wps --r 3 --q 7 --p 31 --json
    orbindex scan --r 3 --q 7 --pmin 11 --pmax 541 --primes-only --out h.csv
    orbindex verify --suite all --pmax 50

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from . import correction as corr
from . import dedekind as ded
from . import spaces
from .numtheory import DomainError, InvariantError, canonical_action, hj_expansion
from .verify import SUITES, run_suite, table_wps_rows

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def render(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        # round away summation noise; -0.0 prints as 0.0
        return repr(round(x, 12) + 0.0)
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return render(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _action(q, p):
    try:
        return canonical_action(q, p)
    except DomainError as exc:
        raise InputError(str(exc)) from None


def _float_tol(p: int) -> float:
    # one 1e-8 allowance per summed term
    return 1e-8 * max(p - 1, 1)


def cmd_dedekind(args):
    a = _action(args.q, args.p)
    rec = {"q": a.q, "p": a.p, "method": args.method}
    if args.method == "float":
        value = ded.dedekind_float(a)
        rec.update(value=value, tolerance=_float_tol(a.p))
        text = f"{render(value)} (tol {rec['tolerance']:.0e})"
    else:
        fn = ded.dedekind_exact if args.method == "exact" else ded.dedekind_fast
        value = fn(a)
        rec["value"] = value
        text = render(value)
    return rec, text, EXIT_OK


def cmd_hj(args):
    a = _action(args.q, args.p)
    hj = hj_expansion(a)
    rec = {"q": a.q, "p": a.p, "coefficients": list(hj.coefficients), "length": hj.length}
    text = f"{list(hj.coefficients)} k={hj.length}"
    return rec, text, EXIT_OK


def cmd_correction(args):
    a = _action(args.q, args.p)
    closed, dedekind, approx = corr.n_closed(a), corr.n_dedekind(a), corr.n_float(a)
    tol = 1e-4
    agree = closed == dedekind and abs(approx - closed) < tol
    rec = {
        "q": a.q, "p": a.p, "exceptional": a.exceptional,
        "n_closed": closed, "n_dedekind": dedekind,
        "n_float": approx, "tolerance": tol, "agree": agree,
    }
    text = (
        f"N{a} = {closed}  (dedekind {dedekind}, float {render(approx)} tol {tol:g})"
        f"{'' if agree else '  MISMATCH'}"
    )
    return rec, text, EXIT_OK if agree else EXIT_FAIL


def _parse_sing(spec: str):
    out = []
    for item in filter(None, (s.strip() for s in spec.split(","))):
        try:
            q, p = (int(x) for x in item.split("/"))
        except ValueError:
            raise InputError(f"bad singularity {item!r}: expected q/p") from None
        out.append(_action(q, p))
    return out


def cmd_index(args):
    if args.space == "orbifold":
        sings = _parse_sing(args.sing or "")
        try:
            report = spaces.index_orbifold(spaces.OrbifoldData(args.chi, args.tau, tuple(sings)))
        except InvariantError as exc:
            raise InputError(str(exc)) from None
        rec = {
            "chi": args.chi, "tau": args.tau,
            "topological_part": report.topological_part,
            "corrections": [[str(a), n] for a, n in report.corrections],
            "index": report.index,
        }
        parts = " ".join(f"N{a}={n}" for a, n in report.corrections)
        return rec, f"index {report.index}  (topological {render(report.topological_part)} {parts})".rstrip(), EXIT_OK

    if args.space == "cs":
        try:
            m = spaces.moduli_calderbank_singer(args.q, args.p)
            via = spaces.index_cs_via_orbifold(args.q, args.p)
        except DomainError as exc:
            raise InputError(str(exc)) from None
        ok = via == m.index
        rec = {
            "q": args.q, "p": args.p, "index": m.index, "index_via_orbifold": via,
            "dim_h0": m.dim_h0, "dim_h1": m.dim_h1, "moduli": str(m.statement),
            "admits_nontoric": m.admits_nontoric,
        }
        text = (
            f"index {m.index}  h0={m.dim_h0} h1={m.dim_h1} moduli: {m.statement}"
            f"  non-toric: {'yes' if m.admits_nontoric else 'no'}"
        )
        return rec, text, EXIT_OK if ok else EXIT_FAIL

    try:
        t = spaces.WpsTriple(args.r, args.q, args.p)
    except DomainError as exc:
        raise InputError(str(exc)) from None
    index = spaces.index_wps(t)
    c = spaces.classify_wps(t)
    rec = {
        "r": t.r, "q": t.q, "p": t.p, "index": index,
        "actions": {pt: str(a) for pt, a in c.actions.items()},
        "exceptional": c.exceptional_flags,
        "epsilon": c.epsilon, "regime": c.regime.value, "sign": c.h_sign.value,
        "H": c.h_value,
    }
    text = f"index {index}  epsilon={c.epsilon} sign {c.h_sign.value} regime {c.regime.value}"
    if 1 < t.r < t.q < t.p:
        stmt = spaces.moduli_wps(t).statement
        rec["moduli"] = str(stmt)
        text += f"  moduli: {stmt}"
    return rec, text, EXIT_OK


def cmd_table(args):
    rows = table_wps_rows()
    matched = sum(row[-1] for row in rows)
    lines = []
    out_rows = []
    for triple, eps, sign, got_eps, got_sign, ok in rows:
        lines.append(
            f"{triple}: epsilon {got_eps} (expected {eps}), sign {got_sign}0 (expected {sign}0)"
            f"  {'ok' if ok else 'MISMATCH'}"
        )
        out_rows.append({"triple": list(triple), "epsilon": got_eps, "sign": got_sign + "0",
                         "expected_epsilon": eps, "expected_sign": sign + "0", "match": ok})
    lines.append(f"{matched}/{len(rows)} rows match")
    rec = {"rows": out_rows, "matched": matched, "total": len(rows)}
    return rec, "\n".join(lines), EXIT_OK if matched == len(rows) else EXIT_FAIL


def cmd_scan(args):
    if args.pmin > args.pmax:
        raise InputError(f"pmin must not exceed pmax, got {args.pmin} > {args.pmax}")
    ps = spaces.primes_between(args.pmin, args.pmax) if args.primes_only else range(args.pmin, args.pmax + 1)
    try:
        rows = spaces.scan_h(args.r, args.q, ps)
    except DomainError as exc:
        raise InputError(str(exc)) from None
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "H_num", "H_den", "sign"])
    for row in rows:
        writer.writerow([row.p, row.h.numerator, row.h.denominator, row.sign])
    pos = sum(row.sign == "+" for row in rows)
    summary = f"{len(rows)} rows: {pos} positive, {len(rows) - pos} negative"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
        print(summary)
    else:
        sys.stdout.write(buf.getvalue())
        print(summary, file=sys.stderr)
    return None, None, EXIT_OK


def cmd_verify(args):
    results = run_suite(args.suite, args.pmax)
    ok = all(r.passed for r in results)
    rec = {
        "suite": args.suite, "pmax": args.pmax, "passed": ok,
        "checks": [
            {"name": r.name, "passed": r.passed, "cases": r.checked,
             "failures": [list(map(str, f)) for f in r.failures[:5]]}
            for r in results
        ],
    }
    lines = [r.line() for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return rec, "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--no-meta", action="store_true", help="omit the timestamp from JSON output")

    parser = argparse.ArgumentParser(prog="orbindex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(q,p)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--method", choices=["exact", "fast", "float"], default="fast")
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("hj", parents=[common], help="Hirzebruch-Jung expansion of p/q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_hj)

    p = sub.add_parser("correction", parents=[common], help="correction term N(q,p) by three routes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_correction)

    p = sub.add_parser("index", help="index of the deformation complex")
    isub = p.add_subparsers(dest="space", required=True)
    o = isub.add_parser("orbifold", parents=[common])
    o.add_argument("--chi", type=int, required=True)
    o.add_argument("--tau", type=int, required=True)
    o.add_argument("--sing", default="", help="comma-separated q/p list, e.g. 2/5,3/5")
    c = isub.add_parser("cs", parents=[common])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    w = isub.add_parser("wps", parents=[common])
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--q", type=int, required=True)
    w.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("table", parents=[common], help="recompute the five WPS case rows")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="CSV of H(r,q,p) over a range of p")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--pmin", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--primes-only", action="store_true")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="run identity sweeps")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--pmax", type=int, default=50)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rec, text, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if rec is None:
        return code
    if getattr(args, "json", False):
        out = {"command": args.command, **_jsonable(rec)}
        if args.command == "index":
            out["space"] = args.space
        out["exit_code"] = code
        if not args.no_meta:
            out["timestamp"] = datetime.now(timezone.utc).isoformat()
        print(json.dumps(out, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
