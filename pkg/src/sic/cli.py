"""Command-line front end.

Subcommands: `bounds` (rate-bound tables), `construct` (build and save a
binary-expanded shortened RS code), `verify` (run a property checker on a
matrix file), `search` (minimum-length parameter search), and `examples`
(three built-in construction/verification walkthroughs).

Exit codes: 0 success/satisfied, 1 property fails or search infeasible,
2 usage or file errors, 3 enumeration budget exceeded.  Data goes to
stdout, diagnostics to stderr.  All output is deterministic for identical
invocations; SIC_BUDGET overrides the default row-scan budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as B
from . import verify as V
from .codes import binary_expand, rs_extended, search_params, shorten
from .errors import BudgetExceeded, SicError
from .fields import FiniteField
from .matrixfile import read_matrix, write_matrix

BOUND_KINDS = (
    "recurrent-upper", "nonrecurrent-upper", "upper-zu", "lower-zu",
    "lower-z1", "universal-upper", "threshold-lower-simple",
    "threshold-lower", "asymptotic",
)

EXAMPLE_SPECS = (
    (5, 5, 2, 125, 20, 4, [(3, 2)], []),
    (7, 6, 3, 343, 35, 5, [(4, 2)], []),
    (8, 5, 2, 512, 56, 7, [(6, 2), (10, 3)], [(11, 3)]),
)


def _parse_range(text: str, name: str) -> list[int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise SicError(f"bad {name} range {text!r}; use an int or LO:HI") from None


def _fmt_value(v: float) -> str:
    return f"{v:.6f}"


def _fmt_witness(opt: dict | None) -> str:
    if not opt:
        return ""
    parts = []
    for key, val in opt.items():
        if isinstance(val, float):
            parts.append(f"{key}={val:.12g}")
        else:
            parts.append(f"{key}={val}")
    return ";".join(parts)


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2), file=out)
        return
    if fmt == "csv":
        print("kind,z,u,s,l,value,witness,note", file=out)
        for r in rows:
            cells = [r["kind"]]
            for key in ("z", "u", "s", "l"):
                cells.append("" if r.get(key) is None else str(r[key]))
            cells.append(f"{r['value']:.12g}")
            cells.append(_fmt_witness(r.get("optimizer")))
            cells.append(r.get("note") or "")
            print(",".join(cells), file=out)
        return
    for r in rows:
        parts = [r["kind"]]
        for key in ("z", "u", "s", "l"):
            if r.get(key) is not None:
                parts.append(f"{key}={r[key]}")
        parts.append(f"value={_fmt_value(r['value'])}")
        if r.get("reciprocal") is not None:
            parts.append(f"reciprocal={r['reciprocal']:.4f}")
        wit = _fmt_witness(r.get("optimizer"))
        if wit:
            parts.append(f"witness[{wit}]")
        if r.get("note"):
            parts.append(f"({r['note']})")
        print(" ".join(parts), file=out)


def _rate_row(kind, value, *, z=None, u=None, s=None, l=None, optimizer=None,
              note=None, reciprocal=None):
    row = {"kind": kind, "z": z, "u": u, "s": s, "l": l, "value": value,
           "optimizer": optimizer, "note": note}
    if reciprocal is not None:
        row["reciprocal"] = reciprocal
    return row


def _cmd_bounds(args) -> int:
    kind = args.kind
    rows: list[dict] = []

    def need(flag, name):
        if flag is None:
            raise SicError(f"kind {kind!r} needs --{name}")
        return _parse_range(flag, name)

    def single(flag, name):
        return None if flag is None else _parse_range(flag, name)[0]
    if kind == "recurrent-upper":
        seq = B.recurrent_upper(args.z_max)
        for z, val in enumerate(seq, start=1):
            rows.append(_rate_row(kind, val, z=z, reciprocal=1.0 / val))
    elif kind == "nonrecurrent-upper":
        for z in need(args.z, "z"):
            rows.append(_rate_row(kind, B.nonrecurrent_upper(z), z=z))
    elif kind == "upper-zu":
        for z in need(args.z, "z"):
            for u in need(args.u, "u"):
                rb = B.upper_zu(z, u)
                rows.append(_rate_row(kind, rb.value, z=z, u=u,
                                      optimizer=rb.optimizer, note=rb.note))
    elif kind == "lower-zu":
        for z in need(args.z, "z"):
            for u in need(args.u, "u"):
                rows.append(_rate_row(kind, B.lower_zu(z, u), z=z, u=u))
    elif kind == "lower-z1":
        for z in need(args.z, "z"):
            rb = B.lower_z1(z)
            rows.append(_rate_row(kind, rb.value, z=z, optimizer=rb.optimizer,
                                  note=rb.note))
    elif kind == "universal-upper":
        for l in need(args.l, "l"):
            for s in need(args.s, "s"):
                rows.append(_rate_row(kind, B.universal_upper(l, s), s=s, l=l))
    elif kind == "threshold-lower-simple":
        for u in need(args.u, "u"):
            for s in need(args.s, "s"):
                rows.append(_rate_row(kind, B.threshold_lower_simple(u, s), u=u, s=s))
    elif kind == "threshold-lower":
        for u in need(args.u, "u"):
            for s in need(args.s, "s"):
                rb = B.threshold_lower(u, s)
                rows.append(_rate_row(kind, rb.value, u=u, s=s, optimizer=rb.optimizer))
    elif kind == "asymptotic":
        if args.form is None:
            raise SicError("kind 'asymptotic' needs --form")
        z, u, s = single(args.z, "z"), single(args.u, "u"), single(args.s, "s")
        value = B.asymptotic_rate(args.form, z=z, u=u, s=s)
        rows.append(_rate_row(f"asymptotic:{args.form}", value, z=z, u=u, s=s))
    _emit_rows(rows, args.format, sys.stdout)
    return 0


def _cmd_construct(args) -> int:
    field = FiniteField(args.q)
    qary = shorten(rs_extended(field, args.k), args.r)
    code = binary_expand(qary)
    lam = args.k - args.r - 1
    print(f"t={code.t} N={code.N} w={code.weight} lambda={lam}")
    write_matrix(code, args.out,
                 comments=[f"q={args.q} k={args.k} r={args.r} lambda={lam}"])
    return 0


def _format_witness_indices(witness: dict) -> str:
    def fmt(val):
        if isinstance(val, tuple):
            return ",".join(map(str, val)) if val else "-"
        return str(val)

    names = {"Pprime": "P'"}
    return " ".join(f"{names.get(k, k)}={fmt(v)}" for k, v in witness.items())


def _cmd_verify(args, budget: int) -> int:
    code = read_matrix(args.path)
    prop = args.prop
    params = args.params

    def ints(n):
        if len(params) < n:
            raise SicError(f"property {prop!r} needs {n} integer parameters")
        try:
            return [int(x) for x in params[:n]]
        except ValueError:
            raise SicError(f"bad integer parameters {params[:n]}") from None

    if prop == "cover-free":
        z, u = ints(2)
        report = V.check_cover_free(code, z, u, budget=budget)
    elif prop == "d-code":
        s, l = ints(2)
        report = V.check_d_code(code, s, l, budget=budget)
    elif prop == "d-cert":
        s, l = ints(2)
        ok = V.check_d_certificate(code, s, l)
        print("certified" if ok else "not certified")
        return 0 if ok else 1
    elif prop == "m-code":
        s, u = ints(2)
        report = V.check_m_code(code, s, u, budget=budget)
    elif prop == "design":
        l, s = ints(2)
        if len(params) < 3:
            raise SicError("design needs: l s mode [labels...]")
        mode = params[2]
        labels = params[3:]
        if labels:
            try:
                F = V.OutcomeFunction(values=tuple(int(x) for x in labels))
            except ValueError:
                raise SicError(f"bad outcome labels {labels}") from None
            if F.l != l:
                raise SicError(f"{len(labels)} labels inconsistent with l={l}")
        else:
            F = V.OutcomeFunction.saturating(l)
        report = V.check_design(code, F, s, mode=mode, budget=budget)
    elif prop == "threshold":
        u, s = ints(2)
        report = V.check_threshold_design(code, u, s, budget=budget)
    elif prop == "threshold-bar":
        u, s = ints(2)
        report = V.check_threshold_bar_design(code, u, s, budget=budget)
    else:
        raise SicError(f"unknown property {prop!r}")

    if report.satisfied:
        print(f"satisfied (tuples checked: {report.tuples_checked})")
        return 0
    print("not satisfied")
    print(f"witness: {_format_witness_indices(report.witness)}")
    return 1


def _cmd_search(args) -> int:
    params = search_params(args.s, args.m, q_max=args.q_max)
    if params is None:
        print(f"no feasible parameters for s={args.s} m={args.m} q_max={args.q_max}")
        return 1
    print(f"q={params.q} lambda={params.lam} N={params.N} "
          f"w={params.w} r={params.r} k={params.k} t={params.t}")
    return 0


def _cmd_examples(budget: int) -> int:
    all_ok = True
    confirmed = []
    for num, (q, k, r, t, N, w, pairs, negatives) in enumerate(EXAMPLE_SPECS, start=1):
        from .codes import strength_feasible
        qary = shorten(rs_extended(FiniteField(q), k), r)
        code = binary_expand(qary)
        lam = k - r - 1
        params_ok = (code.t, code.N, code.weight) == (t, N, w)
        coin = V.coincidence(qary)
        coin_ok = coin == lam
        all_ok &= params_ok and coin_ok
        print(f"code {num}: q={q} k={k} r={r} -> t={code.t} N={code.N} "
              f"w={code.weight} coincidence={coin} "
              f"[{'ok' if params_ok and coin_ok else 'MISMATCH'}]")
        for s, l in pairs:
            feas = strength_feasible(q, k, r, s, l)
            cert = V.check_d_certificate(code, s, l)
            all_ok &= feas and cert
            print(f"  feasibility s={s} l={l}: {'ok' if feas else 'VIOLATED'}; "
                  f"certificate: {'PASS' if cert else 'FAIL'}")
            scans = V.d_code_scans(code.t, s, code.N)
            if scans <= budget:
                rep = V.check_d_code(code, s, l, budget=budget)
                all_ok &= rep.satisfied
                print(f"  exhaustive d-code s={s} l={l}: "
                      f"{'PASS' if rep.satisfied else 'FAIL'} "
                      f"({rep.tuples_checked} tuples)")
            else:
                print(f"  exhaustive d-code s={s} l={l}: SKIPPED "
                      f"({scans} row scans over budget)")
            confirmed.append(f"t({code.N},{s},{l})>={code.t}")
        for s, l in negatives:
            cert = V.check_d_certificate(code, s, l)
            all_ok &= not cert
            print(f"  certificate s={s} l={l}: "
                  f"{'FAIL (expected)' if not cert else 'PASS (unexpected)'}")
    print("size bounds confirmed: " + " ".join(confirmed))
    print("all checks passed" if all_ok else "CHECKS FAILED")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sic",
        description="Constant-weight superimposed codes and group-testing "
                    "designs: construction, verification, rate bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="compute rate bounds")
    p_bounds.add_argument("kind", choices=BOUND_KINDS)
    p_bounds.add_argument("--z", help="int or LO:HI")
    p_bounds.add_argument("--u", help="int or LO:HI")
    p_bounds.add_argument("--s", help="int or LO:HI")
    p_bounds.add_argument("--l", help="int or LO:HI")
    p_bounds.add_argument("--z-max", type=int, default=17,
                          help="last z of the recurrent sequence")
    p_bounds.add_argument("--form", choices=B.ASYMPTOTIC_KINDS,
                          help="formula selector for kind=asymptotic")
    p_bounds.add_argument("--format", choices=("table", "csv", "json"),
                          default="table")

    p_con = sub.add_parser("construct", help="build a binary-expanded shortened RS code")
    p_con.add_argument("q", type=int)
    p_con.add_argument("k", type=int)
    p_con.add_argument("r", type=int)
    p_con.add_argument("out")

    p_ver = sub.add_parser("verify", help="check a property of a stored matrix")
    p_ver.add_argument("path")
    p_ver.add_argument("prop", choices=("cover-free", "d-code", "d-cert", "m-code",
                                        "design", "threshold", "threshold-bar"))
    p_ver.add_argument("params", nargs="*",
                       help="property parameters, e.g. 'cover-free 2 1', "
                            "'design 2 3 at-most [labels...]'")
    p_ver.add_argument("--budget", type=int, default=None,
                       help="row-scan budget (default SIC_BUDGET or 10^9)")

    p_search = sub.add_parser("search", help="minimum-length parameter search")
    p_search.add_argument("s", type=int)
    p_search.add_argument("m", type=int)
    p_search.add_argument("--q-max", type=int, default=64)

    p_ex = sub.add_parser("examples", help="built-in construction walkthroughs")
    p_ex.add_argument("--budget", type=int, default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    env_budget = os.environ.get("SIC_BUDGET")
    budget = V.DEFAULT_BUDGET if env_budget is None else int(env_budget)
    if getattr(args, "budget", None) is not None:
        budget = args.budget
    try:
        if args.command == "bounds":
            return _cmd_bounds(args)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args, budget)
        if args.command == "search":
            return _cmd_search(args)
        if args.command == "examples":
            return _cmd_examples(budget)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
