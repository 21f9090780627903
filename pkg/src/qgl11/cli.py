"""Command line entry points: normal forms, coproducts, pairing, reports."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .superalg import Element, TensorElement
from .scalars import QScalar
from .hopf import coproduct, coproduct_z, drinfeld_coproduct
from .pairing import gamma_from_element, pair_closed, pair_oracle
from .reps import rep_pi_a, rep_pi_cd, rep_rho, transfer_ops
from .rmatrix import evaluate_R
from .suites import Report, SUITE_NAMES, run_suite
from .dsl import (ParseError, format_element, format_scalar, format_tensor,
                  parse_element)


def _parse_rep(spec):
    """Representation from a spec string: rho | pi_a:A | pi_cd:C,D."""
    head, _, rest = spec.partition(":")
    if head == "rho":
        if rest:
            raise ValueError("rho takes no parameters")
        return rep_rho()
    if head == "pi_a":
        return rep_pi_a(Fraction(rest))
    if head == "pi_cd":
        c, _, d = rest.partition(",")
        return rep_pi_cd(Fraction(c), Fraction(d))
    raise ValueError(f"unknown representation {spec!r}"
                     " (expected rho, pi_a:A or pi_cd:C,D)")


def _parse_chain(text):
    sites = []
    for part in text.split(";"):
        part = part.strip().strip("()")
        if not part:
            continue
        c, _, d = part.partition(",")
        sites.append((Fraction(c), Fraction(d)))
    if not sites:
        raise ValueError("empty chain")
    return sites


def _fmt_scalar(c, q0=None):
    if q0 is not None:
        return str(c.specialize(q0))
    return format_scalar(c)


def _fmt_value(x, q0=None):
    if isinstance(x, TensorElement):
        return format_tensor(x)
    if isinstance(x, Element):
        return format_element(x)
    return _fmt_scalar(x, q0)


def _print_tensor_series(series, out):
    for d in range(series.lo, series.hi + 1):
        c = series.coeff(d)
        if c.is_zero():
            continue
        out.write(f"z^{d}: {format_tensor(c)}\n")


def _print_matrix_series(series, out, q0=None):
    for d in range(series.lo, series.hi + 1):
        m = series.coeff(d)
        out.write(f"z^{d}:\n")
        for row in m.rows:
            out.write("  [" + ", ".join(_fmt_scalar(e, q0) for e in row) + "]\n")


def _cmd_nf(args):
    val = parse_element(args.expr)
    print(_fmt_value(val, args.q))
    return 0


def _cmd_coproduct(args):
    val = parse_element(args.expr)
    if not isinstance(val, Element):
        raise ValueError("coproduct expects a plain (non-tensor) expression")
    if args.drinfeld:
        series = drinfeld_coproduct(val, args.order)
        _print_tensor_series(series, sys.stdout)
        return 0
    if args.z:
        _print_tensor_series(coproduct_z(val, flipped=args.cop), sys.stdout)
        return 0
    dv = coproduct(val)
    if args.cop:
        dv = dv.flip()
    print(format_tensor(dv))
    return 0


def _cmd_pair(args):
    a = parse_element(args.a)
    b = parse_element(args.b)
    if not isinstance(a, Element) or not isinstance(b, Element):
        raise ValueError("pairing expects plain (non-tensor) expressions")
    if args.closed:
        ka, f = gamma_from_element(a, "a")
        kb, g = gamma_from_element(b, "b")
        val = pair_closed(ka, f, kb, g)
    else:
        val = pair_oracle(a, b)
    print(_fmt_scalar(val, args.q))
    return 0


def _cmd_rmatrix(args):
    repL = _parse_rep(args.left)
    repR = _parse_rep(args.right)
    try:
        series = evaluate_R(repL, repR, args.order, strict=True)
    except ValueError:
        series = evaluate_R(repL, repR, args.order, strict=False)
        print("note: coupled prefactors; a global projective factor is dropped",
              file=sys.stderr)
    _print_matrix_series(series, sys.stdout, args.q)
    return 0


def _report_out(report, args):
    text = report.to_json() if args.format == "json" else report.to_text()
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.ok else 1


def _cmd_transfer(args):
    import time
    t0 = time.monotonic()
    chain = _parse_chain(args.chain)
    *_blocks, notes = transfer_ops(Fraction(args.a), chain, args.order)
    checks = [(n, "pass" if ok else "fail", w or ("" if ok else "check failed"))
              for n, ok, w in notes]
    params = {"a": str(Fraction(args.a)),
              "chain": [[str(c), str(d)] for c, d in chain]}
    ms = int((time.monotonic() - t0) * 1000)
    return _report_out(Report("transfer", args.order, params, checks, ms), args)


def _cmd_baxter(args):
    chain = _parse_chain(args.chain)
    params = {"a": Fraction(args.a),
              "chains": [[list(site) for site in chain]]}
    report = run_suite("baxter", order=args.order, seed=args.seed, params=params)
    return _report_out(report, args)


def _cmd_verify(args):
    params = dict(args.config.get("params", {}))
    if args.q is not None:
        params["q"] = str(args.q)
    report = run_suite(args.suite, order=args.order, seed=args.seed,
                       params=params)
    return _report_out(report, args)


def _add_common(p, order_default=None):
    p.add_argument("--order", type=int, default=None,
                   help="truncation order in z")
    p.add_argument("--seed", type=int, default=None, help="sampling seed")
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(order_default=order_default)


def build_parser():
    ap = argparse.ArgumentParser(prog="qgl11",
                                 description="Exact computations in the quantum"
                                 " affine superalgebra of type gl(1|1)")
    ap.add_argument("--config", help="JSON file with preset options")
    ap.add_argument("--q", type=Fraction, default=None,
                    help="print scalars at a rational value of q"
                    " (verification itself stays symbolic)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal-ordered form of an expression")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_nf)

    p = sub.add_parser("coproduct", help="coproduct of an expression")
    p.add_argument("expr")
    p.add_argument("--z", action="store_true", help="z-graded form, by degree")
    p.add_argument("--cop", action="store_true", help="flipped (opposite) form")
    p.add_argument("--drinfeld", action="store_true",
                   help="loop-graded twisted form")
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=_cmd_coproduct, order_default=4)

    p = sub.add_parser("pair", help="Hopf pairing of two expressions")
    p.add_argument("a")
    p.add_argument("b")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oracle", action="store_true",
                   help="recursive evaluation (default)")
    g.add_argument("--closed", action="store_true",
                   help="closed orthogonality formula (basis words only)")
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("rmatrix", help="R-matrix series on a representation pair")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=_cmd_rmatrix, order_default=4)

    p = sub.add_parser("transfer", help="transfer operator blocks on a chain")
    p.add_argument("--a", default="1", help="auxiliary parameter")
    p.add_argument("--chain", required=True, help='sites as "(2,3);(3,5)"')
    _add_common(p, order_default=6)
    p.set_defaults(fn=_cmd_transfer)

    p = sub.add_parser("baxter", help="degree bounds for normalized blocks")
    p.add_argument("--a", default="1", help="auxiliary parameter")
    p.add_argument("--chain", required=True, help='sites as "(2,3);(3,5)"')
    _add_common(p, order_default=8)
    p.set_defaults(fn=_cmd_baxter)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_verify)
    return ap


def _load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config must be a JSON object")
    return data


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    config = _load_config(args.config) if args.config else {}
    # explicit flags win; config fills the rest; then built-in defaults
    for key in ("order", "seed", "format", "suite", "q"):
        if getattr(args, key, False) is None and key in config:
            setattr(args, key, config[key])
    if getattr(args, "order", False) is None:
        args.order = args.order_default
    if getattr(args, "seed", False) is None:
        args.seed = 0
    if getattr(args, "format", False) is None:
        args.format = "json"
    if args.q is not None and not isinstance(args.q, Fraction):
        args.q = Fraction(str(args.q))
    if getattr(args, "suite", False) is None and args.fn is _cmd_verify:
        ap.error("verify needs --suite (or a config file naming one)")
    args.config = config
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
