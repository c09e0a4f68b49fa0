"""Command-line front end: ``pdwpf compute | verify | oracle``.

Exit codes: 0 success, 1 a verification case failed, 2 malformed input,
3 a mathematical precondition failed (the JSON carries its ``code``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import PreconditionError
from .exactnum import format_scalar, is_exact, parse_scalar

EXIT_OK, EXIT_FAILED, EXIT_MALFORMED, EXIT_PRECONDITION = 0, 1, 2, 3

ORACLE_FAMILIES = ("dwbc", "pdw-topsum", "pdw-split", "pdw-z2", "scalar-product")
OBJECTS = (
    "dwpf", "pdwpf-hybrid", "pdwpf-kostov", "pdwpf-sum", "pdwpf-trig-hybrid",
    "pdwpf-trig-kostov", "scalar-product", "zeta1", "zeta2", "tau", "gv-det",
    "oracle-count",
) + tuple(f"oracle-{f}" for f in ORACLE_FAMILIES)


class Malformed(ValueError):
    pass


def _scalars(text, flag):
    if text is None:
        return None
    if text.strip() == "":
        return []
    try:
        return [parse_scalar(t) for t in text.split(",")]
    except ValueError as exc:
        raise Malformed(f"{flag}: {exc}") from None


def _ints(text, flag):
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise Malformed(f"{flag}: expected comma-separated integers") from None


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise Malformed(f"--{name.replace('_', '-')} is required here")


def _scheme(args):
    from .sixvertex import POLYNOMIAL, RATIONAL, WeightScheme

    if args.scheme == "trigonometric":
        _need(args, "eg")
        return WeightScheme.trigonometric(_scalars(args.eg, "--eg")[0])
    return POLYNOMIAL if args.scheme == "polynomial" else RATIONAL


def _rapidities(args):
    """Row and column rapidities, multiplicative for the trigonometric scheme."""
    if args.scheme == "trigonometric":
        _need(args, "ex", "ey")
        return _scalars(args.ex, "--ex"), _scalars(args.ey, "--ey")
    _need(args, "x", "y")
    return _scalars(args.x, "--x"), _scalars(args.y, "--y")


def _echo(args):
    keys = ("scheme", "x", "y", "b", "ex", "ey", "eg", "family", "N", "n", "m",
            "source", "mult", "g2", "seed")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def _numeric(value):
    import mpmath

    return mpmath.nstr(mpmath.re(value), 17)


def _oracle(family, args):
    from .sixvertex import partition_function

    scheme = _scheme(args)
    xs, ys = _rapidities(args)
    bs = ()
    if family == "scalar-product":
        _need(args, "b")
        bs = _scalars(args.b, "--b")
    return partition_function(family, xs, ys, scheme, bs=bs, m=args.m)


def _count(args):
    from .sixvertex import BoundaryFamily, BoundarySpec, count_configurations

    _need(args, "family", "N")
    n = args.n if args.n is not None else args.N
    return Fraction(count_configurations(BoundarySpec(BoundaryFamily(args.family), n, args.N, args.m)))


def _scalar_product(args, out):
    from . import determinants as d

    scheme = _scheme(args)
    xs, ys = _rapidities(args)
    if args.b is not None:
        bs = _scalars(args.b, "--b")
        return d.slavnov_scalar_product(xs, bs, ys, scheme, tol=0)
    import mpmath

    with mpmath.workprec(d.BETHE_PREC):
        bs = d.bethe_solve_numeric(len(xs), ys, scheme, seed=args.seed)
        value = d.slavnov_scalar_product(xs, bs, ys, scheme)
        out["numeric"] = True
        out["bethe_roots"] = [mpmath.nstr(b, 17) for b in bs]
        out["imag"] = mpmath.nstr(mpmath.im(value), 5)
        return _numeric(value)


def compute(args):
    from . import determinants as d
    from .korepin import Variant, zeta

    obj = args.object
    out = {"object": obj, "inputs": _echo(args)}
    if obj == "dwpf":
        xs, ys = _rapidities(args)
        value = d.izergin_dwpf(xs, ys, _scheme(args))
    elif obj in ("pdwpf-hybrid", "pdwpf-kostov", "pdwpf-sum", "zeta1", "zeta2"):
        _need(args, "x", "y")
        xs, ys = _scalars(args.x, "--x"), _scalars(args.y, "--y")
        fn = {"pdwpf-hybrid": d.pdwpf_hybrid, "pdwpf-kostov": d.pdwpf_kostov,
              "pdwpf-sum": d.pdwpf_partition_sum,
              "zeta1": lambda a, b: zeta(Variant.ZETA1, a, b),
              "zeta2": lambda a, b: zeta(Variant.ZETA2, a, b)}[obj]
        value = fn(xs, ys)
    elif obj in ("pdwpf-trig-hybrid", "pdwpf-trig-kostov"):
        _need(args, "ex", "ey", "eg")
        fn = d.pdwpf_trig_hybrid if obj == "pdwpf-trig-hybrid" else d.pdwpf_trig_kostov
        value = fn(_scalars(args.ex, "--ex"), _scalars(args.ey, "--ey"), _scalars(args.eg, "--eg")[0])
    elif obj == "scalar-product":
        value = _scalar_product(args, out)
    elif obj == "tau":
        from .symfun import TauSpec, tau_value

        _need(args, "x", "y")
        xs, ys = _scalars(args.x, "--x"), _scalars(args.y, "--y")
        spec = (TauSpec.ik if args.source == "ik" else TauSpec.s)(xs, ys)
        mult = _ints(args.mult, "--mult") if args.mult else None
        value = tau_value(spec, mult)
    elif obj == "gv-det":
        from .gv import gv_pdwpf_det

        _need(args, "x", "N")
        g2 = _scalars(args.g2, "--g2")[0] if args.g2 else Fraction(0)
        value, (d0, d1) = gv_pdwpf_det(_scalars(args.x, "--x"), args.N, g2)
        out["g0"], out["g2_coefficient"] = format_scalar(d0), format_scalar(d1)
    elif obj == "oracle-count":
        value = _count(args)
    else:
        value = _oracle(obj[len("oracle-"):], args)
    out["value"] = format_scalar(value) if is_exact(value) else value
    return out, EXIT_OK


def oracle(args):
    _need(args, "family")
    if args.x is None and args.ex is None:
        out = {"object": "oracle-count", "inputs": _echo(args), "value": format_scalar(_count(args))}
    else:
        value = _oracle(args.family, args)
        out = {"object": f"oracle-{args.family}", "inputs": _echo(args), "value": format_scalar(value)}
    return out, EXIT_OK


def verify(args):
    from .verify import run_suite

    report = run_suite(args.suite, seed=args.seed, max_N=args.max_N)
    return report, EXIT_OK if report["passed"] else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(prog="pdwpf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--scheme", choices=("rational", "polynomial", "trigonometric"), default="rational")
        for flag in ("x", "y", "b", "ex", "ey", "eg"):
            p.add_argument(f"--{flag}", help="comma-separated p/q rationals")
        p.add_argument("--family", choices=ORACLE_FAMILIES)
        p.add_argument("--N", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", choices=("json", "text"), default="json")

    p = sub.add_parser("compute", help="evaluate one object")
    p.add_argument("--object", required=True, choices=OBJECTS)
    p.add_argument("--source", choices=("ik", "s"), default="ik", help="tau: which determinant form")
    p.add_argument("--mult", help="tau: comma-separated multiplicities")
    p.add_argument("--g2", help="gv-det: the coupling g^2")
    common(p)

    from .verify import SUITES

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-N", dest="max_N", type=int)
    common(p)

    p = sub.add_parser("oracle", help="brute-force lattice sum or configuration count")
    common(p)
    return parser


def _emit(doc, fmt, stream):
    if fmt == "text":
        if "cases" in doc:
            for c in doc["cases"]:
                stream.write(f"{'PASS' if c['pass'] else 'FAIL'} {c['id']} "
                             f"expected={c['expected']} actual={c['actual']}\n")
            stream.write(f"{doc['summary']['total'] - doc['summary']['failed']}/"
                         f"{doc['summary']['total']} passed\n")
        else:
            for key in sorted(doc):
                stream.write(f"{key}: {json.dumps(doc[key], sort_keys=True)}\n")
        return
    stream.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"compute": compute, "verify": verify, "oracle": oracle}[args.command]
    try:
        doc, code = handler(args)
    except PreconditionError as exc:
        doc, code = {"error": exc.code, "message": str(exc)}, EXIT_PRECONDITION
    except ZeroDivisionError as exc:
        doc, code = {"error": "division-by-zero", "message": str(exc)}, EXIT_PRECONDITION
    except ValueError as exc:
        doc, code = {"error": "malformed-input", "message": str(exc)}, EXIT_MALFORMED
    _emit(doc, args.output, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
