"""Command-line interface: ``ratconfig <command> ...``.

Exit status is 0 when the computation completed (absent results included),
1 when a mathematical precondition fails, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import format_rational, parse_rational
from .configmap import phi
from .curves import Matrix, WPoint, classify_fiber, h_discriminant, is_degenerate
from .elliptic import (VERDICT_ORDER, classify_minus1_point, e_rs, minus1_point,
                       multiples)
from .local import census_box
from .reduction import reduce_to_triangular
from .three_distance import rho, sum_decompose, three_product, three_sum

EXIT_PRECONDITION = 1
EXIT_USAGE = 2


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _matrix(text):
    try:
        return Matrix.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _point(text):
    try:
        return WPoint.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(obj: dict, as_json: bool, text: str, out) -> None:
    if as_json:
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def cmd_classify(args, out):
    fc = classify_fiber(args.eta)
    obj = {"eta": str(args.eta), "class": fc.tag,
           "lambda": None if fc.lam is None else format_rational(fc.lam),
           "discriminant": format_rational(h_discriminant(args.eta))}
    _emit(obj, args.json, str(fc), out)


def cmd_reduce(args, out):
    w = reduce_to_triangular(args.eta, args.point)
    obj = {"r": format_rational(w.r), "s": format_rational(w.s), "r1": str(w.r1),
           "r2": str(w.r2), "scale": format_rational(w.scale)}
    text = "\n".join(f"{k} = {v}" for k, v in obj.items())
    _emit(obj, args.json, text, out)


def cmd_torsion(args, out):
    verdict = classify_minus1_point(args.r, args.s)
    order = VERDICT_ORDER[verdict]
    chain = []
    if order is not None:
        C = e_rs(args.r, args.s)
        chain = [str(P) for P in multiples(C, minus1_point(args.r), order)]
    obj = {"r": format_rational(args.r), "s": format_rational(args.s),
           "verdict": verdict, "chain": chain}
    text = verdict
    if chain:
        text += "\n" + "\n".join(f"{k}P = {P}" for k, P in enumerate(chain, start=1))
    _emit(obj, args.json, text, out)


def cmd_verify(args, out):
    a1, a2 = phi(args.eta, args.point)
    degenerate = is_degenerate(args.eta, args.point)
    obj = {"alpha1": [a1.u, a1.v], "alpha2": [a2.u, a2.v],
           "hyp1": format_rational(a1.hyp), "hyp2": format_rational(a2.hyp),
           "degenerate": degenerate}
    text = (f"alpha1 = {a1}  sqrt(u^2+v^2) = {format_rational(a1.hyp)}\n"
            f"alpha2 = {a2}  sqrt(u^2+v^2) = {format_rational(a2.hyp)}\n"
            f"degenerate = {degenerate}")
    _emit(obj, args.json, text, out)


def cmd_three_distance(args, out):
    if abs(args.n_max) > args.n_cap:
        raise ValueError(f"|n-max| = {abs(args.n_max)} exceeds --n-cap {args.n_cap}")
    for n in range(args.n_min, args.n_max + 1):
        sol = rho(n, args.t)
        if sol is None:
            if args.json:
                out.write(json.dumps({"t": format_rational(args.t), "n": n, "defined": False},
                                     sort_keys=True) + "\n")
            else:
                out.write(f"n={n}: undefined\n")
            continue
        obj = sol.as_json()
        text = (f"n={n}: ({obj['x']}, {obj['y']})  d = {obj['d1']}, {obj['d2']}, {obj['d3']}")
        _emit(obj, args.json, text, out)


def cmd_decompose(args, out):
    if args.mode == "sum":
        tuples = sum_decompose(args.target, args.count)
    elif args.mode == "three-sum":
        tuples = three_sum(args.target, args.count)
    else:
        tuples = three_product(args.target, args.count)
    from .arith import is_rational_square

    for tup in tuples:
        obj = {"mode": args.mode, "target": format_rational(args.target),
               "slopes": [format_rational(x) for x in tup],
               "witnesses": [format_rational(is_rational_square(x * x + 1)) for x in tup]}
        _emit(obj, args.json, "  ".join(obj["slopes"]), out)


def cmd_census(args, out):
    def on_record(rec):
        if args.records:
            _emit(rec.as_json(), True, "", out)

    summary = census_box(args.x, args.prime_bound, args.k_max, args.sample, args.seed,
                         on_record=on_record)
    obj = summary.as_json()
    text = (f"X={summary.X} mode={summary.mode} seed={summary.seed} "
            f"invertible={summary.invertible} candidates={summary.candidates} "
            f"survivor_fraction={summary.survivor_fraction:.6f}")
    _emit(obj, args.json, text, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON lines")
    parser = argparse.ArgumentParser(prog="ratconfig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--eta", type=_matrix, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", parents=[common])
    p.add_argument("--eta", type=_matrix, required=True)
    p.add_argument("--point", type=_point, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("torsion", parents=[common])
    p.add_argument("--r", type=_rational, required=True)
    p.add_argument("--s", type=_rational, required=True)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--eta", type=_matrix, required=True)
    p.add_argument("--point", type=_point, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("three-distance", parents=[common])
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-cap", type=int, default=64, help="refuse |n| beyond this")
    p.set_defaults(func=cmd_three_distance)

    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("--mode", choices=["sum", "three-sum", "three-product"], required=True)
    p.add_argument("--target", type=_rational, required=True)
    p.add_argument("--count", type=int, default=3)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("census", parents=[common])
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--prime-bound", type=int, default=50)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--no-records", dest="records", action="store_false",
                   help="print only the summary line")
    p.set_defaults(func=cmd_census)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        args.func(args, out)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return 0


def main() -> None:
    sys.exit(run())
