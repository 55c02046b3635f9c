"""
Command line interface.

Exit codes: 0 success, 1 input error, 2 a verdict or comparison came out
false, 3 a Gröbner computation ran out of budget.
"""

import argparse
import sys

from .errors import JetClassError, ResourceExhaustedError
from .gln import TruncatedSeriesMatrix, contact_profile, normal_form, verify_conjecture_case
from .groebner import Ideal, saturate
from .jets import jet_ideal, lct_estimate
from .multidegree import ideal_multidegree
from .parsing import parse_grading, parse_ideal_text, parse_polynomials
from .algebra import TermOrder
from .reproduce import DEFAULT_CUSP_GRADING, DEFAULT_SEED, reproduce_paper
from .toric import Fan, locate_cone, monomial_of_point, pl_value, refinement_compare, sr_ideal

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FALSE = 2
EXIT_BUDGET = 3

_ORDERS = {"grevlex": TermOrder.grevlex, "lex": TermOrder.lex}


def _point(text):
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _matrix(args):
    if args.file:
        with open(args.file) as fh:
            return TruncatedSeriesMatrix.parse(fh.read())
    return TruncatedSeriesMatrix.parse(args.text)


def _lines(*items):
    return "\n".join(str(x) for x in items) + "\n"


# -- commands -------------------------------------------------------------------


def cmd_jet_equations(args, out):
    I = Ideal(parse_ideal_text(args.ideal))
    J = jet_ideal(I, args.order)
    out.write(_lines(*J.generators))
    return EXIT_OK


def cmd_multidegree(args, out):
    I = Ideal(parse_ideal_text(args.ideal))
    grading = parse_grading(args.grading, I.ring)
    cls = ideal_multidegree(I, grading, _ORDERS[args.order](), budget=args.budget)
    out.write(_lines(cls))
    return EXIT_OK


def cmd_saturate(args, out):
    gens_text = [p for p in args.ideal.split(",") if p.strip()]
    by_text = [p for p in args.by.split(",") if p.strip()]
    polys = parse_polynomials(gens_text + by_text)
    ring = polys[0].ring
    I = Ideal(polys[: len(gens_text)], ring)
    J = Ideal(polys[len(gens_text):], ring)
    S = saturate(I, J, args.budget)
    out.write(_lines(*S.generators) if S.generators else "0\n")
    if args.grading:
        out.write(_lines(f"class {ideal_multidegree(S, parse_grading(args.grading, ring), budget=args.budget)}"))
    return EXIT_OK


def cmd_lct(args, out):
    I = Ideal(parse_ideal_text(args.ideal))
    est = lct_estimate(I, args.dim, args.max_order, args.divisible, budget=args.budget)
    out.write(_lines(est, "dims " + " ".join(map(str, est.dimensions))))
    return EXIT_OK


def cmd_toric_check(args, out):
    fan = Fan.load(args.fan)
    if args.canonical:
        out.write(fan.dumps())
        return EXIT_OK
    sr = sr_ideal(fan)
    out.write(_lines(
        f"rank={fan.rank} rays={fan.nrays} cones={len(fan.cones)} smooth={'yes' if fan.smooth else 'no'}",
        "sr=(" + ", ".join(str(g) for g in sr.generators) + ")",
    ))
    if args.point is not None:
        loc = locate_cone(fan, args.point)
        line = f"cone={loc.cone} rays={','.join(map(str, loc.rays))} coefficients={','.join(map(str, loc.coefficients))}"
        if fan.smooth:
            line += f" monomial={monomial_of_point(fan, args.point)} pl={pl_value(fan, args.point)}"
        out.write(_lines(line))
    return EXIT_OK


def cmd_toric_refine(args, out):
    result = refinement_compare(Fan.load(args.fine), Fan.load(args.coarse), args.point)
    out.write(_lines(result))
    return EXIT_OK


def cmd_gln_profile(args, out):
    out.write(_lines(contact_profile(_matrix(args))))
    return EXIT_OK


def cmd_gln_normal_form(args, out):
    out.write(_lines(normal_form(_matrix(args))))
    return EXIT_OK


def cmd_verify_conjecture(args, out):
    # a false verdict outranks a budget hit
    statuses = set()
    for mult in args.m:
        verdict = verify_conjecture_case(args.n, mult, args.budget)
        out.write(_lines(verdict.summary()))
        statuses.add(verdict.status)
    if statuses - {"EQUAL", "BUDGET"}:
        return EXIT_FALSE
    return EXIT_BUDGET if "BUDGET" in statuses else EXIT_OK


def cmd_reproduce_paper(args, out):
    report = reproduce_paper(args.budget, args.seed, args.cusp_grading, args.stretch)
    text = report.to_tsv()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    if report.failures:
        sys.stderr.write(report.diff() + "\n")
    return report.exit_code()


# -- parser ---------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jetclasses",
        description="Equivariant classes of jet schemes and contact loci.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def budget(p):
        p.add_argument("--budget", type=int, default=None, help="maximum number of S-pairs per Gröbner basis")

    p = sub.add_parser("jet-equations", help="prolonged equations of the m-th jet scheme")
    p.add_argument("--ideal", required=True, help="comma-separated generators")
    p.add_argument("--order", "-m", type=int, required=True, help="jet order m")
    p.set_defaults(func=cmd_jet_equations)

    p = sub.add_parser("multidegree", help="multidegree of a homogeneous ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--grading", required=True, help='e.g. "x:2;y:3" or "a11:1,0;a21:0,1"')
    p.add_argument("--order", choices=sorted(_ORDERS), default="grevlex", help="term order for the degeneration")
    budget(p)
    p.set_defaults(func=cmd_multidegree)

    p = sub.add_parser("saturate", help="saturation I : J^inf")
    p.add_argument("--ideal", required=True)
    p.add_argument("--by", required=True, help="generators of J")
    p.add_argument("--grading", help="also print the multidegree of the result")
    budget(p)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("lct", help="log canonical threshold estimate from jet dimensions")
    p.add_argument("--ideal", required=True)
    p.add_argument("--dim", type=int, default=None, help="ambient dimension d (default: number of variables)")
    p.add_argument("--max-order", type=int, required=True, help="largest jet order M")
    p.add_argument("--divisible", action="store_true", help="assert that the range contains a sufficiently divisible m")
    budget(p)
    p.set_defaults(func=cmd_lct)

    p = sub.add_parser("toric-check", help="validate a fan file and print its Stanley-Reisner ideal")
    p.add_argument("fan", help="fan file (JSON)")
    p.add_argument("--point", type=_point, help="locate a lattice point, e.g. --point=-2,-1")
    p.add_argument("--canonical", action="store_true", help="print the canonical serialization instead")
    p.set_defaults(func=cmd_toric_check)

    p = sub.add_parser("toric-refine", help="compare piecewise linear functions of a refinement")
    p.add_argument("--fine", required=True)
    p.add_argument("--coarse", required=True)
    p.add_argument("--point", type=_point, required=True)
    p.set_defaults(func=cmd_toric_refine)

    for name, func, text in (
        ("gln-profile", cmd_gln_profile, "contact profile of a matrix jet"),
        ("gln-normal-form", cmd_gln_normal_form, "normal form of a matrix jet under row operations"),
    ):
        p = sub.add_parser(name, help=text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--file", help="matrix file with an m= header")
        src.add_argument("--text", help='inline matrix, e.g. "m=3; t+t^2, 1+2*t; t, 1+t^2"')
        p.set_defaults(func=func)

    p = sub.add_parser("verify-conjecture", help="compare contact classes with products of Chern classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=_point, action="append", required=True, help="multiplicities, e.g. 1,1 (repeatable)")
    budget(p)
    p.set_defaults(func=cmd_verify_conjecture)

    p = sub.add_parser("reproduce-paper", help="recompute every worked value and print a TSV report")
    budget(p)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--cusp-grading", default=DEFAULT_CUSP_GRADING, help="grading for the cusp rows")
    p.add_argument("--stretch", action="store_true", help="include the larger optional cases")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_reproduce_paper)
    return parser


def run(argv=None, out=None):
    """Parse ``argv`` and run one command; returns the exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ResourceExhaustedError as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except (JetClassError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
