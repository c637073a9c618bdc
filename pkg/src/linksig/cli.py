"""Command-line front end.

Subcommands mirror the library surface: braid invariants, the parametric
families, splice-diagram evaluation, the cyclic-polynomial systems, the
closed-form signatures, randomized verification of the generalized skein
relations, and the curve prohibition reports.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .braid import BraidWord, FamilyParams, family_b, family_c
from .closedforms import FormulaNotEstablished, sign_null_b, sign_null_c
from .genskein import (RelationSpec, block_identity_residual,
                       det_relation_check, random_braid, random_laurent,
                       relation_residual)
from .laurent import LaurentPolynomial
from .prohibit import CurveParams, verdict_curve, verdict_degree9
from .seifert import invariants_report, signature_nullity
from .skeinpoly import a_pm, a_pm_symbolic, family_det_closed_form
from .splice import SpliceDiagram


def _parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _cmd_invariants(args) -> int:
    word = BraidWord.from_text(args.strands, args.word)
    print(json.dumps(invariants_report(word), indent=2))
    return 0


def _cmd_family(args) -> int:
    params = FamilyParams(args.n, args.k, args.J, tuple(_parse_ints(args.alpha)))
    word = family_b(params) if args.kind == "b" else family_c(params)
    print(word.to_text())
    return 0


def _cmd_splice(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        diagram = SpliceDiagram.from_json(json.load(fh))
    if args.multivariable:
        nabla = diagram.nabla_multivariable()
        out = {"sign": nabla.sign, "factors": nabla.describe(),
               "det": str(nabla.det())}
    else:
        omega = diagram.nabla_multivariable().omega()
        out = {"omega": str(omega), "omega_coeffs": omega.to_json(),
               "det": str(omega.eval_at_i())}
    print(json.dumps(out, indent=2))
    return 0


def _cmd_skeinpoly(args) -> int:
    if args.symbolic:
        poly = a_pm_symbolic(args.J, 1 if args.sign == "+" else -1)
        terms = {"*".join(f"x{j}" for j in sorted(s)) or "1": str(c)
                 for s, c in poly.coeffs}
        print(json.dumps(terms, indent=2))
        return 0
    xs = _parse_ints(args.x)
    print(a_pm(args.J, 1 if args.sign == "+" else -1, xs))
    return 0


def _cmd_closedform(args) -> int:
    alphas = _parse_ints(args.alpha)
    fn = sign_null_b if args.kind == "b" else sign_null_c
    out: dict = {}
    try:
        sn = fn(args.n, args.k, args.J, alphas)
        out["sign"] = sn.sign
        out["null"] = sn.null
    except FormulaNotEstablished as exc:
        out["closed_form"] = f"not established: {exc}"
        if not args.explore:
            print(json.dumps(out, indent=2))
            return 1
    out["det"] = str(family_det_closed_form(args.kind, args.n, args.k,
                                            args.J, alphas)) \
        if args.kind == "b" or args.n % 4 != 0 else None
    if args.verify or args.explore:
        params = FamilyParams(args.n, args.k, args.J, tuple(alphas))
        word = family_b(params) if args.kind == "b" else family_c(params)
        sign, null = signature_nullity(word)
        out["direct"] = {"sign": sign, "null": null}
        if "sign" in out and out["sign"] is not None:
            out["verified"] = (out["sign"], out["null"]) == (sign, null)
    print(json.dumps(out, indent=2))
    return 0


def _cmd_skein(args) -> int:
    rng = random.Random(args.seed)
    failures = 0
    for trial in range(args.trials):
        if args.relation == "blocks":
            s = rng.randint(0, 3)
            v0 = [[random_laurent(rng) for _ in range(s)] for _ in range(s)]
            u = [[random_laurent(rng) for _ in range(2)] for _ in range(s)]
            ustar = [[random_laurent(rng) for _ in range(s)] for _ in range(2)]
            w = [[random_laurent(rng) for _ in range(2)] for _ in range(2)]
            residual = block_identity_residual(v0, u, w, ustar)
            if not residual.is_zero():
                failures += 1
                print(f"trial {trial}: nonzero block residual {residual}")
            continue
        word = random_braid(rng, args.strands, args.maxlen)
        if args.relation == "conway":
            from .seifert import conway_potential
            if not word.letters:
                continue
            pos = rng.randrange(len(word.letters))
            j = abs(word.letters[pos])
            with_pos = BraidWord(word.strands,
                                 word.letters[:pos] + (j,) + word.letters[pos + 1:])
            with_neg = BraidWord(word.strands,
                                 word.letters[:pos] + (-j,) + word.letters[pos + 1:])
            without = BraidWord(word.strands,
                                word.letters[:pos] + word.letters[pos + 1:])
            residual = (conway_potential(with_pos) - conway_potential(with_neg)
                        - LaurentPolynomial.t_binomial(1) * conway_potential(without))
        elif args.relation == "b2":
            residual = relation_residual(word, RelationSpec.delta3_order4())
        elif args.relation == "b3":
            residual = relation_residual(word, RelationSpec.delta3sq_order4())
        else:
            raise ValueError(f"unknown relation {args.relation}")
        if not residual.is_zero():
            failures += 1
            print(f"trial {trial}: nonzero residual on braid "
                  f"[{word.to_text()}] in B_{word.strands}")
        elif args.relation in ("b2", "b3"):
            kind = ("delta3_order4" if args.relation == "b2"
                    else "Delta3sq_order4")
            if not det_relation_check(word, kind).is_zero():
                failures += 1
                print(f"trial {trial}: nonzero det residual on braid "
                      f"[{word.to_text()}]")
    print(f"{args.trials - failures}/{args.trials} residuals vanished")
    return 1 if failures else 0


def _cmd_prohibit(args) -> int:
    if args.mode == "theorem11":
        params = CurveParams(n=args.n, k=args.k, r=args.r, J=args.J,
                             lam=args.lam, lam_odd=args.lam_odd,
                             lam_even=args.lam_even)
        report = verdict_curve(params, args.lam_plus, args.lam_minus)
    else:
        report = verdict_degree9(args.alpha, args.beta, args.gamma,
                                 m_curve=args.m_curve,
                                 assume_lemma23=args.assume_lemma23)
    print(json.dumps(report.as_dict(), indent=2))
    return 0 if report.verdict == "admissible" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linksig",
        description="exact braid-closure invariants and curve prohibitions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="all invariants of one braid closure")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True,
                   help='letters like "1,2,-1" (sign = crossing sign)')
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("family", help="print a parametric family word")
    p.add_argument("kind", choices=["b", "c"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--J", type=int, required=True)
    p.add_argument("--alpha", required=True, help='twists like "1,1,1"')
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("splice", help="evaluate a splice diagram from JSON")
    p.add_argument("eval", nargs="?", default="eval")
    p.add_argument("--file", required=True)
    p.add_argument("--multivariable", action="store_true")
    p.set_defaults(func=_cmd_splice)

    p = sub.add_parser("skeinpoly", help="the cyclic-system values a_J^+-")
    p.add_argument("a", nargs="?", default="a")
    p.add_argument("--J", type=int, required=True)
    p.add_argument("--sign", choices=["+", "-"], required=True)
    p.add_argument("--x", default="", help='integers like "1,2,1"')
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=_cmd_skeinpoly)

    p = sub.add_parser("closedform", help="closed-form family signatures")
    p.add_argument("kind", choices=["b", "c"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--J", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--verify", action="store_true",
                   help="run the direct matrix computation alongside")
    p.add_argument("--explore", action="store_true",
                   help="compute directly when no closed form is established")
    p.set_defaults(func=_cmd_closedform)

    p = sub.add_parser("skein", help="randomized verification of the relations")
    p.add_argument("verify", nargs="?", default="verify")
    p.add_argument("--relation", choices=["conway", "b2", "b3", "blocks"],
                   required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strands", type=int, default=3)
    p.add_argument("--maxlen", type=int, default=10)
    p.set_defaults(func=_cmd_skein)

    p = sub.add_parser("prohibit", help="curve prohibition reports")
    modes = p.add_subparsers(dest="mode", required=True)
    t = modes.add_parser("theorem11")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--r", type=int, default=0)
    t.add_argument("--J", type=int, default=None)
    t.add_argument("--lambda", dest="lam", type=int, required=True)
    t.add_argument("--lambda-odd", dest="lam_odd", type=int, required=True)
    t.add_argument("--lambda-even", dest="lam_even", type=int, required=True)
    t.add_argument("--lambda-plus", dest="lam_plus", type=int, default=None)
    t.add_argument("--lambda-minus", dest="lam_minus", type=int, default=None)
    t.set_defaults(func=_cmd_prohibit)
    d = modes.add_parser("degree9")
    d.add_argument("--alpha", type=int, required=True)
    d.add_argument("--beta", type=int, required=True)
    d.add_argument("--gamma", type=int, required=True)
    d.add_argument("--m-curve", action="store_true")
    d.add_argument("--assume-lemma23", action="store_true")
    d.set_defaults(func=_cmd_prohibit)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
