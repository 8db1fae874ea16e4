"""Command line interface.

Commands:
    nf FILE                          Garside normal form of a braid word file
    lift FILE -o OUT                 branched lift of a braid word file
    generate phi|boundary|extend|commutator ...
    verify FILE1 FILE2 [--tier ...]  compare two word files
    invariants FILE                  fibration invariant report

Exit codes: 0 pass, 1 usage or parse error, 2 relation refuted,
3 requested tier cannot decide the comparison.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .braid import equal, normal_form
from .constructions import (PositiveFactorization,
                            boundary_multitwist_factorization,
                            commutator_relation, extend_to_genus,
                            extended_calculator, phi,
                            phi_factorization)
from .dsl import Document, ParseError, parse, print_document
from .framed import framed_equal
from .invariants import (b1_of_total_space, endo_signature, euler_closed,
                         euler_filling, hyperelliptic_obstruction)
from .lift import lift as branched_lift
from .surface import HomologyCalculator, SurfaceModel
from .swaps import SurfaceLayout, expand, shadow

REPORT_SCHEMA = 1


def _read(path: str) -> Document:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _write(path: str, doc: Document) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(print_document(doc))


def _cmd_nf(args) -> int:
    doc = _read(args.file)
    if doc.kind != "braid":
        print("nf expects a @braid file", file=sys.stderr)
        return 1
    nf = normal_form(doc.value)
    print(f"schema: {REPORT_SCHEMA}")
    print(f"strands: {nf.strands}")
    print(f"infimum: {nf.infimum}")
    print(f"canonical_length: {nf.canonical_length()}")
    for k, f in enumerate(nf.factors, start=1):
        print(f"factor_{k}: {' '.join(str(x + 1) for x in f)}")
    return 0


def _cmd_lift(args) -> int:
    doc = _read(args.file)
    if doc.kind != "braid":
        print("lift expects a @braid file", file=sys.stderr)
        return 1
    lifted = branched_lift(doc.value)
    _write(args.output, Document("twist", lifted))
    return 0


def _cmd_generate(args) -> int:
    if args.family == "phi":
        fact = phi_factorization(args.m, args.l)
        layout = SurfaceLayout(args.l)
        target_ok = layout.calculator.verify_homologically(
            fact.word, expand(phi(layout)))
    elif args.family == "boundary":
        fact = boundary_multitwist_factorization(args.m, args.l)
        layout = SurfaceLayout(args.l)
        target_ok = layout.calculator.is_identity_action(fact.word)
    elif args.family == "extend":
        base = boundary_multitwist_factorization(args.m)
        fact = extend_to_genus(args.genus, base)
        calc = extended_calculator(args.genus, SurfaceLayout(0))
        target_ok = calc.is_identity_action(fact.word)
    elif args.family == "commutator":
        surface = SurfaceModel(2, 2)
        lhs, rhs = commutator_relation(args.m, surface)
        calc = HomologyCalculator(surface)
        from .surface import compose_twists
        target_ok = calc.is_identity_action(compose_twists(lhs, rhs))
        _write(args.output, Document("twist", compose_twists(lhs, rhs)))
        print(f"schema: {REPORT_SCHEMA}")
        print(f"family: commutator m={args.m}")
        print(f"letters: {len(lhs) + len(rhs)}")
        print(f"homology_identity: {'pass' if target_ok else 'FAIL'}")
        return 0 if target_ok else 2
    else:
        print(f"unknown family {args.family}", file=sys.stderr)
        return 1
    _write(args.output, Document("twist", fact.word))
    print(f"schema: {REPORT_SCHEMA}")
    print(f"family: {fact.description}")
    print(f"letters: {fact.length()}")
    print(f"verified: {'pass' if target_ok else 'FAIL'}")
    return 0 if target_ok else 2


def _cmd_verify(args) -> int:
    d1, d2 = _read(args.file1), _read(args.file2)
    if d1.kind != d2.kind:
        print("cannot compare documents of different kinds", file=sys.stderr)
        return 1
    tier = args.tier
    if d1.kind == "braid":
        if tier in ("exact", "auto"):
            ok = equal(d1.value, d2.value)
            print(f"schema: {REPORT_SCHEMA}")
            print(f"tier: exact\nverdict: {'equal' if ok else 'refuted'}")
            return 0 if ok else 2
        print("braid words support only the exact tier", file=sys.stderr)
        return 3
    if d1.kind == "framed":
        if tier in ("framed", "exact", "auto"):
            ok = framed_equal(d1.value, d2.value)
            print(f"schema: {REPORT_SCHEMA}")
            print(f"tier: framed\nverdict: {'equal' if ok else 'refuted'}")
            return 0 if ok else 2
        print("framed words support only the framed tier", file=sys.stderr)
        return 3
    if d1.kind == "swap":
        if tier == "framed" or tier == "auto":
            ok = framed_equal(shadow(d1.value), shadow(d2.value))
            print(f"schema: {REPORT_SCHEMA}")
            print(f"tier: framed\nverdict: {'equal' if ok else 'refuted'}")
            return 0 if ok else 2
        if tier == "homology":
            layout = d1.value.layout
            if layout != d2.value.layout:
                print("swap words on different layouts", file=sys.stderr)
                return 1
            ok = layout.calculator.verify_homologically(
                expand(d1.value), expand(d2.value))
            print(f"schema: {REPORT_SCHEMA}")
            print("tier: homology")
            print(f"verdict: {'consistent' if ok else 'refuted'}")
            return 0 if ok else 2
        print("swap words: use --tier framed or homology", file=sys.stderr)
        return 3
    # twist words: only the homological necessary condition is available
    if tier == "exact":
        print("tier-insufficient: the exact mapping class group word problem "
              "is out of scope; homology refutes but cannot certify",
              file=sys.stderr)
        return 3
    surface = d1.value.surface
    if surface != d2.value.surface:
        print("twist words on different surfaces", file=sys.stderr)
        return 1
    calc = HomologyCalculator(surface)
    ok = calc.verify_homologically(d1.value, d2.value)
    if not ok:
        print(f"schema: {REPORT_SCHEMA}")
        print("tier: homology\nverdict: refuted")
        return 2
    if _radical_signature(d1.value, calc) != _radical_signature(d2.value, calc):
        print(f"schema: {REPORT_SCHEMA}")
        print("tier: homology")
        print("verdict: tier-insufficient (the words differ in twists about "
              "radical classes, which homology cannot distinguish; boundary "
              "twists act trivially on absolute H_1)")
        return 3
    print(f"schema: {REPORT_SCHEMA}")
    print("tier: homology")
    print("verdict: consistent (a necessary condition only, not a proof "
          "of equality)")
    return 0


def _radical_signature(word, calc):
    """Signed count of letters whose class lies in the radical of the
    intersection form: exactly what the homology action cannot see."""
    j = calc.J
    total = 0
    for curve, sign in word.letters:
        v = calc.curve_class(curve)
        from .surface import mat_vec
        if not any(mat_vec(j, v)):
            total += sign
    return total


def _cmd_invariants(args) -> int:
    doc = _read(args.file)
    if doc.kind != "twist":
        print("invariants expects a @twist file", file=sys.stderr)
        return 1
    word = doc.value
    surface = word.surface
    if not word.is_positive():
        print("invariants expects an all-positive factorization",
              file=sys.stderr)
        return 1
    layout = None
    for l in (0, 1, 2, 3):
        cand = SurfaceLayout(l)
        if cand.ambient_model() == surface:
            layout = cand
            break
    if layout is not None:
        calc = layout.calculator
    elif surface.genus > 11:
        calc = extended_calculator(surface.genus, SurfaceLayout(0))
    else:
        calc = HomologyCalculator(surface)
    fact = PositiveFactorization(word, None, "input file",
                                 ("input",) * len(word))
    summary = b1_of_total_space(fact, calc, cap=True)
    g, n = surface.genus, len(word)
    sigma = endo_signature(g, n)
    print(f"schema: {REPORT_SCHEMA}")
    print(f"genus: {g}")
    print(f"n_cycles: {n}")
    print(f"euler_closed: {euler_closed(g, n)}")
    print(f"euler_filling: {euler_filling(g, surface.boundary, n)}")
    print(f"b1: {summary.b1}")
    print(f"torsion: {','.join(map(str, summary.torsion)) or 'none'}")
    print(f"endo_sigma_num: {sigma.numerator}")
    print(f"endo_sigma_den: {sigma.denominator}")
    print(f"hyperelliptic_verdict: {hyperelliptic_obstruction(g, n)}")
    return 0


def main(argv=None) -> int:
    top = argparse.ArgumentParser(
        prog="swapfact",
        description="Exact swap-map calculus: positive Dehn twist "
                    "factorizations and their machine verification.")
    top.add_argument("--version", action="version", version=__version__)
    top.add_argument("--seed", type=int, default=0,
                     help="seed for randomized searches (default 0)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="Garside normal form of a braid word")
    p.add_argument("file")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("lift", help="branched double cover lift")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("generate", help="generate a factorization family")
    p.add_argument("family", choices=["phi", "boundary", "extend",
                                      "commutator"])
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--genus", type=int, default=12)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="compare two word files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--tier", choices=["exact", "framed", "homology", "auto"],
                   default="auto")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("invariants", help="fibration invariants of a "
                                          "positive factorization")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invariants)

    args = top.parse_args(argv)
    import swapfact.constructions as constructions
    constructions.DEFAULT_SEED = args.seed
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
