"""Command-line front end.

Subcommands: classify, dual, implies, equiv, presta, eval, regions,
essential, phi, ulm, ulm-div, defects, selftest.  `--json` switches the
output to a stable machine-readable document.  Exit codes: 0 success,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify, is_essential, phi_membership, rd_table
from .corpus import resolve_forest, resolve_module, resolve_ring
from .errors import PpcalcError
from .formulas import dual, enumerate_unary_formulas
from .forest import ulm_sequence
from .lattice import equiv, implies, presta_solve
from .modules import FgAbelianModule
from .parser import formula_to_text, parse_formula
from .rings import IntegerRing
from .semantics import abspure_defect, evaluate, flat_defect
from .selftest import report_text, run_selftest
from .ulm import ulm_bounded, ulm_div


def _emit(args, data, text_lines):
    if args.json:
        print(json.dumps(data, indent=1, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _formula(args, ring):
    return parse_formula(args.formula, ring, args.side)


def cmd_classify(args):
    ring = resolve_ring(args.ring)
    phi = _formula(args, ring)
    cls = classify(phi)
    data = {"formula": formula_to_text(phi), "ring": args.ring,
            **cls.to_dict(ring)}
    lines = [f"formula:   {formula_to_text(phi)}",
             f"region:    {cls.region}",
             f"high:      {cls.high}",
             f"low:       {cls.low}",
             f"bounded:   {cls.bounded}"
             + (f" (r = {ring.element_name(cls.bound_witness)})"
                if cls.bounded else ""),
             f"cobounded: {cls.cobounded}"
             + (f" (s = {ring.element_name(cls.cobound_witness)})"
                if cls.cobounded else "")]
    if args.criteria_crosscheck:
        from .classify import proposition_criteria
        crit = proposition_criteria(phi)
        agree = (crit.bounded, crit.high, crit.low, crit.cobounded) == \
            (cls.bounded, cls.high, cls.low, cls.cobounded)
        data["criteria_agree"] = agree
        lines.append(f"criteria:  {'agree' if agree else 'DISAGREE'}")
        if not agree:
            _emit(args, data, lines)
            return 1
    _emit(args, data, lines)
    return 0


def cmd_dual(args):
    ring = resolve_ring(args.ring)
    phi = _formula(args, ring)
    d = dual(phi)
    data = {"formula": formula_to_text(phi), "side": phi.side,
            "dual": formula_to_text(d), "dual_side": d.side}
    _emit(args, data, [f"{formula_to_text(d)}   (side: {d.side})"])
    return 0


def _pair(args, ring):
    return (parse_formula(args.formula, ring, args.side),
            parse_formula(args.other, ring, args.side))


def cmd_implies(args):
    ring = resolve_ring(args.ring)
    phi, psi = _pair(args, ring)
    verdict = implies(phi, psi)
    _emit(args, {"implies": verdict}, [str(verdict)])
    return 0


def cmd_equiv(args):
    ring = resolve_ring(args.ring)
    phi, psi = _pair(args, ring)
    verdict = equiv(phi, psi)
    _emit(args, {"equiv": verdict}, [str(verdict)])
    return 0


def cmd_presta(args):
    ring = resolve_ring(args.ring)
    phi, psi = _pair(args, ring)
    solvable, witness = presta_solve(phi, psi)
    data = {"solvable": solvable}
    lines = [str(solvable)]
    if solvable:
        data["witness"] = {k: [list(map(ring.element_name, row))
                               for row in v.entries]
                           for k, v in witness.items()}
        for k in ("X", "Y", "Z"):
            lines.append(f"{k} = {witness[k]}")
    if args.criteria_crosscheck:
        agree = implies(phi, psi) == solvable
        data["implies_agree"] = agree
        lines.append(f"free-realization route: {'agrees' if agree else 'DISAGREES'}")
    _emit(args, data, lines)
    return 0


def cmd_eval(args):
    ring = resolve_ring(args.ring)
    phi = _formula(args, ring)
    module = resolve_module(args.module, ring, side=args.side)
    value = evaluate(phi, module)
    data = {"formula": formula_to_text(phi), "module": str(module),
            "value": str(value)}
    if hasattr(value, "elements"):
        data["elements"] = [list(e) for e in value.elements]
    else:
        data["basis"] = [list(r) for r in value.basis]
    _emit(args, data, [f"{formula_to_text(phi)} on {module}: {value}"])
    return 0


def cmd_regions(args):
    ring = resolve_ring(args.ring)
    entries, reps = rd_table(ring, scope=args.scope)
    classes = [formula_to_text(r) for r in reps]
    data = {"ring": args.ring, "classes": classes,
            "agreements": all(e.agrees for e in entries),
            "entries": [{"r": ring.element_name(e.r),
                         "s": ring.element_name(e.s),
                         "formula": e.text,
                         "region": e.classification.region,
                         "clauses": list(e.clauses),
                         "class": e.class_index,
                         "agrees": e.agrees} for e in entries]}
    lines = [f"{len(reps)} equivalence classes among basic RD formulas:"]
    for i, c in enumerate(classes):
        lines.append(f"  class {i}: {c}")
    lines.append(f"{'r':>6} {'s':>6}  {'formula':<14} {'region':<6} class clauses")
    for e in entries:
        lines.append(f"{ring.element_name(e.r):>6} {ring.element_name(e.s):>6}"
                     f"  {e.text:<14} {e.classification.region:<6} "
                     f"{e.class_index:>5} {','.join(map(str, e.clauses))}"
                     + ("" if e.agrees else "  CRITERIA-MISMATCH"))
    _emit(args, data, lines)
    return 0 if all(e.agrees for e in entries) else 1


def cmd_essential(args):
    ring = resolve_ring(args.ring)
    phi = _formula(args, ring)
    verdict = is_essential(phi)
    _emit(args, {"essential": verdict}, [str(verdict)])
    return 0


def cmd_phi(args):
    ring = resolve_ring(args.ring)
    phi = _formula(args, ring)
    member, detail = phi_membership(phi)
    name = ring.element_name
    data = {"member": member,
            "ideal": [name(x) for x in detail["ideal"]],
            "left_annihilator": [name(x) for x in detail["left_annihilator"]],
            "dual_value": [name(x) for x in detail["dual_value"]]}
    lines = [f"member: {member}",
             f"ideal I = {{{', '.join(name(x) for x in detail['ideal'])}}}",
             f"l(I)    = {{{', '.join(name(x) for x in detail['left_annihilator'])}}}",
             f"dual    = {{{', '.join(name(x) for x in detail['dual_value'])}}}"]
    _emit(args, data, lines)
    return 0


def cmd_ulm(args):
    if args.tree:
        forest = resolve_forest(args.tree)
        report = ulm_sequence(forest)
        data = report.to_dict()
        lines = [f"ulm length: {report.ulm_length} (tree semantics)"]
        for name, h in sorted(report.heights.items()):
            lines.append(f"  height({name}) = {h}")
        for tau, nodes in enumerate(report.node_sets):
            lines.append(f"  N_{tau}: {{{', '.join(nodes)}}}")
        _emit(args, data, lines)
        return 0
    ring = resolve_ring(args.ring)
    module = resolve_module(args.module, ring)
    sub, stabilized = ulm_bounded(module, args.bound)
    data = {"bound": args.bound, "stabilized": stabilized,
            "value": str(sub), "size": len(sub)}
    _emit(args, data,
          [f"bounded Ulm value at size bound {args.bound}: {sub}",
           f"stabilized between {args.bound - 1} and {args.bound}: {stabilized}",
           "note: contains the first Ulm submodule; equality not claimed"])
    return 0


def cmd_ulm_div(args):
    ring = resolve_ring(args.ring)
    module = resolve_module(args.module, ring)
    sub = ulm_div(module)
    data = {"value": str(sub)}
    if hasattr(sub, "elements"):
        data["size"] = len(sub)
    _emit(args, data, [f"divisibility Ulm value: {sub}"])
    return 0


def cmd_defects(args):
    ring = resolve_ring(args.ring)
    module = resolve_module(args.module, ring)
    rows = []
    for phi in enumerate_unary_formulas(ring, args.max_size):
        value, flat = flat_defect(phi, module)
        flat_bad = value != flat
        if ring.is_finite:
            value, ann = abspure_defect(phi, module)
            pure_bad = value != ann
        else:
            pure_bad = None
        rows.append((formula_to_text(phi), flat_bad, pure_bad))
    data = {"module": str(module),
            "defects": [{"formula": t, "flat_defect": fb, "abspure_defect": pb}
                        for t, fb, pb in rows]}
    lines = [f"{'formula':<16} {'flat-defect':<12} abspure-defect"]
    for t, fb, pb in rows:
        lines.append(f"{t:<16} {str(fb):<12} {pb}")
    _emit(args, data, lines)
    return 0


def cmd_selftest(args):
    results = run_selftest(seed=args.seed, size=args.size)
    if args.json:
        data = [{"suite": r.name, "checks": r.checks,
                 "failures": [str(f) for f in r.failures]} for r in results]
        print(json.dumps(data, indent=1, sort_keys=True))
    else:
        print(report_text(results))
    return 0 if all(r.ok for r in results) else 1


def build_parser():
    top = argparse.ArgumentParser(
        prog="ppcalc",
        description="exact calculus of pp formulas over computable rings")
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = top.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[shared], **kw)

    def common(p, formula=True, pair=False):
        p.add_argument("--ring", required=True,
                       help="Z, Z/<n>, T8, F4, or a ring file")
        p.add_argument("--side", choices=("left", "right"), default="left")
        if formula:
            p.add_argument("--formula", required=True)
        if pair:
            p.add_argument("--other", required=True,
                           help="the second formula")

    p = add_parser("classify", help="four-region classification")
    common(p)
    p.add_argument("--criteria-crosscheck", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = add_parser("dual", help="elementary dual")
    common(p)
    p.set_defaults(func=cmd_dual)

    for name, fn, hlp in (("implies", cmd_implies, "decide phi <= psi"),
                          ("equiv", cmd_equiv, "decide equivalence")):
        p = add_parser(name, help=hlp)
        common(p, pair=True)
        p.set_defaults(func=fn)

    p = add_parser("presta", help="matrix-equation implication check")
    common(p, pair=True)
    p.add_argument("--criteria-crosscheck", action="store_true")
    p.set_defaults(func=cmd_presta)

    p = add_parser("eval", help="evaluate a formula in a module")
    common(p)
    p.add_argument("--module", required=True,
                   help="module file or Z/a + Z/b shorthand")
    p.set_defaults(func=cmd_eval)

    p = add_parser("regions", help="classify all basic RD formulas")
    common(p, formula=False)
    p.add_argument("--scope", type=int, default=5,
                   help="sample range over Z")
    p.set_defaults(func=cmd_regions)

    p = add_parser("essential", help="essentiality of phi(R) in R")
    common(p)
    p.set_defaults(func=cmd_essential)

    p = add_parser("phi", help="annihilator-match membership probe")
    common(p)
    p.set_defaults(func=cmd_phi)

    p = add_parser("ulm", help="Ulm sequence of a tree or module")
    p.add_argument("--tree", help="forest file")
    p.add_argument("--ring", default="Z")
    p.add_argument("--module")
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_ulm)

    p = add_parser("ulm-div", help="intersection of rM over regular r")
    p.add_argument("--ring", required=True)
    p.add_argument("--module", required=True)
    p.set_defaults(func=cmd_ulm_div)

    p = add_parser("defects", help="flat/absolute-purity defect table")
    common(p, formula=False)
    p.add_argument("--module", required=True)
    p.add_argument("--max-size", type=int, default=4)
    p.set_defaults(func=cmd_defects)

    p = add_parser("selftest", help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=20)
    p.set_defaults(func=cmd_selftest)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "ulm" and not args.tree and not args.module:
        parser.error("ulm needs --tree or --module")
    try:
        return args.func(args)
    except PpcalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
