"""Command-line runner: `lexmv run <command> <dsl> [options]`.

Exit codes: 0 the check passed, 1 a property violation or cap was hit,
2 usage or parse errors.  Reports serialize as canonical JSON (sorted
keys, LF endings, rationals as "p/q" strings) and are byte-identical
for identical inputs and seed; timing is opt-in via --with-timing.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import dsl, finite
from . import groups as gr
from .algebra import PmvAlgebra
from .axioms import axiom_report
from .finite import CapExceeded, FiniteMv
from .reports import Report, canonical_json, rat_str
from .witnesses import (
    LexAlgebra,
    WitnessError,
    build_phi,
    canonical_witness,
    check_cyclic,
    check_decomposition,
    classify,
    verify_hom,
)

COMMANDS = (
    "check-axioms",
    "classify",
    "witness",
    "lexify",
    "ideals",
    "radical",
    "states",
    "retractive",
    "lexid",
    "rdp2",
    "isomorphic",
)


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lexmv")
    sub = ap.add_subparsers(dest="mode", required=True)
    run = sub.add_parser("run", help="run a check on a declared algebra")
    run.add_argument("command", choices=COMMANDS)
    run.add_argument("dsl", nargs="?", help="algebra expression")
    run.add_argument("--samples", type=int, default=1000)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--bound", type=int, default=25)
    run.add_argument("--cap", type=int, default=12, help="finite exhaustive size cap")
    run.add_argument("--json", dest="json_path", help="also write the report here")
    run.add_argument("--table", help="finite algebra table file")
    run.add_argument("--kind", choices=("strong", "weak"), help="witness kind")
    run.add_argument("--elem", help="element literal for classify")
    run.add_argument("--other", help="second algebra expression for isomorphic")
    run.add_argument("--with-timing", action="store_true")
    return ap


def _load(args) -> object:
    if args.table:
        with open(args.table) as fh:
            return finite.parse_table(fh.read())
    if args.dsl is None:
        raise UsageError("an algebra expression or --table is required")
    return dsl.build_algebra(dsl.parse(args.dsl))


def _need_finite(alg, cap: int) -> FiniteMv:
    fin = dsl.as_finite(alg)
    if fin.size > cap:
        raise CapExceeded(f"algebra has {fin.size} elements, cap is {cap}")
    return fin


def _need_lex(alg) -> LexAlgebra:
    if not isinstance(alg, PmvAlgebra):
        raise UsageError("this command needs a gamma(lex(...),...) algebra")
    return LexAlgebra.from_algebra(alg)


def _default_kind(args, la: LexAlgebra) -> str:
    if args.kind:
        return args.kind
    return "strong" if la.strong_form else "weak"


def _mask_entry(a: FiniteMv, info: finite.IdealInfo) -> dict:
    return {
        "elements": a.mask_labels(info.mask),
        "normal": info.normal,
        "maximal": info.maximal,
        "prime": info.prime,
        "commutative": info.commutative,
        "strict": info.strict,
    }


def _run_command(args) -> Report:
    alg = _load(args)
    cmd = args.command
    if cmd == "check-axioms":
        if isinstance(alg, FiniteMv):
            return finite.check_axioms(alg)
        return axiom_report(alg, args.samples, args.seed, args.bound)

    if cmd == "classify":
        la = _need_lex(alg)
        if args.elem is None:
            raise UsageError("classify needs --elem")
        value = dsl.build_elem(la.spec, dsl.parse_elem(args.elem))
        w = canonical_witness(la, _default_kind(args, la))
        t = classify(w, la.algebra.elem(value))
        rep = Report("classify", "pass", seed=args.seed)
        rep.details["element"] = gr.fmt_elem(la.spec, value)
        rep.details["slice"] = gr.fmt_elem(la.base.spec, t)
        return rep

    if cmd == "witness":
        la = _need_lex(alg)
        kind = _default_kind(args, la)
        w = canonical_witness(la, kind)
        dec = check_decomposition(w, args.samples, args.seed, args.bound)
        cyc = check_cyclic(w, args.samples, args.seed, args.bound)
        rep = Report("witness", "pass" if dec.ok and cyc.ok else "fail",
                     seed=args.seed, samples=args.samples)
        rep.details = {"kind": kind, "decomposition": dec.verdict, "cyclic": cyc.verdict,
                       "algebra": str(la.algebra)}
        rep.counterexamples = dec.counterexamples + cyc.counterexamples
        return rep

    if cmd == "lexify":
        la = _need_lex(alg)
        kind = _default_kind(args, la)
        w = canonical_witness(la, kind)
        phi = build_phi(w)
        rep = verify_hom(phi, args.samples, args.seed, args.bound)
        rep.command = "lexify"
        b = phi.target.unit[1]
        rep.details["b"] = gr.fmt_elem(la.spec, (gr.zero(la.base.spec), b))
        rep.details["kind"] = kind
        rep.details["target"] = str(phi.target)
        return rep

    a = _need_finite(alg, args.cap)

    if cmd == "ideals":
        infos = finite.enumerate_ideals(a, args.cap)
        rep = Report("ideals", "pass")
        rep.details["count"] = len(infos)
        rep.details["ideals"] = [_mask_entry(a, i) for i in infos]
        return rep

    if cmd == "radical":
        rad, rad_n, infinit = finite.radical_suite(a)
        rep = Report("radical", "pass")
        rep.details["rad"] = a.mask_labels(rad)
        rep.details["rad_n"] = a.mask_labels(rad_n)
        rep.details["infinit"] = a.mask_labels(infinit)
        if not (rad & ~infinit == 0 and infinit & ~rad_n == 0):
            rep.fail("radical-chain", [rep.details["rad"], rep.details["infinit"]])
        return rep

    if cmd == "states":
        states = finite.extremal_states(a)
        rep = Report("states", "pass")
        rep.details["count"] = len(states)
        rep.details["states"] = [
            {a.label(x): rat_str(s(x)) for x in range(a.size)} for s in states
        ]
        for s in states:
            if not finite.state_is_additive(a, s):
                rep.fail("state-additivity", [rep.details["states"][states.index(s)]])
        return rep

    if cmd == "retractive":
        rep = Report("retractive", "pass")
        rows = []
        full = (1 << a.size) - 1
        for info in finite.enumerate_ideals(a, args.cap):
            if not info.normal:
                continue
            ret, _ = finite.is_retractive(a, info.mask)
            comp, _ = finite.has_complement(a, info.mask)
            rows.append({"elements": a.mask_labels(info.mask),
                         "retractive": ret, "complement": comp})
            # the equivalence degenerates at I = M (one-element quotient),
            # so agreement is asserted for proper ideals only
            if info.mask != full and ret != comp:
                rep.fail("retractive-complement-agreement", [a.mask_labels(info.mask)])
        rep.details["ideals"] = rows
        return rep

    if cmd == "lexid":
        rep = Report("lexid", "pass")
        rows = []
        found = False
        for info in finite.enumerate_ideals(a, args.cap):
            ok, clauses = finite.is_lexicographic_ideal(a, info.mask)
            found = found or ok
            rows.append({"elements": a.mask_labels(info.mask),
                         "lexicographic": ok, "clauses": clauses})
        rep.details["exists"] = found
        rep.details["ideals"] = rows
        return rep

    if cmd == "rdp2":
        rep = Report("rdp2", "pass")
        if not finite.check_rdp2(a, args.cap):
            rep.fail("rdp2", [str(a)])
        return rep

    if cmd == "isomorphic":
        if args.other is None:
            raise UsageError("isomorphic needs --other with a second algebra")
        b = _need_finite(dsl.build_algebra(dsl.parse(args.other)), args.cap)
        ok, bij = finite.brute_isomorphic(a, b)
        rep = Report("isomorphic", "pass" if ok else "fail")
        rep.details["sizes"] = [a.size, b.size]
        if ok:
            rep.details["bijection"] = {a.label(x): b.label(bij[x]) for x in range(a.size)}
        else:
            rep.fail("no-isomorphism", [str(a), str(b)])
        return rep

    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    t0 = time.perf_counter()
    try:
        rep = _run_command(args)
    except (dsl.ParseError, UsageError, OSError, finite.TableError, WitnessError) as exc:
        print(f"lexmv: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        rep = Report(args.command, "cap-exceeded")
        rep.details["reason"] = str(exc)
    if rep.elapsed is None:
        rep.elapsed = time.perf_counter() - t0
    text = canonical_json(rep, include_timing=args.with_timing)
    sys.stdout.write(text)
    if args.json_path:
        with open(args.json_path, "w", newline="") as fh:
            fh.write(text)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
