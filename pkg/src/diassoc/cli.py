"""Command-line interface.

Exit codes: 0 success, 1 negative verdict, 2 input error, 3 budget or
unsupported field, 4 classification gap.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .axioms import gse_residuals
from .catalog import CanonicalLabel, families, family, normalize_params, representatives
from .census import census_associative, census_diassociative, census_general
from .dialgebra import DiMSC, dia_axiom_verdicts, dia_check
from .dsl import ParseError, Verdict, parse_algebra, render
from .field import FieldError, UnsupportedError, make_field
from .msc import assoc_matrix_check
from .search import ClassificationGap, automorphism_group, classify, dia_isomorphic, isomorphic

OK, NEGATIVE, INPUT_ERROR, UNSUPPORTED, GAP = 0, 1, 2, 3, 4
AUT_LISTING_CAP = 100


class InputError(Exception):
    pass


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        return parse_algebra(text)
    except ParseError as e:
        raise InputError(f"{path}: {e}") from None


def _out(s: str):
    print(s)


def cmd_check_assoc(args) -> int:
    ctx, A = _load(args.file)
    if isinstance(A, DiMSC):
        raise InputError("check-assoc takes an algebra, not a dialgebra")
    res = gse_residuals(A)
    ok = res.is_zero()
    if ok != assoc_matrix_check(A):  # pragma: no cover - the two forms are equivalent
        raise AssertionError("scalar and matrix associativity checks disagree")
    detail = tuple(f"fails equation {i}" for i in res.failing())
    _out(render(Verdict("associative", ok, detail), args.format))
    return OK if ok else NEGATIVE


def cmd_check_dia(args) -> int:
    ctx, D = _load(args.file)
    if not isinstance(D, DiMSC):
        raise InputError("check-dia takes a dialgebra")
    verdicts = dia_axiom_verdicts(D)
    if args.format == "json":
        _out(render({f"axiom{i + 1}": v for i, v in enumerate(verdicts)} | {"diassociative": all(verdicts)}, "json"))
    else:
        for i, v in enumerate(verdicts):
            _out(render(Verdict(f"axiom {i + 1}", v)))
        _out(render(Verdict("diassociative", all(verdicts))))
    return OK if all(verdicts) else NEGATIVE


def _exact_template(ctx, A):
    kind = "diassociative" if isinstance(A, DiMSC) else "associative"
    for fam in families(ctx.char_class, kind):
        params = fam.match(A)
        if params is None:
            continue
        try:
            if normalize_params(fam.id, params, ctx) == params:
                return CanonicalLabel(fam.id, params, ctx.char_class)
        except (UnsupportedError, ValueError):
            continue
    return None


def cmd_classify(args) -> int:
    ctx, A = _load(args.file)
    ok = dia_check(A) if isinstance(A, DiMSC) else assoc_matrix_check(A)
    name = "diassociative" if isinstance(A, DiMSC) else "associative"
    if not ok:
        _out(render(Verdict(name, False), args.format))
        return NEGATIVE
    if not ctx.is_finite:
        if A.is_zero():
            _out(render(CanonicalLabel.zero(ctx.char_class), args.format))
            return OK
        label = _exact_template(ctx, A)
        if label is None:
            _out(render(Verdict(name, True, ("no literal catalog match; isomorphism search needs a finite field",)), args.format))
            return NEGATIVE
        _out(render(label, args.format))
        return OK
    try:
        label = classify(A)
    except ClassificationGap as e:
        print(str(e), file=sys.stderr)
        if args.format == "json":
            _out(render({"label": "CLASSIFICATION-GAP", "orbit_key": str(e.key)}, "json"))
        return GAP
    _out(render(label, args.format))
    return OK


def cmd_aut(args) -> int:
    ctx, A = _load(args.file)
    group = automorphism_group(A)
    shown = group[:AUT_LISTING_CAP]
    if args.format == "json":
        _out(render({"order": len(group), "elements": [[ctx.to_json(v) for v in g.entries] for g in shown],
                     "truncated": len(group) > len(shown)}, "json"))
    else:
        _out(f"order: {len(group)}")
        for g in shown:
            _out(f"  {g}")
        if len(group) > len(shown):
            _out(f"  ... {len(group) - len(shown)} more")
    return OK


def cmd_iso(args) -> int:
    ctx1, A = _load(args.file1)
    ctx2, B = _load(args.file2)
    if ctx1 != ctx2:
        raise InputError(f"field mismatch: {ctx1} vs {ctx2}")
    if isinstance(A, DiMSC) != isinstance(B, DiMSC):
        raise InputError("cannot compare an algebra with a dialgebra")
    g = dia_isomorphic(A, B) if isinstance(A, DiMSC) else isomorphic(A, B)
    if g is None:
        _out(render({"isomorphic": False}, "json") if args.format == "json" else "not isomorphic")
        return NEGATIVE
    if args.format == "json":
        _out(render({"isomorphic": True, "witness": [ctx1.to_json(v) for v in g.entries]}, "json"))
    else:
        _out(f"isomorphic: witness g = {g}")
    return OK


_KINDS = {"assoc": "associative", "dia": "diassociative", "general": "general"}


def _field(text: str):
    try:
        return make_field(text)
    except UnsupportedError:
        raise
    except FieldError as e:
        raise InputError(str(e)) from None


def cmd_census(args) -> int:
    ctx = _field(args.field)
    kind = _KINDS[args.kind]
    if kind == "associative":
        report = census_associative(ctx, jobs=args.jobs)
    elif kind == "general":
        report = census_general(ctx, jobs=args.jobs)
    else:
        report = census_diassociative(ctx, jobs=args.jobs)
    _out(render(report, args.format))
    return OK


def _rep_record(fam, ctx, params, inst):
    rec = {"family": fam.id, "char_class": fam.char_class, "kind": fam.kind}
    if inst is None:
        rec["params"] = list(fam.params)
        rec["dimsc" if fam.is_dialgebra else "msc"] = list(fam.template)
    else:
        rec["params"] = [ctx.to_json(p) for p in params]
        if isinstance(inst, DiMSC):
            rec["dimsc"] = {"left": [ctx.to_json(e) for e in inst.left.entries],
                            "right": [ctx.to_json(e) for e in inst.right.entries]}
        else:
            rec["msc"] = [ctx.to_json(e) for e in inst.entries]
    rec["side_conditions"] = [x for x in (fam.side_text, fam.eq_text or fam.equivalence) if x and x != "none"]
    return rec


def cmd_reps(args) -> int:
    ctx = _field(args.field)
    kind = _KINDS[args.kind]
    if not ctx.is_finite:
        fams = families(ctx.char_class, kind)
        if args.format == "json":
            _out(render([_rep_record(f, ctx, None, None) for f in fams], "json"))
            return OK
        for fam in fams:
            t = fam.template
            body = " | ".join(" ".join(t[i:i + 4]) for i in range(0, len(t), 4))
            extra = "; ".join(_rep_record(fam, ctx, None, None)["side_conditions"])
            _out(f"{fam.id}({', '.join(fam.params)}): {body}" + (f"   [{extra}]" if extra else ""))
        return OK
    reps = representatives(ctx.char_class, kind, ctx)
    if args.format == "json":
        _out(render([_rep_record(family(l.family_id), ctx, l.params, inst) for l, inst in reps], "json"))
    else:
        for l, inst in reps:
            lab = l.family_id + (f"({', '.join(ctx.fmt(p) for p in l.params)})" if l.params else "")
            _out(f"{lab:<16} {inst}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diassoc", description="Two-dimensional algebras and associative dialgebras.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-assoc", parents=[fmt], help="associativity verdict and failing equations")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_assoc)

    s = sub.add_parser("check-dia", parents=[fmt], help="verdict for each of the five dialgebra axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_dia)

    s = sub.add_parser("classify", parents=[fmt], help="catalog label of the input")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("aut", parents=[fmt], help="automorphism group over a finite field")
    s.add_argument("file")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("iso", parents=[fmt], help="isomorphism witness")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("census", parents=[fmt], help="exhaustive census over GF(q)")
    s.add_argument("--field", required=True)
    s.add_argument("--kind", choices=("assoc", "dia", "general"), required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("reps", parents=[fmt], help="catalog representatives")
    s.add_argument("--field", required=True)
    s.add_argument("--kind", choices=("general", "assoc", "dia"), required=True)
    s.set_defaults(func=cmd_reps)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except UnsupportedError as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return UNSUPPORTED
    except (FieldError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
