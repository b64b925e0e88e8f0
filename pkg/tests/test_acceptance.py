"""Acceptance criteria, one check per criterion.

Run ``python tests/test_acceptance.py`` for a PASS/FAIL table, or run it
under pytest, where each criterion is its own test and prints its line.
All comparisons are exact; the wall-time budgets below are pinned here.
"""
from __future__ import annotations

import itertools
import random
import sys
import time

import pytest

from diassoc import DiMSC, MSC, make_field
from diassoc.axioms import aut_residuals, gse_residuals
from diassoc.catalog import AUT_SHAPES, admissible, families, family
from diassoc.census import census_associative, census_diassociative, verify_wi_correspondence
from diassoc.msc import GL2, assoc_matrix_check, aut_check
from diassoc.dialgebra import dia_check
from diassoc.field import FE
from diassoc.search import automorphism_group, decode_algebra, dia_isomorphic, gl2_elements, gl2_order

BUDGET = {1: 1.0, 2: 5.0, 3: 180.0, 4: 1800.0, 5: 10.0, 6: 10.0, 7: 60.0, 8: 600.0}

FIELDS_BY_CLASS = {"not23": ("GF(5)", "GF(7)"), "char2": ("GF(2)", "GF(4)"), "char3": ("GF(3)", "GF(9)")}
SMALLEST = {"not23": "GF(5)", "char2": "GF(2)", "char3": "GF(3)"}


def _instances(fam, ctx):
    for p in itertools.product(ctx.elements(), repeat=len(fam.params)):
        if admissible(fam, p, ctx):
            yield p, fam.instantiate(ctx, p)


def criterion_1():
    bad = []
    for cc, fields in FIELDS_BY_CLASS.items():
        for s in fields:
            ctx = make_field(s)
            for fam in families(cc, "associative"):
                bad += [(s, fam.id, p) for p, A in _instances(fam, ctx) if not assoc_matrix_check(A)]
            for fam in families(cc, "diassociative"):
                bad += [(s, fam.id, p) for p, D in _instances(fam, ctx) if not dia_check(D)]
    return not bad, f"non-conforming instances: {bad[:5]}" if bad else "all instances conform"


def criterion_2():
    rng = random.Random(20240611)
    gf7 = make_field("GF(7)")
    mismatches = 0
    for _ in range(10_000):
        A = MSC(gf7, tuple(rng.randrange(7) for _ in range(8)))
        if gse_residuals(A).is_zero() != assoc_matrix_check(A):
            mismatches += 1
    gf5 = make_field("GF(5)")
    for _ in range(10_000):
        A = MSC(gf5, tuple(rng.randrange(5) for _ in range(8)))
        x, y, z, t = (rng.randrange(5) for _ in range(4))
        invertible = (x * t - y * z) % 5 != 0
        scalar = invertible and aut_residuals((x, y, z, t), A).is_zero()
        matrix = invertible and aut_check(GL2(gf5, x, y, z, t), A)
        mismatches += scalar != matrix
    return mismatches == 0, f"{mismatches} disagreements in 2 x 10^4 samples"


def criterion_3():
    parts = []
    ok = True
    for s in ("GF(2)", "GF(3)", "GF(5)"):
        r = census_associative(make_field(s))
        ok &= r.complete and r.disjoint
        parts.append(f"{s}: {r.total} MSCs, {r.classes} classes, complete={r.complete}, disjoint={r.disjoint}")
    return ok, "; ".join(parts)


def criterion_4():
    parts = []
    ok = True
    for s in ("GF(2)", "GF(3)"):
        r = census_diassociative(make_field(s))
        resolved = {fid for fid, _ in r.resolutions}
        unresolved = {f.id for f in families(make_field(s).char_class, "diassociative") if f.equivalence == "unresolved"}
        ok &= r.complete and r.disjoint and unresolved <= resolved
        parts.append(
            f"{s}: {r.classes} classes, complete={r.complete}, disjoint={r.disjoint}, "
            f"gaps={list(r.unmatched)}, resolved={sorted(resolved)}"
        )
    return ok, "; ".join(parts)


def criterion_5():
    mismatched = []
    for shape in AUT_SHAPES:
        fam = family(shape.family_id)
        ctx = make_field(SMALLEST[fam.char_class])
        for p, A in _instances(fam, ctx):
            if not shape.applies(tuple(FE(ctx, v) for v in p)):
                continue
            brute = {g.entries for g in automorphism_group(A)}
            printed = shape.members(ctx, p, use_printed=True)
            if brute != printed:
                mismatched.append(f"{fam.id}{list(p) if p else ''} over {ctx}: |brute|={len(brute)} |printed|={len(printed)}")
    return not mismatched, "; ".join(mismatched) if mismatched else "all printed groups confirmed"


NON_ISO = [
    ("GF(5)", "D3^2", (), "D3^3", ()),
    ("GF(5)", "D3^5", "*", "D3^6", ()),
    ("GF(2)", "D6,2^3", "*", "D6,2^4", ()),
    ("GF(2)", "D6,2^3", "*", "D6,2^5", ()),
    ("GF(2)", "D6,2^4", (), "D6,2^5", ()),
    ("GF(2)", "D3,2^7", (), "D3,2^8", ()),
    ("GF(3)", "D3,3^2", (), "D3,3^3", ()),
    ("GF(3)", "D3,3^5", "*", "D3,3^6", ()),
    ("GF(3)", "D3,3^5", "*", "D3,3^7", ()),
    ("GF(3)", "D3,3^6", (), "D3,3^7", ()),
]


def criterion_6():
    found = []
    checked = 0
    for s, f1, p1, f2, p2 in NON_ISO:
        ctx = make_field(s)
        firsts = [(v,) for v in ctx.elements()] if p1 == "*" else [p1]
        for p in firsts:
            D = family(f1).instantiate(ctx, p)
            E = family(f2).instantiate(ctx, p2)
            checked += 1
            g = dia_isomorphic(D, E)
            if g is not None:
                found.append(f"{f1}{list(p)} ~ {f2} over {s} via {g}")
    return not found, "; ".join(found) if found else f"{checked} pairs, no witness"


def criterion_7():
    ok = True
    parts = []
    for s in ("GF(5)", "GF(7)"):
        rep = verify_wi_correspondence(make_field(s))
        ok &= rep["all_claims_confirmed"] and bool(rep["unhit"])
        parts.append(f"{s}: claims confirmed={rep['all_claims_confirmed']}, unhit={rep['unhit']}")
    return ok, "; ".join(parts)


def _stabilizer_order(alg) -> int:
    ctx = alg.ctx
    if isinstance(alg, DiMSC):
        return sum(aut_check(g, alg.left) and aut_check(g, alg.right) for g in gl2_elements(ctx))
    return sum(aut_check(g, alg) for g in gl2_elements(ctx))


def criterion_8():
    bad = []
    n = 0
    for s in ("GF(2)", "GF(3)", "GF(5)"):
        ctx = make_field(s)
        order = gl2_order(ctx)
        for r in (census_associative(ctx), census_diassociative(ctx)):
            for rec in r.records:
                n += 1
                alg = decode_algebra(ctx, rec.orbit_code, r.kind == "diassociative")
                aut = _stabilizer_order(alg)
                if rec.orbit_size * aut != order or aut != rec.aut_order:
                    bad.append(f"{s} {rec.orbit_key}: {rec.orbit_size} x {aut} != {order}")
    return not bad, "; ".join(bad) if bad else f"{n} classes satisfy |orbit| x |Aut| = |GL(2,q)|"


CRITERIA = {
    1: ("catalog conformance", criterion_1),
    2: ("scalar/matrix equivalence", criterion_2),
    3: ("associative census complete and disjoint", criterion_3),
    4: ("diassociative census complete and disjoint", criterion_4),
    5: ("printed automorphism groups", criterion_5),
    6: ("asserted non-isomorphisms", criterion_6),
    7: ("four-class correspondence", criterion_7),
    8: ("orbit-stabilizer identity", criterion_8),
}


def run(k: int):
    name, fn = CRITERIA[k]
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    in_time = dt <= BUDGET[k]
    verdict = "PASS" if ok and in_time else "FAIL"
    timing = f"{dt:.2f}s / budget {BUDGET[k]:.0f}s" + ("" if in_time else " EXCEEDED")
    line = f"criterion {k} {verdict}: {name} [{timing}] {detail}"
    return ok and in_time, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, line = run(k)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [run(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
