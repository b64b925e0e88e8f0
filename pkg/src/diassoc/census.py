"""Exhaustive censuses over small finite fields.

Every MSC (or every pair of MSCs) is enumerated, filtered by the axioms,
partitioned into GL(2, q) orbits and reconciled against the catalog.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _mat
from ._vec import FA, all_zero, columns, encode, product_array
from .axioms import axiom2_system, axiom3_system, axiom4_system, gse_system
from .catalog import CanonicalLabel, family, representatives
from .dialgebra import DiMSC
from .field import FieldCtx, UnsupportedError
from .msc import MSC, assoc_defect
from .search import (
    _first_witness,
    code_of,
    decode_algebra,
    gl2_indices,
    gl2_order,
    msc_indices,
    orbit_codes,
)

__all__ = [
    "BudgetExceeded",
    "ClassRecord",
    "CensusReport",
    "census_associative",
    "census_general",
    "census_diassociative",
    "verify_wi_correspondence",
    "WI_DIAS",
]

ASSOC_MAX_Q = 7
DIA_MAX_Q = 5


class BudgetExceeded(UnsupportedError):
    """The requested census is larger than the enumeration budget."""


@dataclass(frozen=True)
class ClassRecord:
    orbit_key: str
    orbit_code: int
    orbit_size: int
    aut_order: int
    label: str  # catalog label, or "GAP"
    params: tuple = ()


@dataclass(frozen=True)
class CensusReport:
    field: str
    kind: str
    total: int
    passing: int
    classes: int
    records: tuple
    complete: bool
    disjoint: bool
    unmatched: tuple
    unhit: tuple
    resolutions: tuple = ()
    collisions: tuple = ()
    cross_check: dict = field(default_factory=dict)
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self, include_time: bool = True) -> dict:
        d = asdict(self)
        d["records"] = [asdict(r) | {"params": list(r.params)} for r in self.records]
        for k in ("unmatched", "unhit", "resolutions", "collisions"):
            d[k] = [list(v) if isinstance(v, tuple) else v for v in d[k]]
        if not include_time:
            d.pop("wall_time")
        return d

    def to_json(self, include_time: bool = True) -> str:
        return json.dumps(self.to_dict(include_time), sort_keys=True, default=_json_default)

    def to_text(self) -> str:
        lines = [
            f"census {self.kind} over {self.field}",
            f"  enumerated {self.total}, passing {self.passing}, nontrivial classes {self.classes}",
            f"  complete: {str(self.complete).lower()}   disjoint: {str(self.disjoint).lower()}",
        ]
        w = max([len(r.orbit_key) for r in self.records] + [9])
        lines.append(f"  {'orbit key':<{w}}  {'|orbit|':>7}  {'|Aut|':>6}  label")
        for r in self.records:
            lab = r.label + (f"({', '.join(r.params)})" if r.params else "")
            lines.append(f"  {r.orbit_key:<{w}}  {r.orbit_size:>7}  {r.aut_order:>6}  {lab}")
        for u in self.unmatched:
            lines.append(f"  CLASSIFICATION-GAP: {u}")
        for u in self.unhit:
            lines.append(f"  catalog instance not found: {u}")
        for fam, groups in self.resolutions:
            lines.append(f"  {fam}: parameter classes {groups}")
        for c in self.collisions:
            lines.append(f"  same orbit: {', '.join(c)}")
        for k, v in sorted(self.cross_check.items()):
            lines.append(f"  cross-check {k}: {v}")
        lines.append(f"  wall time {self.wall_time:.2f}s")
        return "\n".join(lines)


def _json_default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(o)


# -- enumeration ----------------------------------------------------------------


def _check_budget(ctx: FieldCtx, limit: int):
    if not ctx.is_finite:
        raise UnsupportedError("a census needs a finite field")
    if ctx.order > limit:
        raise BudgetExceeded(f"census over {ctx} exceeds the enumeration budget (q <= {limit})")


def _assoc_shard(ctx: FieldCtx, prefix: tuple, kind: str):
    """Passing codes of one shard plus the matrix-form passing count."""
    arr = product_array(ctx.order, 8, prefix)
    cols = columns(ctx, arr)
    codes = encode(ctx, cols)
    if kind == "general":
        return codes, len(codes)
    scalar = all_zero(gse_system(*cols))
    M = [cols[:4], cols[4:]]
    matrix = all_zero(v for r in assoc_defect(M) for v in r)
    return codes[scalar], int(matrix.sum())


def _run_shards(fn, ctx, tasks, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, *zip(*[(ctx,) + t for t in tasks])))
    return [fn(ctx, *t) for t in tasks]


def _orbits(ctx: FieldCtx, codes: np.ndarray, dialgebra: bool):
    """Deterministic reduction: ascending codes, the first unvisited one is an orbit minimum."""
    remaining = set(codes.tolist())
    out = []
    for c in sorted(remaining):
        if c not in remaining:
            continue
        alg = decode_algebra(ctx, c, dialgebra)
        oc = orbit_codes(alg)
        members = set(np.unique(oc).tolist())
        stab = int((oc == c).sum())
        if not members <= remaining:  # pragma: no cover - axioms are GL-invariant
            raise AssertionError("orbit leaves the passing set")
        remaining -= members
        out.append((c, alg, len(members), stab))
    return out


def _catalog_orbits(ctx: FieldCtx, kind: str):
    """orbit code -> labels of every normalized catalog instance in it."""
    by_code: dict[int, list[CanonicalLabel]] = {}
    for label, inst in representatives(ctx.char_class, kind, ctx):
        by_code.setdefault(int(orbit_codes(inst).min()), []).append(label)
    return by_code


def _fmt_params(ctx, params):
    return tuple(ctx.fmt(p) for p in params)


def _label_str(ctx, lab: CanonicalLabel):
    return lab.family_id + (f"({', '.join(_fmt_params(ctx, lab.params))})" if lab.params else "")


def _reconcile(ctx, kind, orbits, total, passing, cross, t0, extra_unhit_ok=()):
    catalog = _catalog_orbits(ctx, kind)
    records, unmatched = [], []
    zero = 0
    hit = set()
    n_classes = 0
    for c, alg, size, stab in orbits:
        if c == zero:
            continue
        n_classes += 1
        labels = catalog.get(c)
        if labels:
            lab = labels[0]
            hit.add(c)
            records.append(ClassRecord(str(alg), c, size, stab, lab.family_id, _fmt_params(ctx, lab.params)))
        else:
            records.append(ClassRecord(str(alg), c, size, stab, "GAP"))
            unmatched.append(str(alg))
    collisions, resolutions = [], {}
    for c, labels in sorted(catalog.items()):
        if len(labels) < 2:
            continue
        fams = {l.family_id for l in labels}
        if len(fams) == 1 and family(labels[0].family_id).equivalence == "unresolved":
            continue
        collisions.append(tuple(_label_str(ctx, l) for l in labels))
    # parameter-orbit identification for families the catalog leaves unresolved
    for c, labels in sorted(catalog.items()):
        for l in labels:
            if family(l.family_id).equivalence == "unresolved":
                resolutions.setdefault(l.family_id, {}).setdefault(c, []).append(_fmt_params(ctx, l.params))
    res = tuple(
        (fid, tuple(tuple(",".join(p) for p in grp) for grp in groups.values()))
        for fid, groups in sorted(resolutions.items())
    )
    unhit = tuple(_label_str(ctx, l) for c, labels in sorted(catalog.items()) if c not in hit for l in labels)
    return CensusReport(
        field=ctx.descriptor(),
        kind=kind,
        total=total,
        passing=passing,
        classes=n_classes,
        records=tuple(records),
        complete=not unmatched,
        disjoint=not collisions,
        unmatched=tuple(unmatched),
        unhit=unhit,
        resolutions=res,
        collisions=tuple(collisions),
        cross_check=cross,
        wall_time=time.perf_counter() - t0,
    )


def _census_algebras(ctx: FieldCtx, kind: str, jobs: int) -> CensusReport:
    _check_budget(ctx, ASSOC_MAX_Q)
    t0 = time.perf_counter()
    q = ctx.order
    tasks = [(tuple(p), kind) for p in product_array(q, 3).tolist()]
    parts = _run_shards(_assoc_shard, ctx, tasks, jobs)
    codes = np.concatenate([p[0] for p in parts])
    matrix_count = sum(p[1] for p in parts)
    orbits = _orbits(ctx, codes, False)
    cross = {"matrix_form_passing": matrix_count, "scalar_form_passing": int(len(codes))}
    if kind == "general":
        cross = {}
    return _reconcile(ctx, kind, orbits, q**8, int(len(codes)), cross, t0)


def census_associative(ctx: FieldCtx, jobs: int = 1) -> CensusReport:
    """All q^8 MSCs, filtered by the associativity equations, against the associative catalog."""
    return _census_algebras(ctx, "associative", jobs)


def census_general(ctx: FieldCtx, jobs: int = 1) -> CensusReport:
    """All q^8 MSCs against the catalog of all 2-dimensional algebras."""
    return _census_algebras(ctx, "general", jobs)


# -- dialgebras -----------------------------------------------------------------


def _valid_right(ctx: FieldCtx, left_idx) -> np.ndarray:
    """Codes (right part only) of every B making (A, B) diassociative, A associative.

    Axioms are tested cheapest first: 3, 2, 4, 5.
    """
    q = ctx.order
    arr = product_array(q, 8)
    A = [FA(ctx, np.int64(i)) for i in left_idx]
    systems = (axiom3_system, axiom2_system, axiom4_system)
    for system in systems:
        B = columns(ctx, arr)
        arr = arr[all_zero(system(*A, *B))]
    B = columns(ctx, arr)
    arr = arr[all_zero(gse_system(*B))]
    return encode(ctx, columns(ctx, arr))


def _dia_codes_full(ctx: FieldCtx, jobs: int):
    q = ctx.order
    assoc, _ = _assoc_shard(ctx, (), "associative")
    lefts = [decode_algebra(ctx, int(c), False) for c in assoc]
    tasks = [(msc_indices(A),) for A in lefts]
    rights = _run_shards(_valid_right, ctx, tasks, jobs)
    shift = q**8
    codes = np.concatenate([int(c) * shift + r for c, r in zip(assoc, rights)])
    return codes, len(assoc)


def _dia_orbits_by_left(ctx: FieldCtx, jobs: int):
    """Orbit reduction through associative orbit representatives.

    Pairs (A, B) with A in the orbit of A0 are GL-conjugate to pairs (A0, B'),
    so classes are the Aut(A0)-orbits on the valid B for each representative.
    """
    q = ctx.order
    assoc, _ = _assoc_shard(ctx, (), "associative")
    left_orbits = _orbits(ctx, assoc, False)
    G = gl2_indices(ctx)
    tasks = [(msc_indices(A0),) for _, A0, _, _ in left_orbits]
    rights = _run_shards(_valid_right, ctx, tasks, jobs)
    out = []
    passing = 0
    for (c0, A0, size0, _), valid in zip(left_orbits, rights):
        passing += size0 * len(valid)
        stab_rows = G[orbit_codes(A0) == c0]
        remaining = set(valid.tolist())
        for rc in sorted(remaining):
            if rc not in remaining:
                continue
            B = decode_algebra(ctx, rc, False)
            remaining -= set(orbit_codes(B, stab_rows).tolist())
            D = DiMSC(A0, B)
            oc = orbit_codes(D)
            key = int(oc.min())
            out.append((key, decode_algebra(ctx, key, True), len(np.unique(oc)), int((oc == code_of(D)).sum())))
    out.sort(key=lambda r: r[0])
    return out, passing, len(assoc)


def census_diassociative(ctx: FieldCtx, jobs: int = 1, method: str = "auto") -> CensusReport:
    """Every (associative A, any B) pair, filtered by the dialgebra axioms.

    method "full" enumerates all pairs and reduces orbits directly; "orbit"
    works through orbit representatives of A.  "auto" picks "full" for q <= 3.
    """
    _check_budget(ctx, DIA_MAX_Q)
    if method == "auto":
        method = "full" if ctx.order <= 3 else "orbit"
    t0 = time.perf_counter()
    q = ctx.order
    if method == "full":
        codes, n_assoc = _dia_codes_full(ctx, jobs)
        orbits = _orbits(ctx, codes, True)
        passing = len(codes)
    elif method == "orbit":
        orbits, passing, n_assoc = _dia_orbits_by_left(ctx, jobs)
    else:
        raise ValueError(f"unknown method {method!r}")
    cross = {"associative_left": n_assoc, "method": method}
    return _reconcile(ctx, "diassociative", orbits, n_assoc * q**8, int(passing), cross, t0)


# -- the four-class list over the complex numbers -------------------------------

WI_DIAS = (
    ("Dias1", ("1 0 0 0", "0 0 1 0"), ("1 0 0 0", "0 0 0 0"), ("D3^5", (0,))),
    ("Dias2", ("1 0 0 0", "0 0 0 0"), ("1 0 0 0", "0 1 0 0"), ("D3^3", ())),
    ("Dias3", ("0 0 0 0", "1 0 0 0"), ("0 0 0 0", "a 0 0 0"), ("D13^1", None)),
    ("Dias4", ("1 0 0 0", "0 0 1 0"), ("1 0 0 0", "0 1 0 0"), ("D3^6", ())),
)


def _wi_instance(ctx, left, right, alpha):
    def row(s):
        return [alpha if v == "a" else int(v) for v in s.split()]

    return DiMSC(MSC.of(ctx, row(left[0]), row(left[1])), MSC.of(ctx, row(right[0]), row(right[1])))


def verify_wi_correspondence(ctx: FieldCtx) -> dict:
    """Match each of the four classical classes to its claimed catalog class.

    Dias3 carries a parameter; it is checked for every field value against
    the catalog instance with the same parameter.
    """
    if ctx.char_class != "not23":
        raise ValueError("the four-class list applies in characteristic other than 2 and 3")
    if not ctx.is_finite:
        raise UnsupportedError("witness search needs a finite field")
    catalog = _catalog_orbits(ctx, "diassociative")
    matches = []
    hit = set()
    for name, left, right, (fid, params) in WI_DIAS:
        alphas = ctx.elements() if params is None else [None]
        for a in alphas:
            D = _wi_instance(ctx, left, right, a)
            p = (a,) if params is None else tuple(ctx.coerce(v) for v in params)
            target = family(fid).instantiate(ctx, p)
            g = _first_witness(target, D)
            key = int(orbit_codes(D).min())
            hit.add(key)
            found = [_label_str(ctx, l) for l in catalog.get(key, [])]
            matches.append(
                {
                    "name": name if a is None else f"{name}({ctx.fmt(a)})",
                    "claimed": _label_str(ctx, CanonicalLabel(fid, p, ctx.char_class)),
                    "witness": None if g is None else [ctx.fmt(v) for v in g.entries],
                    "matched": found or ["GAP"],
                }
            )
    unhit = [_label_str(ctx, l) for c, labels in sorted(catalog.items()) if c not in hit for l in labels]
    return {
        "field": ctx.descriptor(),
        "matches": matches,
        "all_claims_confirmed": all(m["witness"] is not None for m in matches),
        "unhit": unhit,
    }
