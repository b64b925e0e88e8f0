"""Classification tables for 2-dimensional algebras, associative algebras and
associative dialgebras, in the three characteristic regimes.

Templates are written as affine expressions in the family parameters, one
string per MSC entry (8 for an algebra, 16 for a dialgebra: left then
right).  Parameter names: a1..a4 / b1..b4 for the left matrix rows,
c1..c4 / d1..d4 for the right matrix rows.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .dialgebra import DiMSC, dia_check
from .field import FE, FieldCtx, UnsupportedError, polynomial_has_root, square_class_rep
from .msc import MSC, assoc_matrix_check

__all__ = [
    "Family",
    "CanonicalLabel",
    "AutShape",
    "FAMILIES",
    "family",
    "families",
    "representatives",
    "normalize_params",
    "side_condition_ok",
    "admissible",
    "aut_shape",
    "AUT_SHAPES",
    "catalog_key_index",
    "KINDS",
]

KINDS = ("general", "associative", "diassociative")
CHAR_CLASSES = ("not23", "char2", "char3")

_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([a-z]\d)?\s*")


def _parse_affine(expr: str):
    """'2a1-1' -> (Fraction(-1), {'a1': Fraction(2)})."""
    const = Fraction(0)
    coeffs: dict[str, Fraction] = {}
    pos = 0
    s = expr.replace(" ", "")
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad template entry {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        num = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            coeffs[m.group(3)] = coeffs.get(m.group(3), Fraction(0)) + sign * num
        else:
            const += sign * num
        pos = m.end()
    return const, coeffs


# -- equivalence maps ----------------------------------------------------------
# Each takes (ctx, params-as-FE tuple) and yields equivalent parameter tuples
# (as FE tuples).  Values of the free auxiliary parameters a, b range over the
# field as the catalog states.


def _nz(ctx):
    return [FE(ctx, a) for a in ctx.nonzero()]


def _all(ctx):
    return [FE(ctx, a) for a in ctx.elements()]


def _square_map(pos):
    def m(ctx, p):
        for a in _nz(ctx):
            q = list(p)
            q[pos] = a * a * p[pos]
            yield tuple(q)

    return m


def _cube_pm(ctx, p):
    (b,) = p
    for a in _nz(ctx):
        yield (a * a * a * b,)
        if not b.is_zero():
            yield (a * a * a * b.inv(),)


def _a10_map(ctx, p):
    (b,) = p
    for t in _all(ctx):
        den = b * t * t + b * t + 1
        if den.is_zero():
            continue
        num = b * b * t * t * t + 6 * b * t * t + 3 * b * t + b - 2
        yield (num * num * (den * den * den).inv(),)


def _a82_map(ctx, p):
    (b,) = p
    for t in _all(ctx):
        den = b * t * t + b * t + 1
        if den.is_zero():
            continue
        num = b * b * t * t * t + b * t + b
        yield (num * num * (den * den * den).inv(),)


def _a93_map(ctx, p):
    (b,) = p
    for t in _all(ctx):
        den = b * t * t + b * t + 1
        if den.is_zero():
            continue
        num = b * b * t * t * t + b - 2
        yield (num * num * (den * den * den).inv(),)


def _a42_map(ctx, p):
    a1, b1, b2 = p
    for a in _all(ctx):
        yield (a1, b1 + (1 + b2) * a + a * a, b2)


def _a72_map(ctx, p):
    a1, b1 = p
    for a in _all(ctx):
        yield (a1, b1 + a * a1 + a + a * a)


def _artin_schreier(ctx, p):
    (b1,) = p
    for a in _all(ctx):
        yield (b1 + a + a * a,)


def _a112_map(ctx, p):
    (b1,) = p
    for a in _all(ctx):
        for b in _nz(ctx):
            yield (b * b * (b1 + a * a),)


# -- side conditions ------------------------------------------------------------
# Each returns the factor polynomials (constant term first) that must have no
# root in the field.


def _sc_a10(p):
    (b,) = p
    return [[-1, -3, 0, b], [1, b, b], [b - 2, 3 * b, 6 * b, b * b]]


def _sc_cube(p):
    (b,) = p
    return [[b, 0, 0, -1]]


def _sc_cube_plus(p):
    (b,) = p
    return [[b, 0, 0, 1]]


def _sc_a82(p):
    (b,) = p
    return [[1, 1, 0, b], [1, b, b]]


def _sc_a93(p):
    (b,) = p
    return [[b, 0, 0, -1], [1, b, b], [b - 2, 0, 0, b * b]]


@dataclass(frozen=True)
class Family:
    """One entry of a classification list."""

    id: str
    char_class: str
    kind: str
    params: tuple
    template: tuple
    nonzero: tuple = ()
    side: Optional[Callable] = field(default=None, compare=False)
    side_text: str = ""
    equivalence: str = "none"  # none | square | map | unresolved
    eq_map: Optional[Callable] = field(default=None, compare=False)
    eq_text: str = ""

    @property
    def affine(self):
        return tuple(_parse_affine(e) for e in self.template)

    @property
    def is_dialgebra(self) -> bool:
        return len(self.template) == 16

    def instantiate(self, ctx: FieldCtx, params=()):
        """The MSC (or DiMSC) at the given parameter values."""
        if len(params) != len(self.params):
            raise ValueError(f"{self.id} takes {len(self.params)} parameters, got {len(params)}")
        vals = dict(zip(self.params, (ctx.coerce(v) if not ctx.contains(v) else v for v in params)))
        entries = []
        for const, coeffs in self.affine:
            acc = ctx.from_fraction(const)
            for name, c in coeffs.items():
                acc = ctx.add(acc, ctx.mul(ctx.from_fraction(c), vals[name]))
            entries.append(acc)
        if self.is_dialgebra:
            return DiMSC(MSC(ctx, tuple(entries[:8])), MSC(ctx, tuple(entries[8:])))
        return MSC(ctx, tuple(entries))

    def match(self, algebra):
        """Parameters p with instantiate(p) == algebra, or None."""
        ctx = algebra.ctx
        entries = algebra.left.entries + algebra.right.entries if isinstance(algebra, DiMSC) else algebra.entries
        if len(entries) != len(self.template):
            return None
        params = []
        for name in self.params:
            for (const, coeffs), e in zip(self.affine, entries):
                if const == 0 and coeffs == {name: 1}:
                    params.append(e)
                    break
            else:  # pragma: no cover - every catalog parameter appears bare somewhere
                raise AssertionError(f"{self.id}: parameter {name} never appears alone")
        try:
            inst = self.instantiate(ctx, params)
        except Exception:
            return None
        return tuple(params) if inst == algebra else None

    def side_polynomials(self, ctx: FieldCtx, params) -> list[list]:
        if self.side is None:
            return []
        fp = tuple(FE(ctx, v) for v in params)
        out = []
        for poly in self.side(fp):
            out.append([c.v if isinstance(c, FE) else ctx.from_int(c) for c in poly])
        return out


@dataclass(frozen=True)
class CanonicalLabel:
    family_id: str
    params: tuple
    char_class: str

    @classmethod
    def zero(cls, char_class: str) -> "CanonicalLabel":
        return cls("zero", (), char_class)

    def __str__(self):
        if not self.params:
            return self.family_id
        return f"{self.family_id}({', '.join(map(_fmt_param, self.params))})"


def _fmt_param(v) -> str:
    if isinstance(v, tuple):
        return "[" + ",".join(map(str, v)) + "]"
    return str(v)


def _fam(id, cc, kind, params, template, **kw):
    rows = template.split("|")
    entries = tuple(e for r in rows for e in r.split())
    return Family(id, cc, kind, tuple(params.split()) if params else (), entries, **kw)


_G, _AS, _DI = "general", "associative", "diassociative"
_SQ = "a^2"

FAMILIES: tuple[Family, ...] = (
    # general algebras, characteristic not 2 or 3
    _fam("A1", "not23", _G, "a1 a2 a4 b1", "a1 a2 1+a2 a4 | b1 -a1 1-a1 -a2"),
    _fam("A2", "not23", _G, "a1 a4 b2", "a1 0 0 a4 | 1 b2 1-a1 0", nonzero=("a4",)),
    _fam("A3", "not23", _G, "a1 a4 b2", "a1 0 0 a4 | 0 b2 1-a1 0", equivalence="square",
         eq_map=_square_map(1), eq_text="a4 ~ a^2 a4"),
    _fam("A4", "not23", _G, "b1 b2", "0 1 1 0 | b1 b2 1 -1"),
    _fam("A5", "not23", _G, "a1", "a1 0 0 0 | 1 2a1-1 1-a1 0"),
    _fam("A6", "not23", _G, "a1 a4", "a1 0 0 a4 | 1 1-a1 -a1 0", nonzero=("a4",)),
    _fam("A7", "not23", _G, "a1 a4", "a1 0 0 a4 | 0 1-a1 -a1 0", equivalence="square",
         eq_map=_square_map(1), eq_text="a4 ~ a^2 a4"),
    _fam("A8", "not23", _G, "b1", "0 1 1 0 | b1 1 0 -1"),
    _fam("A9", "not23", _G, "", "1/3 0 0 0 | 1 2/3 -1/3 0"),
    _fam("A10", "not23", _G, "b1", "0 1 1 1 | b1 0 0 -1", side=_sc_a10,
         side_text="(b1 t^3 - 3t - 1)(b1 t^2 + b1 t + 1)(b1^2 t^3 + 6 b1 t^2 + 3 b1 t + b1 - 2) has no root",
         equivalence="map", eq_map=_a10_map,
         eq_text="b1 ~ (b1^2 t^3 + 6 b1 t^2 + 3 b1 t + b1 - 2)^2 / (b1 t^2 + b1 t + 1)^3"),
    _fam("A11", "not23", _G, "b1", "0 0 0 1 | b1 0 0 0", nonzero=("b1",), side=_sc_cube,
         side_text="b1 - t^3 has no root", equivalence="map", eq_map=_cube_pm,
         eq_text="b1 ~ a^3 b1^(+-1)"),
    _fam("A12", "not23", _G, "b1", "0 1 1 0 | b1 0 0 -1", equivalence="square",
         eq_map=_square_map(0), eq_text="b1 ~ a^2 b1"),
    _fam("A13", "not23", _G, "", "0 0 0 0 | 1 0 0 0"),
    # general algebras, characteristic 2
    _fam("A1,2", "char2", _G, "a1 a2 a4 b1", "a1 a2 1+a2 a4 | b1 a1 1+a1 a2"),
    _fam("A2,2", "char2", _G, "a1 a4 b2", "a1 0 0 a4 | 1 b2 1+a1 0", nonzero=("a4",)),
    _fam("A2,2'", "char2", _G, "a1", "a1 0 0 0 | 1 1 1+a1 0"),
    _fam("A3,2", "char2", _G, "a1 a4 b2", "a1 0 0 a4 | 0 b2 1+a1 0", equivalence="square",
         eq_map=_square_map(1), eq_text="a4 ~ a^2 a4"),
    _fam("A4,2", "char2", _G, "a1 b1 b2", "a1 1 1 0 | b1 b2 1+a1 1", equivalence="map",
         eq_map=_a42_map, eq_text="b1 ~ b1 + (1 + b2) a + a^2"),
    _fam("A5,2", "char2", _G, "a1 a4", "a1 0 0 a4 | 1 1+a1 a1 0", nonzero=("a4",)),
    _fam("A5,2'", "char2", _G, "", "1 0 0 0 | 1 0 1 0"),
    _fam("A6,2", "char2", _G, "a1 a4", "a1 0 0 a4 | 0 1+a1 a1 0", equivalence="square",
         eq_map=_square_map(1), eq_text="a4 ~ a^2 a4"),
    _fam("A7,2", "char2", _G, "a1 b1", "a1 1 1 0 | b1 1+a1 a1 1", equivalence="map",
         eq_map=_a72_map, eq_text="b1 ~ b1 + a a1 + a + a^2"),
    _fam("A8,2", "char2", _G, "b1", "0 1 1 1 | b1 0 0 1", side=_sc_a82,
         side_text="(b1 t^3 + t + 1)(b1 t^2 + b1 t + 1) has no root", equivalence="map",
         eq_map=_a82_map, eq_text="b1 ~ (b1^2 t^3 + b1 t + b1)^2 / (b1 t^2 + b1 t + 1)^3"),
    _fam("A9,2", "char2", _G, "b1", "0 0 0 1 | b1 0 0 0", side=_sc_cube_plus,
         side_text="b1 + t^3 has no root", equivalence="map", eq_map=_cube_pm,
         eq_text="b1 ~ a^3 b1^(+-1)"),
    _fam("A10,2", "char2", _G, "b1", "1 1 1 0 | b1 1 1 1", equivalence="map",
         eq_map=_artin_schreier, eq_text="b1 ~ b1 + a + a^2"),
    _fam("A11,2", "char2", _G, "b1", "0 1 1 0 | b1 0 0 1", equivalence="map",
         eq_map=_a112_map, eq_text="b1 ~ b^2 (b1 + a^2)"),
    _fam("A12,2", "char2", _G, "", "0 0 0 0 | 1 0 0 0"),
    # general algebras, characteristic 3
    _fam("A1,3", "char3", _G, "a1 a2 a4 b1", "a1 a2 a2+1 a4 | b1 -a1 1-a1 -a2"),
    _fam("A2,3", "char3", _G, "a1 a4 b2", "a1 0 0 a4 | 1 b2 1-a1 0", nonzero=("a4",)),
    _fam("A3,3", "char3", _G, "a1 a4 b2", "a1 0 0 a4 | 0 b2 1-a1 0", equivalence="square",
         eq_map=_square_map(1), eq_text="a4 ~ a^2 a4"),
    _fam("A4,3", "char3", _G, "b1 b2", "0 1 1 0 | b1 b2 1 -1"),
    _fam("A5,3", "char3", _G, "a1", "a1 0 0 0 | 1 2a1-1 1-a1 0"),
    _fam("A6,3", "char3", _G, "a1 a4", "a1 0 0 a4 | 1 1-a1 -a1 0", nonzero=("a4",)),
    _fam("A7,3", "char3", _G, "a1 a4", "a1 0 0 a4 | 0 1-a1 -a1 0", equivalence="square",
         eq_map=_square_map(1), eq_text="a4 ~ a^2 a4"),
    _fam("A8,3", "char3", _G, "b1", "0 1 1 0 | b1 1 0 -1"),
    _fam("A9,3", "char3", _G, "b1", "0 1 1 1 | b1 0 0 -1", side=_sc_a93,
         side_text="(b1 - t^3)(b1 t^2 + b1 t + 1)(b1^2 t^3 + b1 - 2) has no root", equivalence="map",
         eq_map=_a93_map, eq_text="b1 ~ (b1^2 t^3 + b1 - 2)^2 / (b1 t^2 + b1 t + 1)^3"),
    _fam("A10,3", "char3", _G, "b1", "0 0 0 1 | b1 0 0 0", nonzero=("b1",), side=_sc_cube,
         side_text="b1 - t^3 has no root", equivalence="map", eq_map=_cube_pm,
         eq_text="b1 ~ a^3 b1^(+-1)"),
    _fam("A11,3", "char3", _G, "b1", "0 1 1 0 | b1 0 0 -1", equivalence="square",
         eq_map=_square_map(0), eq_text="b1 ~ a^2 b1"),
    _fam("A12,3", "char3", _G, "", "1 0 0 0 | 1 -1 -1 0"),
    _fam("A13,3", "char3", _G, "", "0 0 0 0 | 1 0 0 0"),
    # associative algebras
    _fam("As13^1", "not23", _AS, "", "0 0 0 0 | 1 0 0 0"),
    _fam("As3^2", "not23", _AS, "", "1 0 0 0 | 0 0 0 0"),
    _fam("As3^3", "not23", _AS, "", "1 0 0 0 | 0 1 0 0"),
    _fam("As3^4", "not23", _AS, "", "1/2 0 0 0 | 0 0 1/2 0"),
    _fam("As3^5", "not23", _AS, "a4", "1/2 0 0 a4 | 0 1/2 1/2 0", equivalence="square",
         eq_map=_square_map(0), eq_text="a4 ~ a^2 a4"),
    _fam("As12,2^1", "char2", _AS, "", "0 0 0 0 | 1 0 0 0"),
    _fam("As11,2^2", "char2", _AS, "b1", "0 1 1 0 | b1 0 0 1", equivalence="map",
         eq_map=_a112_map, eq_text="b1 ~ b^2 (b1 + a^2)"),
    _fam("As6,2^3", "char2", _AS, "", "1 0 0 0 | 0 0 1 0"),
    _fam("As4,2^4", "char2", _AS, "b1", "1 1 1 0 | b1 0 0 1", equivalence="map",
         eq_map=_artin_schreier, eq_text="b1 ~ b1 + a + a^2"),
    _fam("As3,2^5", "char2", _AS, "", "1 0 0 0 | 0 0 0 0"),
    _fam("As3,2^6", "char2", _AS, "", "1 0 0 0 | 0 1 0 0"),
    _fam("As13,3^1", "char3", _AS, "", "0 0 0 0 | 1 0 0 0"),
    _fam("As3,3^2", "char3", _AS, "", "1 0 0 0 | 0 0 0 0"),
    _fam("As3,3^3", "char3", _AS, "", "1 0 0 0 | 0 1 0 0"),
    _fam("As3,3^4", "char3", _AS, "", "2 0 0 0 | 0 0 2 0"),
    _fam("As3,3^5", "char3", _AS, "a4", "2 0 0 a4 | 0 2 2 0", equivalence="square",
         eq_map=_square_map(0), eq_text="a4 ~ a^2 a4"),
    # associative dialgebras: left | right as 16 entries
    _fam("D13^1", "not23", _DI, "d1", "0 0 0 0 | 1 0 0 0 | 0 0 0 0 | d1 0 0 0", equivalence="unresolved"),
    _fam("D3^2", "not23", _DI, "", "1 0 0 0 | 0 0 0 0 | 1 0 0 0 | 0 0 0 0"),
    _fam("D3^3", "not23", _DI, "", "1 0 0 0 | 0 0 0 0 | 1 0 0 0 | 0 1 0 0"),
    _fam("D3^4", "not23", _DI, "", "1 0 0 0 | 0 1 0 0 | 1 0 0 0 | 0 1 0 0"),
    _fam("D3^5", "not23", _DI, "d1", "1/2 0 0 0 | 0 0 1/2 0 | 1/2 0 0 0 | d1 0 0 0", equivalence="unresolved"),
    _fam("D3^6", "not23", _DI, "", "1/2 0 0 0 | 0 0 1/2 0 | 1/2 0 0 0 | 0 1/2 0 0"),
    _fam("D3^7", "not23", _DI, "", "1/2 0 0 0 | 0 0 1/2 0 | 1/2 0 0 0 | 0 0 1/2 0"),
    _fam("D3^8", "not23", _DI, "a4", "1/2 0 0 a4 | 0 1/2 1/2 0 | 1/2 0 0 a4 | 0 1/2 1/2 0",
         equivalence="unresolved"),
    _fam("D12,2^1", "char2", _DI, "d1", "0 0 0 0 | 1 0 0 0 | 0 0 0 0 | d1 0 0 0", equivalence="unresolved"),
    _fam("D11,2^2", "char2", _DI, "b1", "0 1 1 0 | b1 0 0 1 | 0 1 1 0 | b1 0 0 1", equivalence="unresolved"),
    _fam("D6,2^3", "char2", _DI, "d1", "1 0 0 0 | 0 0 1 0 | 1 0 0 0 | d1 0 0 0", equivalence="unresolved"),
    _fam("D6,2^4", "char2", _DI, "", "1 0 0 0 | 0 0 1 0 | 1 0 0 0 | 0 1 0 0"),
    _fam("D6,2^5", "char2", _DI, "", "1 0 0 0 | 0 0 1 0 | 1 0 0 0 | 0 0 1 0"),
    _fam("D4,2^6", "char2", _DI, "", "1 1 1 0 | 0 0 0 1 | 1 1 1 0 | 0 0 0 1"),
    _fam("D3,2^7", "char2", _DI, "", "1 0 0 0 | 0 0 0 0 | 1 0 0 0 | 0 0 0 0"),
    _fam("D3,2^8", "char2", _DI, "", "1 0 0 0 | 0 0 0 0 | 1 0 0 0 | 0 1 0 0"),
    _fam("D3,2^9", "char2", _DI, "", "1 0 0 0 | 0 1 0 0 | 1 0 0 0 | 0 1 0 0"),
    _fam("D13,3^1", "char3", _DI, "d1", "0 0 0 0 | 1 0 0 0 | 0 0 0 0 | d1 0 0 0", equivalence="unresolved"),
    _fam("D3,3^2", "char3", _DI, "", "1 0 0 0 | 0 0 0 0 | 1 0 0 0 | 0 0 0 0"),
    _fam("D3,3^3", "char3", _DI, "", "1 0 0 0 | 0 0 0 0 | 1 0 0 0 | 0 1 0 0"),
    _fam("D3,3^4", "char3", _DI, "", "1 0 0 0 | 0 1 0 0 | 1 0 0 0 | 0 1 0 0"),
    _fam("D3,3^5", "char3", _DI, "d1", "2 0 0 0 | 0 0 2 0 | 2 0 0 0 | d1 0 0 0", equivalence="unresolved"),
    _fam("D3,3^6", "char3", _DI, "", "2 0 0 0 | 0 0 2 0 | 2 0 0 0 | 0 2 0 0"),
    _fam("D3,3^7", "char3", _DI, "", "2 0 0 0 | 0 0 2 0 | 2 0 0 0 | 0 0 2 0"),
    _fam("D3,3^8", "char3", _DI, "a4", "2 0 0 a4 | 0 2 2 0 | 2 0 0 a4 | 0 2 2 0", equivalence="unresolved"),
)

_BY_ID = {f.id: f for f in FAMILIES}


def family(family_id: str) -> Family:
    try:
        return _BY_ID[family_id]
    except KeyError:
        raise KeyError(f"unknown family {family_id!r}") from None


def families(char_class: str, kind: str) -> list[Family]:
    if char_class not in CHAR_CLASSES:
        raise ValueError(f"unknown characteristic class {char_class!r}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    return [f for f in FAMILIES if f.char_class == char_class and f.kind == kind]


def _coerce_params(ctx: FieldCtx, params) -> tuple:
    return tuple(ctx.coerce(v) if not ctx.contains(v) else v for v in params)


def side_condition_ok(family_id: str, params, ctx: FieldCtx) -> bool:
    """True iff none of the family's root-freeness polynomials has a root."""
    fam = family(family_id)
    params = _coerce_params(ctx, params)
    return not any(polynomial_has_root(ctx, poly) for poly in fam.side_polynomials(ctx, params))


def admissible(fam: Family, params, ctx: FieldCtx) -> bool:
    params = _coerce_params(ctx, params)
    for name, v in zip(fam.params, params):
        if name in fam.nonzero and ctx.is_zero(v):
            return False
    return side_condition_ok(fam.id, params, ctx)


def _param_key(ctx, params):
    return tuple(ctx.key(v) for v in params)


@lru_cache(maxsize=None)
def _components(fam: Family, ctx: FieldCtx) -> dict:
    """Map each admissible parameter tuple to the minimum of its equivalence class."""
    space = [p for p in itertools.product(ctx.elements(), repeat=len(fam.params)) if admissible(fam, p, ctx)]
    parent = {p: p for p in space}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    if fam.eq_map is not None:
        for p in space:
            for image in fam.eq_map(ctx, tuple(FE(ctx, v) for v in p)):
                q = tuple(v.v for v in image)
                if q in parent:
                    a, b = find(p), find(q)
                    if a != b:
                        parent[a] = b
    groups: dict = {}
    for p in space:
        groups.setdefault(find(p), []).append(p)
    rep = {}
    for members in groups.values():
        m = min(members, key=lambda v: _param_key(ctx, v))
        for p in members:
            rep[p] = m
    return rep


def normalize_params(family_id: str, params, ctx: FieldCtx) -> tuple:
    """Minimal parameter tuple reachable through the family's stated equivalence."""
    fam = family(family_id)
    params = _coerce_params(ctx, params)
    if len(params) != len(fam.params):
        raise ValueError(f"{family_id} takes {len(fam.params)} parameters")
    if fam.equivalence in ("none", "unresolved"):
        if fam.nonzero and not admissible(fam, params, ctx):
            raise ValueError(f"parameters {params} are not admissible for {family_id}")
        if fam.side is not None and not admissible(fam, params, ctx):
            raise ValueError(f"parameters {params} violate the side condition of {family_id}")
        return params
    if not ctx.is_finite:
        if fam.equivalence == "square" and len(params) >= 1:
            idx = _square_position(fam)
            out = list(params)
            out[idx] = square_class_rep(ctx, params[idx])
            return tuple(out)
        raise UnsupportedError(f"normalizing {family_id} over {ctx} is not supported")
    comps = _components(fam, ctx)
    if params not in comps:
        raise ValueError(f"parameters {params} are not admissible for {family_id}")
    return comps[params]


def _square_position(fam: Family) -> int:
    # square maps rescale the last parameter for A3/A7-type families, the only one otherwise
    return {"A3": 1, "A7": 1, "A3,2": 1, "A6,2": 1, "A3,3": 1, "A7,3": 1}.get(fam.id, len(fam.params) - 1)


def representatives(char_class: str, kind: str, ctx: FieldCtx) -> list:
    """One (CanonicalLabel, instance) per normalized catalog class over a finite field.

    Families with an unresolved equivalence contribute one entry per
    admissible parameter value; the census decides which of them merge.
    """
    if ctx.char_class != char_class:
        raise ValueError(f"{ctx} has characteristic class {ctx.char_class}, not {char_class}")
    if not ctx.is_finite:
        raise UnsupportedError("parameter enumeration needs a finite field; use families() for templates")
    out = []
    for fam in families(char_class, kind):
        if fam.equivalence in ("none", "unresolved"):
            reps = [p for p in itertools.product(ctx.elements(), repeat=len(fam.params)) if admissible(fam, p, ctx)]
        else:
            reps = sorted(set(_components(fam, ctx).values()), key=lambda v: _param_key(ctx, v))
        for p in reps:
            out.append((CanonicalLabel(fam.id, tuple(p), char_class), fam.instantiate(ctx, p)))
    return out


@lru_cache(maxsize=None)
def catalog_key_index(ctx: FieldCtx, kind: str) -> dict:
    """Orbit-key code -> CanonicalLabel for every representative (first label wins)."""
    from .search import orbit_key_code

    index = {}
    for label, inst in representatives(ctx.char_class, kind, ctx):
        index.setdefault(orbit_key_code(inst), label)
    return index


def conforms(fam: Family, ctx: FieldCtx, params) -> bool:
    inst = fam.instantiate(ctx, params)
    if fam.kind == "associative":
        return assoc_matrix_check(inst)
    if fam.kind == "diassociative":
        return dia_check(inst)
    return True


# -- automorphism groups --------------------------------------------------------


@dataclass(frozen=True)
class AutShape:
    """A parametric automorphism group as printed, with a correction when the
    printed set disagrees with brute force."""

    family_id: str
    case: str
    applies: Callable = field(compare=False)
    printed: Callable = field(compare=False)
    printed_text: str
    printed_order: Callable = field(compare=False)
    corrected: Optional[Callable] = field(default=None, compare=False)
    corrected_text: str = ""
    corrected_order: Optional[Callable] = field(default=None, compare=False)

    def predicate(self, use_printed: bool = False) -> Callable:
        if use_printed or self.corrected is None:
            return self.printed
        return self.corrected

    def order(self, q: int, use_printed: bool = False) -> int:
        if use_printed or self.corrected_order is None:
            return self.printed_order(q)
        return self.corrected_order(q)

    def members(self, ctx: FieldCtx, params=(), use_printed: bool = False) -> set:
        """(x, y, z, t) tuples of invertible matrices satisfying the predicate."""
        pred = self.predicate(use_printed)
        fp = tuple(FE(ctx, v) for v in _coerce_params(ctx, params))
        out = set()
        for g in itertools.product(ctx.elements(), repeat=4):
            x, y, z, t = (FE(ctx, v) for v in g)
            if (x * t - y * z).is_zero():
                continue
            if pred(fp, x, y, z, t):
                out.add(g)
        return out


def _always(p):
    return True


def _first_zero(p):
    return p[0].is_zero()


def _first_nonzero(p):
    return not p[0].is_zero()


def _nilpotent_shape(p, x, y, z, t):
    return not x.is_zero() and y.is_zero() and t == x * x


def _diag_1t(p, x, y, z, t):
    return x == 1 and y.is_zero() and z.is_zero() and not t.is_zero()


def _lower_1zt(p, x, y, z, t):
    return x == 1 and y.is_zero() and not t.is_zero()


def _diag_pm1(p, x, y, z, t):
    return x == 1 and y.is_zero() and z.is_zero() and (t == 1 or t == -1)


def _identity(p, x, y, z, t):
    return x == 1 and y.is_zero() and z.is_zero() and t == 1


_AUT_ROWS = [
    # (family, case, applies, printed, printed text, printed order, corrected, text, order)
    ("As13^1", "", _always, _nilpotent_shape, "(x 0 / z x^2), x != 0", lambda q: q * (q - 1)),
    ("As3^2", "", _always, _diag_1t, "(1 0 / 0 t), t != 0", lambda q: q - 1),
    ("As3^3", "", _always, _lower_1zt, "(1 0 / z t), t != 0", lambda q: q * (q - 1)),
    ("As3^4", "", _always, _lower_1zt, "(1 0 / z t), t != 0", lambda q: q * (q - 1)),
    ("As3^5", "a4 = 0", _first_zero, _diag_1t, "(1 0 / 0 t), t != 0", lambda q: q - 1),
    ("As3^5", "a4 != 0", _first_nonzero, _diag_pm1, "(1 0 / 0 +-1)", lambda q: 2),
    ("As12,2^1", "", _always, _nilpotent_shape, "(x 0 / z x^2), x != 0", lambda q: q * (q - 1)),
    ("As11,2^2", "", _always,
     lambda p, x, y, z, t: not x.is_zero() and y.is_zero() and t == 1 and z == p[0] * (x - 1),
     "(x 0 / b1(x - 1) 1), x != 0", lambda q: q - 1),
    ("As6,2^3", "", _always, _identity, "identity", lambda q: 1),
    ("As4,2^4", "b1 = 0", _first_zero,
     lambda p, x, y, z, t: not x.is_zero() and y.is_zero() and t == 1,
     "(x 0 / z 1), x != 0", lambda q: q * (q - 1)),
    ("As4,2^4", "b1 != 0", _first_nonzero,
     lambda p, x, y, z, t: x == 1 and y.is_zero() and t == 1, "(1 0 / z 1)", lambda q: q),
    ("As3,2^5", "", _always, _diag_1t, "(1 0 / 0 t), t != 0", lambda q: q - 1),
    ("As3,2^6", "", _always, _lower_1zt, "(1 0 / z t), t != 0", lambda q: q * (q - 1)),
    ("As13,3^1", "", _always,
     lambda p, x, y, z, t: not x.is_zero() and y.is_zero() and t == 2 * x * x,
     "(x 0 / z 2x^2)", lambda q: q * (q - 1)),
    ("As3,3^2", "", _always, _lower_1zt, "(1 0 / z t), t != 0", lambda q: q * (q - 1)),
    ("As3,3^3", "", _always, _diag_1t, "(1 0 / 0 t), t != 0", lambda q: q - 1),
    ("As3,3^4", "", _always,
     lambda p, x, y, z, t: x == 1 and y.is_zero() and not t.is_zero() and z == 1 + 2 * t,
     "(1 0 / 1 + 2t t), t != 0", lambda q: q - 1),
    ("As3,3^5", "a4 = 0", _first_zero, _identity, "identity", lambda q: 1),
    ("As3,3^5", "a4 != 0", _first_nonzero,
     lambda p, x, y, z, t: x == 1 and y.is_zero() and t == 1, "(1 0 / z 1)", lambda q: q),
]

# Corrections found by exhaustive search; keyed by (family, case).
def _swap_shape(p, x, y, z, t):
    return x == 1 and y.is_zero() and t == 1 and z * z == z


_AUT_CORRECTIONS = {
    ("As11,2^2", ""): (lambda p, x, y, z, t: not x.is_zero() and y.is_zero() and t == 1
                       and z * z == p[0] * (x - 1) * (x - 1),
                       "(x 0 / z 1), z^2 = b1(x - 1)^2, x != 0", lambda q: q - 1),
    ("As6,2^3", ""): (_lower_1zt, "(1 0 / z t), t != 0", lambda q: q * (q - 1)),
    ("As4,2^4", "b1 = 0"): (_swap_shape, "(1 0 / z 1), z in {0, 1}", lambda q: 2),
    ("As4,2^4", "b1 != 0"): (_swap_shape, "(1 0 / z 1), z in {0, 1}", lambda q: 2),
    ("As13,3^1", ""): (_nilpotent_shape, "(x 0 / z x^2), x != 0", lambda q: q * (q - 1)),
    ("As3,3^2", ""): (_diag_1t, "(1 0 / 0 t), t != 0", lambda q: q - 1),
    ("As3,3^3", ""): (_lower_1zt, "(1 0 / z t), t != 0", lambda q: q * (q - 1)),
    ("As3,3^4", ""): (_lower_1zt, "(1 0 / z t), t != 0", lambda q: q * (q - 1)),
    ("As3,3^5", "a4 = 0"): (_diag_1t, "(1 0 / 0 t), t != 0", lambda q: q - 1),
    ("As3,3^5", "a4 != 0"): (_diag_pm1, "(1 0 / 0 +-1)", lambda q: 2),
}

AUT_SHAPES: tuple[AutShape, ...] = tuple(
    AutShape(fid, case, applies, printed, text, order, *_AUT_CORRECTIONS.get((fid, case), (None, "", None)))
    for fid, case, applies, printed, text, order in _AUT_ROWS
)


def aut_shape(family_id: str, params=(), ctx: FieldCtx | None = None) -> AutShape:
    """The automorphism-group shape for an associative family (and parameter case)."""
    family(family_id)
    shapes = [s for s in AUT_SHAPES if s.family_id == family_id]
    if not shapes:
        raise KeyError(f"no automorphism group recorded for {family_id!r}")
    if len(shapes) == 1 or ctx is None and not params:
        if len(shapes) > 1 and not params:
            raise ValueError(f"{family_id} has several cases; pass params and ctx")
        return shapes[0]
    fp = tuple(FE(ctx, v) for v in _coerce_params(ctx, params))
    for s in shapes:
        if s.applies(fp):
            return s
    raise ValueError(f"no case of {family_id} applies to {params}")
