"""Text format for algebras and dialgebras, and rendering of results.

A document names its field, optionally its kind, then gives the products
either as a raw MSC row or as a multiplication table::

    # comments run to end of line
    field GF(5)
    algebra
    msc 0 0 0 0 | 1 0 0 0

    field Q
    table
    e1*e1 = e2
    e2*e1 = 1/2 e1 - e2

    field GF(2^2)
    dialgebra
    left [0,1] 0 0 0 | 0 0 0 0
    right table
    e1*e1 = [1,1]*e2

Table products not mentioned are zero; stating a product twice is an error.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .catalog import CanonicalLabel
from .dialgebra import DiMSC
from .field import FieldCtx, FieldError, make_field
from .msc import GL2, MSC

__all__ = ["ParseError", "Verdict", "parse_algebra", "parse_document", "render", "to_document"]


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        self.line, self.col = line, col
        super().__init__(f"line {line}, column {col}: {msg}")


@dataclass(frozen=True)
class Verdict:
    """A named yes/no answer with optional diagnostic detail."""

    name: str
    value: bool
    detail: tuple = ()


_TOKEN = re.compile(r"\[[^\]]*\]|\||[^\s|]+")
_PRODUCT = re.compile(r"^\s*e([12])\s*\*\s*e([12])\s*=\s*(.*?)\s*$")
_TERM = re.compile(
    r"\s*([+-])?\s*(\[[^\]]*\]|\d+(?:\s*/\s*\d+)?)?\s*(\*)?\s*(e[12])?\s*"
)


def _strip(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _elem(ctx: FieldCtx, tok: str, ln: int, col: int):
    try:
        return ctx.parse(tok)
    except (FieldError, ZeroDivisionError) as e:
        raise ParseError(str(e), ln, col) from None


def _msc_row(ctx: FieldCtx, text: str, ln: int, offset: int) -> MSC:
    toks = [(m.group(), m.start() + offset + 1) for m in _TOKEN.finditer(text)]
    words = [t for t, _ in toks]
    if words.count("|") != 1 or len(words) != 9 or words[4] != "|":
        col = toks[0][1] if toks else offset + 1
        raise ParseError("expected 4 entries, '|', 4 entries", ln, col)
    vals = [_elem(ctx, t, ln, c) for t, c in toks if t != "|"]
    return MSC(ctx, tuple(vals))


def _rhs(ctx: FieldCtx, text: str, ln: int, offset: int):
    """Parse 'c1 e1 + c2 e2' (or 0) into the coordinate pair."""
    coords = [ctx.zero, ctx.zero]
    if text.strip() == "0":
        return coords
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, coef, star, basis = m.group(1), m.group(2), m.group(3), m.group(4)
        col = offset + pos + 1
        if m.end() == pos or basis is None or (sign is None and not first):
            raise ParseError(f"bad term in {text.strip()!r}", ln, col)
        c = _elem(ctx, coef.replace(" ", ""), ln, col) if coef else ctx.one
        if sign == "-":
            c = ctx.neg(c)
        k = int(basis[1]) - 1
        coords[k] = ctx.add(coords[k], c)
        first = False
        pos = m.end()
    return coords


def _table(ctx: FieldCtx, lines, start: int, stop_words=()) -> tuple[MSC, int]:
    """Read product lines from lines[start:]; return the MSC and the next index."""
    entries = {}
    i = start
    while i < len(lines):
        ln, raw = lines[i]
        body = _strip(raw)
        if not body.strip():
            i += 1
            continue
        if body.split()[0] in stop_words:
            break
        m = _PRODUCT.match(body)
        if not m:
            raise ParseError("expected a product 'ei*ej = ...'", ln, len(body) - len(body.lstrip()) + 1)
        key = (int(m.group(1)), int(m.group(2)))
        if key in entries:
            raise ParseError(f"product e{key[0]}*e{key[1]} given twice", ln, 1)
        entries[key] = _rhs(ctx, m.group(3), ln, m.start(3))
        i += 1
    cols = [entries.get(k, [ctx.zero, ctx.zero]) for k in ((1, 1), (1, 2), (2, 1), (2, 2))]
    return MSC(ctx, tuple(c[0] for c in cols) + tuple(c[1] for c in cols)), i


def _block(ctx, lines, i, head_rest, ln, offset, stop_words):
    """A 'msc ...' / 'table' block whose head is the remainder of the current line."""
    rest = head_rest.strip()
    if rest.startswith("table"):
        if rest != "table":
            raise ParseError("nothing may follow 'table'", ln, offset + 6)
        return _table(ctx, lines, i + 1, stop_words)
    if rest.startswith("msc"):
        lead = len(head_rest) - len(head_rest.lstrip()) + 3
        return _msc_row(ctx, head_rest[lead:], ln, offset + lead), i + 1
    # 'left 1 0 0 0 | ...' without the msc keyword
    return _msc_row(ctx, head_rest, ln, offset), i + 1


def parse_document(text: str):
    """Parse to (ctx, kind, MSC | DiMSC) with kind 'algebra' or 'dialgebra'."""
    lines = [(n + 1, l) for n, l in enumerate(text.splitlines())]
    content = [(n, l) for n, l in lines if _strip(l).strip()]
    if not content:
        raise ParseError("empty document", 1, 1)
    ln, raw = content[0]
    body = _strip(raw).strip()
    if not body.startswith("field"):
        raise ParseError("document must start with 'field <F>'", ln, raw.find(body[:1]) + 1)
    try:
        ctx = make_field(body[5:].strip())
    except FieldError as e:
        raise ParseError(str(e), ln, raw.find("field") + 7) from None
    idx = lines.index(content[0]) + 1
    kind = None
    result = None
    left = right = None
    while idx < len(lines):
        ln, raw = lines[idx]
        body = _strip(raw)
        if not body.strip():
            idx += 1
            continue
        word = body.split()[0]
        col = body.find(word) + 1
        rest_off = body.find(word) + len(word)
        rest = body[rest_off:]
        if word in ("algebra", "dialgebra"):
            if kind is not None or result is not None or left is not None:
                raise ParseError(f"unexpected '{word}'", ln, col)
            if rest.strip():
                raise ParseError(f"nothing may follow '{word}'", ln, rest_off + 1)
            kind = word
            idx += 1
        elif word in ("msc", "table"):
            if kind == "dialgebra" or result is not None or left is not None:
                raise ParseError(f"unexpected '{word}'", ln, col)
            result, idx = _block(ctx, lines, idx, body, ln, 0, ())
            kind = "algebra"
        elif word in ("left", "right"):
            if kind == "algebra" or result is not None:
                raise ParseError(f"'{word}' belongs to a dialgebra", ln, col)
            if (word == "left" and left is not None) or (word == "right" and right is not None):
                raise ParseError(f"'{word}' given twice", ln, col)
            m, idx = _block(ctx, lines, idx, rest, ln, rest_off, ("left", "right"))
            if word == "left":
                left = m
            else:
                right = m
            kind = "dialgebra"
        else:
            raise ParseError(f"unknown keyword {word!r}", ln, col)
    if kind == "dialgebra":
        if left is None or right is None:
            raise ParseError("a dialgebra needs both 'left' and 'right'", lines[-1][0], 1)
        return ctx, kind, DiMSC(left, right)
    if result is None:
        raise ParseError("no 'msc' or 'table' block", lines[-1][0], 1)
    return ctx, "algebra", result


def parse_algebra(text: str):
    """(FieldCtx, MSC | DiMSC) from a document."""
    ctx, _, alg = parse_document(text)
    return ctx, alg


def _row(A: MSC) -> str:
    f = A.ctx.fmt
    return " ".join(map(f, A.entries[:4])) + " | " + " ".join(map(f, A.entries[4:]))


def to_document(A) -> str:
    """Matrix-form document for an MSC or DiMSC."""
    ctx = A.ctx
    if isinstance(A, DiMSC):
        return f"field {ctx.descriptor()}\ndialgebra\nleft {_row(A.left)}\nright {_row(A.right)}\n"
    return f"field {ctx.descriptor()}\nalgebra\nmsc {_row(A)}\n"


def _jsonable(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


def _dump(obj) -> str:
    return json.dumps(_jsonable(obj), separators=(",", ":"))


def render(result, format: str = "text") -> str:
    """Deterministic text or JSON for labels, verdicts, algebras, matrices and reports."""
    if format not in ("text", "json"):
        raise ValueError(f"unknown format {format!r}")
    js = format == "json"
    from .census import CensusReport

    if isinstance(result, CanonicalLabel):
        if js:
            return _dump({"label": result.family_id, "params": list(result.params), "char_class": result.char_class})
        return str(result)
    if isinstance(result, Verdict):
        if js:
            d = {"check": result.name, "value": result.value}
            if result.detail:
                d["detail"] = list(result.detail)
            return _dump(d)
        s = f"{result.name}: {str(result.value).lower()}"
        if result.detail:
            s += " (" + ", ".join(map(str, result.detail)) + ")"
        return s
    if isinstance(result, bool):
        return _dump(result) if js else str(result).lower()
    if isinstance(result, CensusReport):
        return result.to_json() if js else result.to_text()
    if isinstance(result, (MSC, DiMSC)):
        if not js:
            return to_document(result)
        ctx = result.ctx
        if isinstance(result, DiMSC):
            return _dump(
                {
                    "field": ctx.descriptor(),
                    "kind": "dialgebra",
                    "left": [ctx.to_json(e) for e in result.left.entries],
                    "right": [ctx.to_json(e) for e in result.right.entries],
                }
            )
        return _dump({"field": ctx.descriptor(), "kind": "algebra", "msc": [ctx.to_json(e) for e in result.entries]})
    if isinstance(result, GL2):
        return _dump([result.ctx.to_json(e) for e in result.entries]) if js else str(result)
    if isinstance(result, dict):
        if js:
            return _dump(result)
        return "\n".join(f"{k}: {v}" for k, v in result.items())
    if js:
        return _dump(result)
    return str(result)
