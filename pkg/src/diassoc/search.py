"""Brute-force GL(2, q) machinery over finite fields.

Every orbit computation applies all |GL(2, q)| basis changes at once as a
numpy batch.  Orbit keys are the minimal element of the orbit under the
row-major lexicographic encoding order; for a dialgebra the left matrix is
compared first.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Union

import numpy as np

from . import _mat
from ._vec import FA, encode
from .dialgebra import DiMSC, dia_check
from .field import FieldCtx, UnsupportedError
from .msc import GL2, MSC, _check_same, assoc_matrix_check

__all__ = [
    "ClassificationGap",
    "gl2_elements",
    "gl2_order",
    "isomorphic",
    "dia_isomorphic",
    "automorphism_group",
    "orbit_key",
    "orbit",
    "classify",
]

Algebra = Union[MSC, DiMSC]


class ClassificationGap(LookupError):
    """An algebra passed its axiom check but matches no catalog class."""

    def __init__(self, algebra, key):
        self.algebra = algebra
        self.key = key
        super().__init__(f"CLASSIFICATION-GAP: {algebra} (orbit key {key}) matches no catalog class")


def _require_finite(ctx: FieldCtx):
    if not ctx.is_finite:
        raise UnsupportedError("brute-force search needs a finite field")


@lru_cache(maxsize=None)
def gl2_indices(ctx: FieldCtx) -> np.ndarray:
    """(N, 4) index array of (x, y, z, t) for all invertible matrices, in encoding order."""
    _require_finite(ctx)
    q = ctx.order
    grid = np.indices((q,) * 4).reshape(4, -1).T.astype(np.int64)
    add, mul, neg, _ = ctx.tables
    det = add[mul[grid[:, 0], grid[:, 3]], neg[mul[grid[:, 1], grid[:, 2]]]]
    out = grid[det != 0]
    out.setflags(write=False)
    return out


def gl2_order(ctx: FieldCtx) -> int:
    q = ctx.order
    return (q * q - 1) * (q * q - q)


def gl2_elements(ctx: FieldCtx) -> Iterator[GL2]:
    """Every element of GL(2, q) exactly once, in encoding order."""
    els = ctx.elements()
    for row in gl2_indices(ctx):
        yield GL2(ctx, *(els[i] for i in row))


def _gl2_from_row(ctx: FieldCtx, row) -> GL2:
    els = ctx.elements()
    return GL2(ctx, *(els[int(i)] for i in row))


def _wrap_g(ctx: FieldCtx, G: np.ndarray):
    x, y, z, t = (FA(ctx, G[:, j]) for j in range(4))
    return [[x, y], [z, t]]


def _as_fa(ctx: FieldCtx, v, n: int) -> np.ndarray:
    if isinstance(v, FA):
        return np.broadcast_to(v.v, (n,))
    if isinstance(v, int):
        return np.full(n, ctx.index(ctx.from_int(v)), dtype=np.int64)
    raise TypeError(v)


def transform_indices(ctx: FieldCtx, G: np.ndarray, m) -> np.ndarray:
    """Apply every row of G to the MSC with index vector m; returns (N, 8)."""
    n = G.shape[0]
    M = [[FA(ctx, m[k]) for k in range(4)], [FA(ctx, m[k]) for k in range(4, 8)]]
    R = _mat.matmul(_mat.inverse2(_wrap_g(ctx, G)), _mat.matmul(M, _mat.kron(_wrap_g(ctx, G), _wrap_g(ctx, G))))
    return np.stack([_as_fa(ctx, v, n) for r in R for v in r], axis=1)


def msc_indices(A: MSC) -> tuple[int, ...]:
    return tuple(A.ctx.index(e) for e in A.entries)


def msc_from_indices(ctx: FieldCtx, idx) -> MSC:
    els = ctx.elements()
    return MSC(ctx, tuple(els[int(i)] for i in idx))


def _indices(A: Algebra) -> tuple[int, ...]:
    if isinstance(A, DiMSC):
        return msc_indices(A.left) + msc_indices(A.right)
    return msc_indices(A)


def orbit_codes(A: Algebra, G: np.ndarray | None = None) -> np.ndarray:
    """Code of transform(g, A) for every g (in gl2_indices order unless G given)."""
    ctx = A.ctx
    _require_finite(ctx)
    if G is None:
        G = gl2_indices(ctx)
    if isinstance(A, DiMSC):
        left = transform_indices(ctx, G, msc_indices(A.left))
        right = transform_indices(ctx, G, msc_indices(A.right))
        return encode(ctx, [left[:, j] for j in range(8)] + [right[:, j] for j in range(8)])
    T = transform_indices(ctx, G, msc_indices(A))
    return encode(ctx, [T[:, j] for j in range(8)])


def code_of(A: Algebra) -> int:
    return int(encode(A.ctx, [np.int64(i) for i in _indices(A)]))


def decode_algebra(ctx: FieldCtx, code: int, dialgebra: bool) -> Algebra:
    q = ctx.order
    width = 16 if dialgebra else 8
    idx = []
    for _ in range(width):
        code, r = divmod(int(code), q)
        idx.append(r)
    idx.reverse()
    if dialgebra:
        return DiMSC(msc_from_indices(ctx, idx[:8]), msc_from_indices(ctx, idx[8:]))
    return msc_from_indices(ctx, idx)


def orbit(A: Algebra) -> set[int]:
    """The orbit of A as a set of codes."""
    return set(np.unique(orbit_codes(A)).tolist())


def orbit_key(A: Algebra, ctx: FieldCtx | None = None) -> Algebra:
    """Minimal element of the GL(2, q) orbit of A."""
    if ctx is not None:
        _check_same(ctx, A.ctx)
    return decode_algebra(A.ctx, int(orbit_codes(A).min()), isinstance(A, DiMSC))


def orbit_key_code(A: Algebra) -> int:
    return int(orbit_codes(A).min())


def automorphism_group(A: Algebra, ctx: FieldCtx | None = None) -> list[GL2]:
    """All g with transform(g, A) == A (both products fixed for a dialgebra)."""
    if ctx is not None:
        _check_same(ctx, A.ctx)
    G = gl2_indices(A.ctx)
    hits = np.nonzero(orbit_codes(A, G) == code_of(A))[0]
    return [_gl2_from_row(A.ctx, G[i]) for i in hits]


def _first_witness(A: Algebra, B: Algebra) -> GL2 | None:
    _check_same(A.ctx, B.ctx)
    G = gl2_indices(A.ctx)
    hits = np.nonzero(orbit_codes(B, G) == code_of(A))[0]
    if len(hits) == 0:
        return None
    return _gl2_from_row(A.ctx, G[hits[0]])


def isomorphic(A: MSC, B: MSC, ctx: FieldCtx | None = None) -> GL2 | None:
    """Some g with transform(g, B) == A, or None."""
    if ctx is not None:
        _check_same(ctx, A.ctx)
    return _first_witness(A, B)


def dia_isomorphic(D: DiMSC, E: DiMSC, ctx: FieldCtx | None = None) -> GL2 | None:
    """Some g with dia_transform(g, E) == D, or None."""
    if ctx is not None:
        _check_same(ctx, D.ctx)
    return _first_witness(D, E)


def classify(A: Algebra, ctx: FieldCtx | None = None):
    """CanonicalLabel of an associative algebra or diassociative dialgebra.

    Raises ValueError if the axiom check fails and ClassificationGap if no
    catalog class shares the orbit key.
    """
    from .catalog import CanonicalLabel, catalog_key_index

    if ctx is not None:
        _check_same(ctx, A.ctx)
    ctx = A.ctx
    _require_finite(ctx)
    if isinstance(A, DiMSC):
        if not dia_check(A):
            raise ValueError("input is not a diassociative dialgebra")
        kind = "diassociative"
    else:
        if not assoc_matrix_check(A):
            raise ValueError("input is not associative")
        kind = "associative"
    if A.is_zero():
        return CanonicalLabel.zero(ctx.char_class)
    key = orbit_key_code(A)
    index = catalog_key_index(ctx, kind)
    if key not in index:
        raise ClassificationGap(A, decode_algebra(ctx, key, kind == "diassociative"))
    return index[key]
