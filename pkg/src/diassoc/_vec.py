"""Vectorized finite-field arithmetic on numpy arrays of element indices.

``FA`` mirrors the operator interface of ``field.FE`` so the same polynomial
and matrix code runs on a single element or on a whole batch.
"""
from __future__ import annotations

import numpy as np

from .field import FieldCtx


class FA:
    __slots__ = ("ctx", "v")

    def __init__(self, ctx: FieldCtx, v):
        self.ctx = ctx
        self.v = np.asarray(v, dtype=np.int64)

    def _lift(self, o):
        if isinstance(o, FA):
            return o.v
        return self.ctx.index(self.ctx.from_int(o))

    def __add__(self, o):
        return FA(self.ctx, self.ctx.tables[0][self.v, self._lift(o)])

    __radd__ = __add__

    def __sub__(self, o):
        add, _, neg, _ = self.ctx.tables
        return FA(self.ctx, add[self.v, neg[self._lift(o)]])

    def __rsub__(self, o):
        add, _, neg, _ = self.ctx.tables
        return FA(self.ctx, add[self._lift(o), neg[self.v]])

    def __mul__(self, o):
        return FA(self.ctx, self.ctx.tables[1][self.v, self._lift(o)])

    __rmul__ = __mul__

    def __neg__(self):
        return FA(self.ctx, self.ctx.tables[2][self.v])

    def __pow__(self, k: int):
        r = FA(self.ctx, np.full_like(self.v, self._lift(1)))
        for _ in range(k):
            r = r * self
        return r

    def inv(self):
        # callers guarantee nonzero entries
        return FA(self.ctx, self.ctx.tables[3][self.v])

    def is_zero(self):
        return self.v == 0


def columns(ctx: FieldCtx, arr: np.ndarray) -> list[FA]:
    """Split an (N, k) index array into k FA columns."""
    return [FA(ctx, arr[:, j]) for j in range(arr.shape[1])]


def all_zero(values) -> np.ndarray:
    """Row mask: every FA in ``values`` is zero."""
    mask = None
    for f in values:
        m = f.v == 0
        mask = m if mask is None else mask & m
    return mask


def encode(ctx: FieldCtx, cols) -> np.ndarray:
    """Row-major lexicographic code of index columns (first column most significant)."""
    q = ctx.order
    code = np.zeros(np.broadcast(*[np.asarray(c.v if isinstance(c, FA) else c) for c in cols]).shape, dtype=np.int64)
    for c in cols:
        code = code * q + (c.v if isinstance(c, FA) else c)
    return code


def decode(ctx: FieldCtx, code: int, width: int) -> tuple[int, ...]:
    q = ctx.order
    out = []
    for _ in range(width):
        code, r = divmod(code, q)
        out.append(r)
    return tuple(reversed(out))


def product_array(q: int, width: int, prefix: tuple[int, ...] = ()) -> np.ndarray:
    """All index vectors of length ``width`` starting with ``prefix``, in code order."""
    free = width - len(prefix)
    grid = np.indices((q,) * free).reshape(free, -1).T if free else np.zeros((1, 0), dtype=np.int64)
    head = np.broadcast_to(np.asarray(prefix, dtype=np.int64), (grid.shape[0], len(prefix)))
    return np.concatenate([head, grid.astype(np.int64)], axis=1)
