"""Matrices of structure constants (MSC) for 2-dimensional algebras.

An MSC is the 2x4 matrix ``A`` with ``e_i e_j = sum_k A[k][2(i-1)+(j-1)] e_k``,
so the columns are ordered (e1e1, e1e2, e2e1, e2e2) and the product of
coordinate vectors is ``A (x kron y)``.  Basis changes act by
``A -> g^-1 A (g kron g)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _mat
from .field import FE, FieldCtx

__all__ = [
    "MSC",
    "GL2",
    "kron2",
    "mul_vec",
    "assoc_matrix_check",
    "assoc_defect",
    "transform",
    "aut_check",
]


def _check_same(*ctxs: FieldCtx) -> FieldCtx:
    first = ctxs[0]
    for c in ctxs[1:]:
        if c != first:
            raise ValueError(f"field mismatch: {first} vs {c}")
    return first


def _raw(ctx: FieldCtx, v):
    if isinstance(v, FE):
        return v.v
    if isinstance(v, int):
        return ctx.from_int(v)
    return v


@dataclass(frozen=True)
class MSC:
    """A 2x4 structure-constant matrix stored row-major as 8 field elements."""

    ctx: FieldCtx
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != 8:
            raise ValueError("an MSC has exactly 8 entries")
        for e in self.entries:
            if not self.ctx.contains(e):
                raise ValueError(f"{e!r} is not an element of {self.ctx}")

    @classmethod
    def of(cls, ctx: FieldCtx, *rows) -> "MSC":
        """Build from two rows of 4 (or one flat sequence of 8) coercible values."""
        flat = list(rows[0]) + list(rows[1]) if len(rows) == 2 else list(rows[0])
        return cls(ctx, tuple(ctx.coerce(v) for v in flat))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "MSC":
        return cls(ctx, (ctx.zero,) * 8)

    @property
    def rows(self):
        return (self.entries[:4], self.entries[4:])

    def wrapped(self):
        return [[FE(self.ctx, v) for v in r] for r in self.rows]

    @classmethod
    def from_wrapped(cls, ctx: FieldCtx, M) -> "MSC":
        return cls(ctx, tuple(_raw(ctx, v) for r in M for v in r))

    def is_zero(self) -> bool:
        return all(self.ctx.is_zero(e) for e in self.entries)

    def sort_key(self):
        return tuple(self.ctx.key(e) for e in self.entries)

    def __str__(self):
        f = self.ctx.fmt
        return "(" + " ".join(map(f, self.entries[:4])) + " / " + " ".join(map(f, self.entries[4:])) + ")"


@dataclass(frozen=True)
class GL2:
    """An invertible 2x2 matrix (x y / z t)."""

    ctx: FieldCtx
    x: object
    y: object
    z: object
    t: object

    def __post_init__(self):
        for v in (self.x, self.y, self.z, self.t):
            if not self.ctx.contains(v):
                raise ValueError(f"{v!r} is not an element of {self.ctx}")
        if self.ctx.is_zero(self.det):
            raise ValueError("matrix is not invertible")

    @classmethod
    def of(cls, ctx: FieldCtx, x, y, z, t) -> "GL2":
        return cls(ctx, *(ctx.coerce(v) for v in (x, y, z, t)))

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "GL2":
        return cls(ctx, ctx.one, ctx.zero, ctx.zero, ctx.one)

    @property
    def det(self):
        c = self.ctx
        return c.sub(c.mul(self.x, self.t), c.mul(self.y, self.z))

    def wrapped(self):
        c = self.ctx
        return [[FE(c, self.x), FE(c, self.y)], [FE(c, self.z), FE(c, self.t)]]

    def __matmul__(self, other: "GL2") -> "GL2":
        _check_same(self.ctx, other.ctx)
        (a, b), (c, d) = _mat.matmul(self.wrapped(), other.wrapped())
        return GL2(self.ctx, a.v, b.v, c.v, d.v)

    def inverse(self) -> "GL2":
        (a, b), (c, d) = _mat.inverse2(self.wrapped())
        return GL2(self.ctx, a.v, b.v, c.v, d.v)

    @property
    def entries(self):
        return (self.x, self.y, self.z, self.t)

    def __str__(self):
        f = self.ctx.fmt
        return f"({f(self.x)} {f(self.y)} / {f(self.z)} {f(self.t)})"


def kron2(x: Sequence, y: Sequence, ctx: FieldCtx | None = None) -> tuple:
    """(x1 y1, x1 y2, x2 y1, x2 y2)."""
    if len(x) != 2 or len(y) != 2:
        raise ValueError("kron2 takes two 2-vectors")
    if ctx is None:
        return (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return tuple(ctx.mul(a, b) for a in x for b in y)


def mul_vec(A: MSC, x: Sequence, y: Sequence) -> tuple:
    """Coordinates of the product of x and y, i.e. A (x kron y)."""
    ctx = A.ctx
    x = [ctx.coerce(v) if not ctx.contains(v) else v for v in x]
    y = [ctx.coerce(v) if not ctx.contains(v) else v for v in y]
    k = kron2(x, y, ctx)
    out = []
    for row in A.rows:
        acc = ctx.zero
        for a, b in zip(row, k):
            acc = ctx.add(acc, ctx.mul(a, b))
        out.append(acc)
    return tuple(out)


def assoc_defect(M):
    """A(A kron I) - A(I kron A) for a wrapped 2x4 matrix (2x8 result)."""
    I = _mat.IDENTITY2
    return _mat.sub(_mat.matmul(M, _mat.kron(M, I)), _mat.matmul(M, _mat.kron(I, M)))


def _all_zero(rows) -> bool:
    return all((v == 0) if isinstance(v, int) else v.is_zero() for r in rows for v in r)


def assoc_matrix_check(A: MSC) -> bool:
    """True iff A(A kron I) == A(I kron A)."""
    return _all_zero(assoc_defect(A.wrapped()))


def transform_wrapped(g, M):
    """g^-1 M (g kron g) on wrapped matrices."""
    return _mat.matmul(_mat.inverse2(g), _mat.matmul(M, _mat.kron(g, g)))


def transform(g: GL2, A: MSC) -> MSC:
    """The MSC of the same product in the basis given by the columns of g."""
    _check_same(g.ctx, A.ctx)
    return MSC.from_wrapped(A.ctx, transform_wrapped(g.wrapped(), A.wrapped()))


def aut_check(g: GL2, A: MSC) -> bool:
    """True iff g A == A (g kron g)."""
    _check_same(g.ctx, A.ctx)
    G, M = g.wrapped(), A.wrapped()
    lhs = _mat.matmul(G, M)
    rhs = _mat.matmul(M, _mat.kron(G, G))
    return _all_zero(_mat.sub(lhs, rhs))
