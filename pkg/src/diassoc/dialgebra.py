"""Associative dialgebras: a pair of MSCs (left -|, right |-)."""
from __future__ import annotations

from dataclasses import dataclass

from . import _mat
from .msc import GL2, MSC, _check_same, transform

__all__ = ["DiMSC", "dia_check", "dia_axiom_verdicts", "dia_defects", "dia_transform"]


@dataclass(frozen=True)
class DiMSC:
    left: MSC
    right: MSC

    def __post_init__(self):
        _check_same(self.left.ctx, self.right.ctx)

    @property
    def ctx(self):
        return self.left.ctx

    @classmethod
    def of(cls, ctx, left, right) -> "DiMSC":
        return cls(MSC.of(ctx, left), MSC.of(ctx, right))

    @classmethod
    def zero(cls, ctx) -> "DiMSC":
        return cls(MSC.zero(ctx), MSC.zero(ctx))

    def is_zero(self) -> bool:
        return self.left.is_zero() and self.right.is_zero()

    def sort_key(self):
        return self.left.sort_key() + self.right.sort_key()

    def __str__(self):
        return f"[{self.left} ; {self.right}]"


def dia_defects(A, B):
    """The five matrix identities as 2x8 differences, on wrapped matrices.

    The fifth is B(B kron I) - B(I kron B); the version with both sides
    equal to B(B kron I) would be vacuous.
    """
    I = _mat.IDENTITY2
    AI, IA = _mat.kron(A, I), _mat.kron(I, A)
    BI, IB = _mat.kron(B, I), _mat.kron(I, B)
    mm = _mat.matmul
    return [
        _mat.sub(mm(A, AI), mm(A, IA)),
        _mat.sub(mm(A, IA), mm(A, IB)),
        _mat.sub(mm(A, BI), mm(B, IA)),
        _mat.sub(mm(B, AI), mm(B, BI)),
        _mat.sub(mm(B, BI), mm(B, IB)),
    ]


def _zero_rows(rows) -> bool:
    return all((v == 0) if isinstance(v, int) else v.is_zero() for r in rows for v in r)


def dia_axiom_verdicts(D: DiMSC) -> list[bool]:
    """Per-axiom truth values (matrix form), axioms 1..5 in order."""
    return [_zero_rows(d) for d in dia_defects(D.left.wrapped(), D.right.wrapped())]


def dia_check(D: DiMSC) -> bool:
    return all(dia_axiom_verdicts(D))


def dia_transform(g: GL2, D: DiMSC) -> DiMSC:
    """Apply the same basis change to both products."""
    return DiMSC(transform(g, D.left), transform(g, D.right))
