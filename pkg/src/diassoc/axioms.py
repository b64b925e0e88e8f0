"""Expanded scalar polynomial systems.

These are hand-expanded forms of the matrix identities and are kept
deliberately separate from the matrix code in ``msc`` so the two can be
checked against each other.  Each ``*_system`` function takes plain
values supporting ``+ - *`` with int constants (``FE`` or ``FA``) and
returns the list of left-hand sides.

Naming: the left MSC is (a1 a2 a3 a4 / b1 b2 b3 b4), the right MSC of a
dialgebra is (c1 c2 c3 c4 / d1 d2 d3 d4), a basis change is (x y / z t).
"""
from __future__ import annotations

from dataclasses import dataclass

from .field import FE
from .msc import MSC, _check_same

__all__ = [
    "ResidualVector",
    "gse_system",
    "aut_system",
    "axiom2_system",
    "axiom3_system",
    "axiom4_system",
    "DIA_SYSTEMS",
    "gse_residuals",
    "aut_residuals",
    "dia_residuals",
]


@dataclass(frozen=True)
class ResidualVector:
    system: str
    values: tuple

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"{self.system}[{i + 1}]" for i in range(len(self.values)))

    def is_zero(self) -> bool:
        return not self.failing()

    def failing(self) -> list[int]:
        """1-based indices of the nonzero equations."""
        return [i + 1 for i, v in enumerate(self.values) if v != self._zero(v)]

    @staticmethod
    def _zero(v):
        # values are raw elements; zero of any supported kind
        if isinstance(v, tuple):
            return (0,) * len(v)
        return 0


def gse_system(a1, a2, a3, a4, b1, b2, b3, b4):
    """Associativity of a single product: 12 equations."""
    return [
        b1 * (a2 - a3),
        a2 * b2 - a4 * b1,
        (a1 - b3) * a2 - a3 * (a1 - b2),
        (a1 - b2) * a4 - a2 * (a2 - b4),
        a3 * b3 - a4 * b1,
        a4 * (b2 - b3),
        (a1 - b3) * a4 - a3 * (a3 - b4),
        a4 * (a2 - a3),
        b1 * (b2 - b3),
        (a2 - b4) * b1 - b2 * (a1 - b2),
        (a3 - b4) * b1 - b3 * (a1 - b3),
        (a3 - b4) * b2 - b3 * (a2 - b4),
    ]


def aut_system(a1, a2, a3, a4, b1, b2, b3, b4, x, y, z, t):
    """g A = A (g kron g) entrywise: 8 equations in x, y, z, t."""
    return [
        a1 * x * x + ((a2 + a3) * z - a1) * x + a4 * z * z - b1 * y,
        (a1 * y + a2 * (t - 1)) * x + (a3 * z - b2) * y + a4 * t * z,
        (a1 * y + a3 * (t - 1)) * x + (a2 * z - b3) * y + a4 * t * z,
        a1 * y * y + ((a2 + a3) * t - b4) * y + a4 * (t * t - x),
        b4 * z * z + ((b2 + b3) * x - a1) * z + b1 * (x * x - t),
        (b4 * z + b2 * (x - 1)) * t + (b3 * y - a2) * z + b1 * x * y,
        (b4 * z + b3 * (x - 1)) * t + (b2 * y - a3) * z + b1 * x * y,
        b4 * t * t + ((b2 + b3) * y - b4) * t + b1 * y * y - a4 * z,
    ]


def axiom2_system(a1, a2, a3, a4, b1, b2, b3, b4, c1, c2, c3, c4, d1, d2, d3, d4):
    """x -| (y -| z) = x -| (y |- z): 16 equations."""
    return [
        a1 * a1 - a1 * c1 + a2 * b1 - a2 * d1,
        a1 * a2 - a1 * c2 + a2 * b2 - a2 * d2,
        a1 * a3 - a1 * c3 + a2 * b3 - a2 * d3,
        a1 * a4 - a1 * c4 + a2 * b4 - a2 * d4,
        a1 * a3 - a3 * c1 + a4 * b1 - a4 * d1,
        a2 * a3 - a3 * c2 + a4 * b2 - a4 * d2,
        a3 * a3 - a3 * c3 + a4 * b3 - a4 * d3,
        a3 * a4 - a3 * c4 + a4 * b4 - a4 * d4,
        a1 * b1 + b1 * b2 - b1 * c1 - b2 * d1,
        a2 * b1 - b1 * c2 + b2 * b2 - b2 * d2,
        a3 * b1 - b1 * c3 + b2 * b3 - b2 * d3,
        a4 * b1 - b1 * c4 + b2 * b4 - b2 * d4,
        a1 * b3 + b1 * b4 - b3 * c1 - b4 * d1,
        a2 * b3 + b2 * b4 - b3 * c2 - b4 * d2,
        a3 * b3 + b3 * b4 - b3 * c3 - b4 * d3,
        a4 * b3 - b3 * c4 + b4 * b4 - b4 * d4,
    ]


def axiom3_system(a1, a2, a3, a4, b1, b2, b3, b4, c1, c2, c3, c4, d1, d2, d3, d4):
    """(x |- y) -| z = x |- (y -| z): 12 equations."""
    return [
        a3 * d1 - b1 * c2,
        a4 * d1 - b2 * c2,
        (d2 - c1) * a3 + c2 * (a1 - b3),
        (d2 - c1) * a4 + c2 * (a2 - b4),
        a3 * d3 - b1 * c4,
        a4 * d3 - b2 * c4,
        (c3 - d4) * a3 - c4 * (a1 - b3),
        (c3 - d4) * a4 - c4 * (a2 - b4),
        (c1 - d2) * b1 - d1 * (a1 - b3),
        b2 * (c1 - d2) - d1 * (a2 - b4),
        b1 * (c3 - d4) - d3 * (a1 - b3),
        (c3 - d4) * b2 - d3 * (a2 - b4),
    ]


def axiom4_system(a1, a2, a3, a4, b1, b2, b3, b4, c1, c2, c3, c4, d1, d2, d3, d4):
    """(x -| y) |- z = (x |- y) |- z: 16 equations."""
    return [
        a1 * c1 - c1 * c1 + (b1 - d1) * c3,
        (b1 - d1) * c4 + c2 * (a1 - c1),
        c1 * (a2 - c2) + c3 * (b2 - d2),
        a2 * c2 - c2 * c2 + c4 * (b2 - d2),
        (b3 - c1 - d3) * c3 + a3 * c1,
        c2 * (a3 - c3) + c4 * (b3 - d3),
        (a4 - c4) * c1 + c3 * (b4 - d4),
        (b4 - c2 - d4) * c4 + a4 * c2,
        (a1 - d3 - c1) * d1 + b1 * d3,
        (a1 - c1) * d2 + d4 * (b1 - d1),
        (a2 - c2) * d1 + d3 * (b2 - d2),
        (a2 - c2 - d4) * d2 + b2 * d4,
        (a3 - c3) * d1 + d3 * (b3 - d3),
        (a3 - c3) * d2 + d4 * (b3 - d3),
        (a4 - c4) * d1 + d3 * (b4 - d4),
        (a4 - c4) * d2 + d4 * (b4 - d4),
    ]


def _axiom1(*v):
    return gse_system(*v[:8])


def _axiom5(*v):
    return gse_system(*v[8:])


# cheapest-first evaluation order used by the census: 3, 2, 4, 5, 1
DIA_SYSTEMS = {
    1: _axiom1,
    2: axiom2_system,
    3: axiom3_system,
    4: axiom4_system,
    5: _axiom5,
}


def _unwrap(vals):
    return tuple(v.v for v in vals)


def gse_residuals(A: MSC) -> ResidualVector:
    ws = [FE(A.ctx, e) for e in A.entries]
    return ResidualVector("GSE", _unwrap(gse_system(*ws)))


def aut_residuals(g, A: MSC) -> ResidualVector:
    """Residuals of the automorphism system; g is any (x, y, z, t), invertible or not."""
    if hasattr(g, "entries"):
        _check_same(g.ctx, A.ctx)
        g = g.entries
    ctx = A.ctx
    ws = [FE(ctx, e) for e in A.entries] + [FE(ctx, ctx.coerce(v) if not ctx.contains(v) else v) for v in g]
    return ResidualVector("AUT", _unwrap(aut_system(*ws)))


def dia_residuals(A: MSC, B: MSC, axiom: int) -> ResidualVector:
    """Residuals of one of the five dialgebra axioms for the pair (A, B)."""
    if axiom not in DIA_SYSTEMS:
        raise ValueError(f"axiom must be 1..5, got {axiom!r}")
    ctx = _check_same(A.ctx, B.ctx)
    ws = [FE(ctx, e) for e in A.entries + B.entries]
    return ResidualVector(f"AXIOM{axiom}", _unwrap(DIA_SYSTEMS[axiom](*ws)))
