"""Tiny dense-matrix helpers over ring-like values (FE, FA, or ints for 0/1)."""
from __future__ import annotations


def matmul(P, Q):
    n, m, k = len(P), len(Q), len(Q[0])
    assert len(P[0]) == m
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = None
            for l in range(m):
                a, b = P[i][l], Q[l][j]
                if isinstance(a, int) and a == 0 or isinstance(b, int) and b == 0:
                    continue
                term = a * b if not isinstance(a, int) else b * a
                acc = term if acc is None else acc + term
            row.append(0 if acc is None else acc)
        out.append(row)
    return out


def kron(P, Q):
    """Kronecker product: block (i, j) is P[i][j] * Q."""
    rp, cp, rq, cq = len(P), len(P[0]), len(Q), len(Q[0])
    out = [[None] * (cp * cq) for _ in range(rp * rq)]
    for i in range(rp):
        for j in range(cp):
            for k in range(rq):
                for l in range(cq):
                    a, b = P[i][j], Q[k][l]
                    if isinstance(a, int) and isinstance(b, int):
                        v = a * b
                    elif isinstance(a, int):
                        v = 0 if a == 0 else b if a == 1 else b * a
                    elif isinstance(b, int):
                        v = 0 if b == 0 else a if b == 1 else a * b
                    else:
                        v = a * b
                    out[i * rq + k][j * cq + l] = v
    return out


def sub(P, Q):
    return [[a - b for a, b in zip(rp, rq)] for rp, rq in zip(P, Q)]


IDENTITY2 = [[1, 0], [0, 1]]


def inverse2(g):
    """Adjugate inverse of a 2x2 matrix; det must be invertible."""
    (x, y), (z, t) = g
    di = (x * t - y * z).inv()
    return [[t * di, -(y * di)], [-(z * di), x * di]]
