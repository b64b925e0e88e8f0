"""Exact arithmetic over Q, GF(p) and small GF(p^n).

Elements are plain Python values so they can be hashed, compared and
serialized without a wrapper:

    Q         fractions.Fraction (always reduced, positive denominator)
    GF(p)     int in [0, p)
    GF(p^n)   tuple of n ints in [0, p), constant coefficient first

All arithmetic goes through a FieldCtx.  ``FE`` wraps an element together
with its context so polynomial systems can be written with operators.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "FieldError",
    "UnsupportedError",
    "FieldCtx",
    "FE",
    "make_field",
    "f_arith",
    "square_class_rep",
    "polynomial_has_root",
    "DEFAULT_MODULI",
]


class FieldError(ValueError):
    """Bad field description or illegal field operation."""


class UnsupportedError(FieldError):
    """The request is well formed but outside what is implemented."""


# constant term first, monic
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),     # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),  # t^3 + t + 1
    (3, 2): (1, 0, 1),     # t^2 + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            n = 0
            while q % p == 0:
                q //= p
                n += 1
            return (p, n) if q == 1 else None
    return None


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm] + [0] * max(0, dm - len(a))


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    n = len(m) - 1
    if n == 1:
        return True
    # a reducible polynomial of degree n has a monic factor of degree <= n/2
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            f = list(low) + [1]
            if not any(_poly_mod(list(m), f, p)):
                return False
    return True


def _squarefree_kernel(n: int) -> int:
    from sympy import factorint

    k = 1
    for prime, e in factorint(n).items():
        if e % 2:
            k *= prime
    return k


@dataclass(frozen=True)
class FieldCtx:
    """A base field: ``kind`` is ``"rationals"``, ``"prime"`` or ``"extension"``."""

    kind: str
    p: int = 0
    n: int = 1
    modulus: tuple[int, ...] = field(default=(), compare=True)

    def __post_init__(self):
        if self.kind == "rationals":
            return
        if not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.kind == "prime":
            return
        if self.kind != "extension":
            raise FieldError(f"unknown field kind {self.kind!r}")
        m = self.modulus
        if len(m) != self.n + 1 or m[-1] != 1:
            raise FieldError("modulus must be monic of degree n")
        if any(not 0 <= c < self.p for c in m):
            raise FieldError(f"modulus coefficients must lie in [0, {self.p})")
        if not _is_irreducible(m, self.p):
            raise FieldError(f"modulus {m} is reducible over GF({self.p})")

    # -- description -------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rationals" else self.p

    @property
    def is_finite(self) -> bool:
        return self.kind != "rationals"

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise UnsupportedError("Q is infinite")
        return self.p ** self.n

    @property
    def char_class(self) -> str:
        c = self.characteristic
        return "char2" if c == 2 else "char3" if c == 3 else "not23"

    def descriptor(self) -> str:
        if self.kind == "rationals":
            return "Q"
        if self.kind == "prime":
            return f"GF({self.p})"
        if DEFAULT_MODULI.get((self.p, self.n)) == self.modulus:
            return f"GF({self.p}^{self.n})"
        return f"GF({self.p}^{self.n}:{','.join(map(str, self.modulus))})"

    def __str__(self):
        return self.descriptor()

    # -- element encoding ----------------------------------------------------

    @cached_property
    def _elements(self) -> tuple:
        if self.kind == "prime":
            return tuple(range(self.p))
        return tuple(itertools.product(range(self.p), repeat=self.n))

    @cached_property
    def _index(self) -> dict:
        return {e: i for i, e in enumerate(self._elements)}

    def elements(self) -> tuple:
        """All elements in encoding order (finite fields only)."""
        if not self.is_finite:
            raise UnsupportedError("cannot enumerate Q")
        return self._elements

    def index(self, x) -> int:
        """Position of x in the encoding order (finite fields only)."""
        return self._index[x]

    def elem(self, i: int):
        return self._elements[i]

    def key(self, x):
        """Sort key realizing the total encoding order."""
        if self.kind == "rationals":
            return (x.denominator, abs(x.numerator), x.numerator < 0)
        return self._index[x]

    @property
    def zero(self):
        if self.kind == "rationals":
            return Fraction(0)
        if self.kind == "prime":
            return 0
        return (0,) * self.n

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, k: int):
        if self.kind == "rationals":
            return Fraction(k)
        if self.kind == "prime":
            return k % self.p
        return (k % self.p,) + (0,) * (self.n - 1)

    def from_fraction(self, r) -> object:
        r = Fraction(r)
        if self.kind == "rationals":
            return r
        if r.denominator % self.p == 0:
            raise FieldError(f"{r} is undefined in characteristic {self.p}")
        return self.mul(self.from_int(r.numerator), self.inv(self.from_int(r.denominator)))

    def coerce(self, v):
        """Turn an int, Fraction, string literal, or coefficient list into an element."""
        if isinstance(v, str):
            return self.parse(v)
        if self.kind == "extension" and isinstance(v, (tuple, list)):
            if len(v) != self.n:
                raise FieldError(f"expected {self.n} coefficients, got {len(v)}")
            return tuple(int(c) % self.p for c in v)
        if isinstance(v, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, Fraction):
            return self.from_fraction(v)
        raise FieldError(f"cannot interpret {v!r} as an element of {self}")

    def contains(self, x) -> bool:
        if self.kind == "rationals":
            return isinstance(x, Fraction)
        if self.kind == "prime":
            return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.p
        return x in self._index

    _LIT = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

    def parse(self, s: str):
        s = s.strip()
        if s.startswith("["):
            if self.kind != "extension":
                raise FieldError(f"coefficient vector {s} needs an extension field")
            body = s[1:-1] if s.endswith("]") else None
            if body is None:
                raise FieldError(f"unterminated coefficient vector {s}")
            try:
                coeffs = [int(c) for c in body.split(",")]
            except ValueError:
                raise FieldError(f"bad coefficient vector {s}") from None
            return self.coerce(coeffs)
        m = self._LIT.match(s)
        if not m:
            raise FieldError(f"bad field literal {s!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.from_int(num)
        den = int(m.group(2))
        if den == 0:
            raise FieldError("zero denominator")
        return self.from_fraction(Fraction(num, den))

    def fmt(self, x) -> str:
        if self.kind == "rationals":
            return str(x)
        if self.kind == "prime":
            return str(x)
        return "[" + ",".join(map(str, x)) + "]"

    def to_json(self, x):
        if self.kind == "rationals":
            return x.numerator if x.denominator == 1 else str(x)
        if self.kind == "prime":
            return x
        return list(x)

    # -- arithmetic ----------------------------------------------------------

    @cached_property
    def tables(self):
        """(add, mul, neg, inv) tables on element indices, finite fields only."""
        import numpy as np

        q = self.order
        els = self._elements
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                add[i, j] = self._index[self._add(a, b)]
                mul[i, j] = self._index[self._mul(a, b)]
        neg = np.array([self._index[self._neg(a)] for a in els], dtype=np.int64)
        one = self._index[self.one]
        inv = np.zeros(q, dtype=np.int64)
        for i in range(1, q):
            inv[i] = int(np.nonzero(mul[i] == one)[0][0])
        return add, mul, neg, inv

    def _add(self, a, b):
        if self.kind == "prime":
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        if self.kind == "prime":
            return -a % self.p
        return tuple(-x % self.p for x in a)

    def _mul(self, a, b):
        if self.kind == "prime":
            return a * b % self.p
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_poly_mod(prod, self.modulus, self.p))

    @cached_property
    def _ext_mul(self) -> dict:
        return {(a, b): self._mul(a, b) for a in self._elements for b in self._elements}

    def add(self, a, b):
        if self.kind == "rationals":
            return a + b
        return self._add(a, b)

    def sub(self, a, b):
        if self.kind == "rationals":
            return a - b
        return self._add(a, self._neg(b))

    def neg(self, a):
        if self.kind == "rationals":
            return -a
        return self._neg(a)

    def mul(self, a, b):
        if self.kind == "rationals":
            return a * b
        if self.kind == "prime":
            return a * b % self.p
        return self._ext_mul[(a, b)]

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "rationals":
            return 1 / a
        if self.kind == "prime":
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        r = self.one
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def is_zero(self, a) -> bool:
        return a == self.zero

    def nonzero(self) -> Iterator:
        return (a for a in self.elements() if not self.is_zero(a))

    # -- square classes ------------------------------------------------------

    def is_square(self, x) -> bool:
        if self.is_zero(x):
            return True
        if self.kind == "rationals":
            if x < 0:
                return False
            return _is_square_int(x.numerator) and _is_square_int(x.denominator)
        if self.p == 2:
            return True
        return self.pow(x, (self.order - 1) // 2) == self.one

    def square_class(self, x) -> frozenset:
        """The finite set {a^2 x : a != 0}."""
        return frozenset(self.mul(self.mul(a, a), x) for a in self.nonzero())


def _is_square_int(n: int) -> bool:
    import math

    return n >= 0 and math.isqrt(n) ** 2 == n


class FE:
    """An element bound to its field, so formulas can use + - * and int constants."""

    __slots__ = ("ctx", "v")

    def __init__(self, ctx: FieldCtx, v):
        self.ctx = ctx
        self.v = v

    def _lift(self, o):
        if isinstance(o, FE):
            return o.v
        return self.ctx.from_int(o)

    def __add__(self, o):
        return FE(self.ctx, self.ctx.add(self.v, self._lift(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FE(self.ctx, self.ctx.sub(self.v, self._lift(o)))

    def __rsub__(self, o):
        return FE(self.ctx, self.ctx.sub(self._lift(o), self.v))

    def __mul__(self, o):
        return FE(self.ctx, self.ctx.mul(self.v, self._lift(o)))

    __rmul__ = __mul__

    def __neg__(self):
        return FE(self.ctx, self.ctx.neg(self.v))

    def __pow__(self, k: int):
        return FE(self.ctx, self.ctx.pow(self.v, k))

    def inv(self):
        return FE(self.ctx, self.ctx.inv(self.v))

    def is_zero(self) -> bool:
        return self.ctx.is_zero(self.v)

    def __eq__(self, o):
        return self.v == self._lift(o)

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return f"FE({self.ctx.fmt(self.v)})"


_GF = re.compile(r"^GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?(?::\s*([\d\s,]+))?\)$")


def make_field(descriptor: str) -> FieldCtx:
    """Build a field from ``Q``, ``GF(p)``, ``GF(q)``, ``GF(p^n)`` or ``GF(p^n:c0,...,cn)``.

    ``GF(q)`` with q a prime power p^n (n > 1) and ``GF(p^n)`` without a
    modulus use the built-in default modulus, available for q in {4, 8, 9}.
    """
    s = descriptor.strip()
    if s == "Q":
        return FieldCtx("rationals")
    m = _GF.match(s)
    if not m:
        raise FieldError(f"bad field descriptor {descriptor!r}")
    base = int(m.group(1))
    if m.group(2) is not None:
        p, n = base, int(m.group(2))
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if n < 1:
            raise FieldError("extension degree must be positive")
    elif m.group(3) is not None:
        raise FieldError("a modulus needs the GF(p^n:...) form")
    elif _is_prime(base):
        p, n = base, 1
    else:
        pp = _prime_power(base)
        if pp is None:
            raise FieldError(f"{base} is not a prime power")
        p, n = pp
    if m.group(3) is not None:
        coeffs = tuple(int(c) for c in m.group(3).split(",") if c.strip())
        if n == 1:
            raise FieldError("a modulus only makes sense for n > 1")
        return FieldCtx("extension", p, n, coeffs)
    if n == 1:
        return FieldCtx("prime", p)
    if (p, n) not in DEFAULT_MODULI:
        raise UnsupportedError(f"no default modulus for GF({p}^{n}); give one explicitly")
    return FieldCtx("extension", p, n, DEFAULT_MODULI[(p, n)])


def f_arith(ctx: FieldCtx, op: str, x, y=None):
    """Apply one of add, sub, mul, inv, neg."""
    if op in ("add", "sub", "mul"):
        if y is None:
            raise FieldError(f"{op} needs two operands")
        return getattr(ctx, op)(x, y)
    if op in ("inv", "neg"):
        return getattr(ctx, op)(x)
    raise FieldError(f"unknown operation {op!r}")


def square_class_rep(ctx: FieldCtx, x):
    """Canonical representative of {a^2 x : a != 0}: its minimum in encoding order."""
    if ctx.is_zero(x):
        return ctx.zero
    if ctx.kind == "rationals":
        sign = -1 if x < 0 else 1
        return Fraction(sign * _squarefree_kernel(abs(x.numerator) * x.denominator))
    return min(ctx.square_class(x), key=ctx.key)


def _trim(coeffs: list) -> list:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return out


def polynomial_has_root(ctx: FieldCtx, coeffs: Iterable) -> bool:
    """True iff the polynomial (constant term first) vanishes somewhere in ctx.

    Finite fields are searched exhaustively; over Q the rational-root test is
    used and only degree <= 3 is accepted.
    """
    cs = [ctx.coerce(c) if not ctx.contains(c) else c for c in coeffs]
    if ctx.kind != "rationals":
        for t in ctx.elements():
            acc = ctx.zero
            for c in reversed(cs):
                acc = ctx.add(ctx.mul(acc, t), c)
            if ctx.is_zero(acc):
                return True
        return False
    cs = _trim(list(cs))
    if len(cs) - 1 > 3:
        raise UnsupportedError("root existence over Q is only decided up to degree 3")
    if all(c == 0 for c in cs):
        return True
    if len(cs) == 1:
        return False
    if cs[0] == 0:
        return True
    import math

    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for r in (Fraction(num, den), Fraction(-num, den)):
                if sum(c * r**i for i, c in enumerate(ints)) == 0:
                    return True
    return False
