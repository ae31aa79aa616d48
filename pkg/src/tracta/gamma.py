"""Ordered abelian groups for tropical extensions, with infinity adjoined.

Three value groups are supported: integers, exact rationals, and width-k
tuples of rationals ordered lexicographically.  Values are plain Python
objects (int, Fraction, tuple of Fraction); INF is a unique sentinel that
compares above everything, absorbs addition, and has no negative.
No floating point anywhere: null tests downstream are equality-sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import SchemaError


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "inf"


INF = _Infinity()

GammaValue = Union[int, Fraction, tuple]
GammaExt = Union[GammaValue, _Infinity]


@dataclass(frozen=True)
class GammaKind:
    kind: str  # "int" | "rational" | "lex"
    width: int = 0

    def __post_init__(self):
        if self.kind not in ("int", "rational", "lex"):
            raise SchemaError(f"unknown gamma kind {self.kind!r}")
        if self.kind == "lex" and self.width < 1:
            raise SchemaError("lex tuples need width >= 1")

    def zero(self) -> GammaValue:
        if self.kind == "lex":
            return (Fraction(0),) * self.width
        return 0 if self.kind == "int" else Fraction(0)

    def validate(self, v: GammaExt) -> GammaExt:
        if v is INF:
            return v
        if self.kind == "int":
            if isinstance(v, bool) or not isinstance(v, int):
                raise SchemaError(f"expected integer gamma, got {v!r}")
        elif self.kind == "rational":
            if not isinstance(v, (int, Fraction)) or isinstance(v, bool):
                raise SchemaError(f"expected rational gamma, got {v!r}")
        else:
            if not isinstance(v, tuple) or len(v) != self.width:
                raise SchemaError(f"expected lex tuple of width {self.width}, got {v!r}")
            if not all(isinstance(c, (int, Fraction)) for c in v):
                raise SchemaError(f"lex tuple components must be rational: {v!r}")
        return v


INT = GammaKind("int")
RATIONAL = GammaKind("rational")


def lex(width: int) -> GammaKind:
    return GammaKind("lex", width)


def is_inf(v: GammaExt) -> bool:
    return v is INF


def g_add(a: GammaExt, b: GammaExt) -> GammaExt:
    if a is INF or b is INF:
        return INF
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))
    return a + b


def g_neg(a: GammaExt) -> GammaValue:
    if a is INF:
        raise SchemaError("infinity has no negative")
    if isinstance(a, tuple):
        return tuple(-x for x in a)
    return -a


def g_sub(a: GammaExt, b: GammaValue) -> GammaExt:
    return g_add(a, g_neg(b))


def g_scale(a: GammaValue, k: int) -> GammaValue:
    if isinstance(a, tuple):
        return tuple(x * k for x in a)
    return a * k


def g_lt(a: GammaExt, b: GammaExt) -> bool:
    if a is INF:
        return False
    if b is INF:
        return True
    return a < b


def g_le(a: GammaExt, b: GammaExt) -> bool:
    return g_eq(a, b) or g_lt(a, b)


def g_eq(a: GammaExt, b: GammaExt) -> bool:
    if a is INF or b is INF:
        return a is b
    return a == b


def g_min(values: Iterable[GammaExt]) -> GammaExt:
    best: GammaExt = INF
    for v in values:
        if g_lt(v, best):
            best = v
    return best


def gamma_ops(op: str, *args):
    """Dispatcher over the ordered-group operations (add/neg/cmp/min)."""
    if op == "add":
        a, b = args
        return g_add(a, b)
    if op == "neg":
        return g_neg(args[0])
    if op == "cmp":
        a, b = args
        if g_eq(a, b):
            return 0
        return -1 if g_lt(a, b) else 1
    if op == "min":
        return g_min(args[0])
    raise SchemaError(f"unknown gamma operation {op!r}")


def argmin_set(values: Sequence[GammaExt]) -> list[int]:
    """Indices attaining the minimum; empty iff every entry is INF.

    The all-infinite convention matches `infinity is the zero element':
    a sum of tract zeros is null, so the reduced base sum must be empty.
    """
    if not values:
        raise SchemaError("argmin_set needs a nonempty list")
    m = g_min(values)
    if m is INF:
        return []
    return [i for i, v in enumerate(values) if g_eq(v, m)]
