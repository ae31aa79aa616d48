"""Exact Hahn series with finite support and rational exponents.

A series is a sorted tuple of (exponent, coefficient) pairs, both exact
Fractions, with no zero coefficients; the empty tuple is the zero series.
Finite support is closed under add/mul/neg, which is all the linear
algebra here needs.  There is no general division: determinants are done
by Laplace expansion, and only monomials are invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import SchemaError

Rat = Union[int, Fraction]


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise SchemaError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class HahnSeries:
    terms: tuple  # ((exp, coeff), ...) strictly increasing exponents

    @staticmethod
    def from_pairs(pairs) -> "HahnSeries":
        acc: dict[Fraction, Fraction] = {}
        for e, c in pairs:
            e, c = frac(e), frac(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        return HahnSeries(terms)

    @staticmethod
    def const(c) -> "HahnSeries":
        return HahnSeries.from_pairs([(0, c)])

    @staticmethod
    def t(exp=1, coeff=1) -> "HahnSeries":
        return HahnSeries.from_pairs([(exp, coeff)])

    @staticmethod
    def zero() -> "HahnSeries":
        return HahnSeries(())

    def is_zero(self) -> bool:
        return not self.terms

    # leading data: the term with minimal exponent
    def lp(self) -> Fraction:
        if not self.terms:
            raise SchemaError("zero series has no leading power")
        return self.terms[0][0]

    def lc(self) -> Fraction:
        if not self.terms:
            raise SchemaError("zero series has no leading coefficient")
        return self.terms[0][1]

    def __add__(self, other: "HahnSeries") -> "HahnSeries":
        return HahnSeries.from_pairs(self.terms + other.terms)

    def __neg__(self) -> "HahnSeries":
        return HahnSeries(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "HahnSeries") -> "HahnSeries":
        return self + (-other)

    def __mul__(self, other: "HahnSeries") -> "HahnSeries":
        pairs = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                pairs.append((e1 + e2, c1 * c2))
        return HahnSeries.from_pairs(pairs)

    def scale(self, c) -> "HahnSeries":
        c = frac(c)
        if c == 0:
            return HahnSeries(())
        return HahnSeries(tuple((e, k * c) for e, k in self.terms))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "HahnSeries":
        # only monomials have finite-support inverses
        if len(self.terms) != 1:
            raise SchemaError("only monomial Hahn series are invertible exactly")
        e, c = self.terms[0]
        return HahnSeries(((-e, Fraction(1) / c),))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.terms:
            if e == 0:
                bits.append(str(c))
            elif e == 1:
                bits.append(f"{c}*t" if c != 1 else "t")
            else:
                bits.append(f"{c}*t^{e}" if c != 1 else f"t^{e}")
        return " + ".join(bits).replace("+ -", "- ")


ZERO = HahnSeries(())
ONE = HahnSeries.const(1)
T = HahnSeries.t()


def determinant(rows: Sequence[Sequence[HahnSeries]]) -> HahnSeries:
    """Exact determinant by Laplace expansion along the first row."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SchemaError("determinant needs a square matrix")
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        a = rows[0][j]
        if a.is_zero():
            continue
        minor = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        sub = determinant(minor)
        term = a * sub
        total = total + (term if j % 2 == 0 else -term)
    return total
