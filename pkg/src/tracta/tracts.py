"""Tracts: multiplicative groups with a null set standing in for `sums to zero'.

Supported tracts and their null rules for a multiset of unit payloads:

  krasner    trivial group {1}; null iff 0 or >= 2 terms
  sign       {+1,-1}; null iff empty or both signs occur
  triangle   positive rationals; null iff empty, or >= 2 terms and
             2*max <= sum (closed form of the interval hyperaddition)
  regular    {+1,-1} inside Z; null iff the integer sum is 0
  dyadic     {+-2^k} inside Z[1/2]; null iff the exact rational sum is 0
  hahn       nonzero finite-support Hahn series; null iff the sum is 0
  extension  F^x * Gamma; null iff the base parts at minimal gamma are
             null in the base tract

The involution is the identity for every supported tract, but orthogonality
code routes through conj() so nothing downstream assumes that.
All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import gamma as G
from .errors import IntegrityError, SchemaError
from .series import HahnSeries, frac

_KINDS = ("krasner", "sign", "triangle", "regular", "dyadic", "hahn", "extension")


@dataclass(frozen=True)
class TractDescriptor:
    kind: str
    base: Optional["TractDescriptor"] = None
    gamma: Optional[G.GammaKind] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise SchemaError(f"unknown tract kind {self.kind!r}")
        if self.kind == "extension":
            if self.base is None or self.gamma is None:
                raise SchemaError("extension needs a base tract and a gamma kind")
            if self.base.kind == "extension":
                # nesting depth 1 suffices; lex tuples cover higher rank behaviour
                raise SchemaError("extension towers deeper than 1 are not supported")
        elif self.base is not None or self.gamma is not None:
            raise SchemaError(f"{self.kind} takes no parameters")

    def is_extension(self) -> bool:
        return self.kind == "extension"

    def __str__(self):
        if self.kind == "extension":
            g = self.gamma
            gs = g.kind if g.kind != "lex" else f"lex{g.width}"
            return f"{self.base}[{gs}]"
        return self.kind


KRASNER = TractDescriptor("krasner")
SIGN = TractDescriptor("sign")
TRIANGLE = TractDescriptor("triangle")
REGULAR = TractDescriptor("regular")
DYADIC = TractDescriptor("dyadic")
HAHN = TractDescriptor("hahn")


def extension(base: TractDescriptor, gk: G.GammaKind) -> TractDescriptor:
    return TractDescriptor("extension", base=base, gamma=gk)


# tracts over which weak and strong matroids coincide (K, S, partial fields,
# fields; closed under tropical extension)
def is_perfect(d: TractDescriptor) -> bool:
    if d.kind == "extension":
        return is_perfect(d.base)
    return d.kind in ("krasner", "sign", "regular", "dyadic", "hahn")


# ---------------------------------------------------------------------------
# payload-level unit arithmetic (None is never a valid unit payload)

def validate_unit(d: TractDescriptor, p):
    k = d.kind
    if k in ("krasner",):
        if p != 1:
            raise SchemaError(f"krasner unit must be 1, got {p!r}")
        return 1
    if k in ("sign", "regular"):
        if p not in (1, -1):
            raise SchemaError(f"{k} unit must be +-1, got {p!r}")
        return p
    if k == "triangle":
        p = frac(p)
        if p <= 0:
            raise SchemaError(f"triangle unit must be positive, got {p!r}")
        return p
    if k == "dyadic":
        s, e = p
        if s not in (1, -1) or not isinstance(e, int):
            raise SchemaError(f"dyadic unit must be (sign, exp), got {p!r}")
        return (s, e)
    if k == "hahn":
        if not isinstance(p, HahnSeries) or p.is_zero():
            raise SchemaError(f"hahn unit must be a nonzero series, got {p!r}")
        return p
    a, g = p
    d.gamma.validate(g)
    if g is G.INF:
        raise SchemaError("extension unit gamma must be finite")
    return (validate_unit(d.base, a), g)


def unit_one(d: TractDescriptor):
    k = d.kind
    if k == "krasner":
        return 1
    if k in ("sign", "regular"):
        return 1
    if k == "triangle":
        return Fraction(1)
    if k == "dyadic":
        return (1, 0)
    if k == "hahn":
        return HahnSeries.const(1)
    return (unit_one(d.base), d.gamma.zero())


def unit_mul(d: TractDescriptor, p, q):
    k = d.kind
    if k == "krasner":
        return 1
    if k in ("sign", "regular"):
        return p * q
    if k == "triangle":
        return p * q
    if k == "dyadic":
        return (p[0] * q[0], p[1] + q[1])
    if k == "hahn":
        return p * q
    return (unit_mul(d.base, p[0], q[0]), G.g_add(p[1], q[1]))


def unit_inv(d: TractDescriptor, p):
    k = d.kind
    if k == "krasner":
        return 1
    if k in ("sign", "regular"):
        return p
    if k == "triangle":
        return Fraction(1) / p
    if k == "dyadic":
        return (p[0], -p[1])
    if k == "hahn":
        return p.inverse()
    return (unit_inv(d.base, p[0]), G.g_neg(p[1]))


def unit_neg(d: TractDescriptor, p):
    k = d.kind
    if k == "krasner":
        return 1
    if k in ("sign", "regular"):
        return -p
    if k == "triangle":
        # -1 = 1 in the triangle hyperfield: 0 lies in a [+] a = [0, 2a]
        return p
    if k == "dyadic":
        return (-p[0], p[1])
    if k == "hahn":
        return -p
    return (unit_neg(d.base, p[0]), p[1])


def unit_conj(d: TractDescriptor, p):
    # fixed involution: identity for every supported tract
    return p


def unit_modulus(d: TractDescriptor, p) -> G.GammaExt:
    """Gamma part of an extension unit; INF for the zero element."""
    if not d.is_extension():
        raise SchemaError(f"modulus needs an extension tract, got {d}")
    if p is None:
        return G.INF
    return p[1]


def null(d: TractDescriptor, terms: Sequence) -> bool:
    """Null-set membership for a multiset of unit payloads."""
    k = d.kind
    n = len(terms)
    if n == 0:
        return True
    if k == "krasner":
        return n >= 2
    if k == "sign":
        return 1 in terms and -1 in terms
    if k == "triangle":
        if n < 2:
            return False
        return 2 * max(terms) <= sum(terms)
    if k == "regular":
        return sum(terms) == 0
    if k == "dyadic":
        return sum(Fraction(s * 2**e) if e >= 0 else Fraction(s, 2**-e)
                   for s, e in terms) == 0
    if k == "hahn":
        acc = HahnSeries(())
        for t in terms:
            acc = acc + t
        return acc.is_zero()
    idx = G.argmin_set([t[1] for t in terms])
    return null(d.base, [terms[i][0] for i in idx])


# ---------------------------------------------------------------------------
# element and formal-sum wrappers


@dataclass(frozen=True)
class TractElement:
    tract: TractDescriptor
    payload: object  # None encodes the tract zero

    def __post_init__(self):
        if self.payload is not None:
            object.__setattr__(self, "payload", validate_unit(self.tract, self.payload))

    @staticmethod
    def zero(d: TractDescriptor) -> "TractElement":
        return TractElement(d, None)

    @staticmethod
    def one(d: TractDescriptor) -> "TractElement":
        return TractElement(d, unit_one(d))

    def is_zero(self) -> bool:
        return self.payload is None

    def _check(self, other: "TractElement"):
        if self.tract != other.tract:
            raise SchemaError(f"tract mismatch: {self.tract} vs {other.tract}")

    def __mul__(self, other: "TractElement") -> "TractElement":
        self._check(other)
        if self.payload is None or other.payload is None:
            return TractElement(self.tract, None)
        return TractElement(self.tract, unit_mul(self.tract, self.payload, other.payload))

    def inverse(self) -> "TractElement":
        if self.payload is None:
            raise SchemaError("the tract zero has no inverse")
        return TractElement(self.tract, unit_inv(self.tract, self.payload))

    def __neg__(self) -> "TractElement":
        if self.payload is None:
            return self
        return TractElement(self.tract, unit_neg(self.tract, self.payload))

    def conj(self) -> "TractElement":
        if self.payload is None:
            return self
        return TractElement(self.tract, unit_conj(self.tract, self.payload))

    def modulus_gamma(self) -> G.GammaExt:
        return unit_modulus(self.tract, self.payload)


@dataclass(frozen=True)
class FormalSum:
    """Finite multiset of nonzero tract elements; the object tested for nullity."""

    tract: TractDescriptor
    terms: tuple  # unit payloads

    def is_null(self) -> bool:
        return null(self.tract, self.terms)

    def __len__(self):
        return len(self.terms)


def formal_sum(tract: TractDescriptor, elements: Iterable[TractElement]) -> FormalSum:
    terms = []
    for e in elements:
        if e.tract != tract:
            raise SchemaError(f"tract mismatch in formal sum: {e.tract} vs {tract}")
        if e.payload is not None:
            terms.append(e.payload)
    return FormalSum(tract, tuple(terms))


def group_arith(op: str, *args):
    """Dispatcher over the unit-group operations.

    mul/inv/neg/conj return elements; one/zero take a descriptor; eq takes
    two elements.  Provided as a uniform entry point next to the operator
    methods on TractElement.
    """
    if op == "mul":
        a, b = args
        return a * b
    if op == "inv":
        return args[0].inverse()
    if op == "neg":
        return -args[0]
    if op == "conj":
        return args[0].conj()
    if op == "one":
        return TractElement.one(args[0])
    if op == "zero":
        return TractElement.zero(args[0])
    if op == "eq":
        a, b = args
        a._check(b)
        return a == b
    raise SchemaError(f"unknown group operation {op!r}")


def hypersum_contains(a: TractElement, b: TractElement, c: TractElement) -> bool:
    """Whether c lies in the hypersum a [+] b, via is_null({a, b, -c}).

    Zero arguments simply drop out of the multiset (c = 0 tests is_null({a,b})).
    """
    a._check(b)
    a._check(c)
    return formal_sum(a.tract, [a, b, -c]).is_null()


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class Hom:
    """A map between tracts, given on unit payloads; zero always maps to zero."""

    name: str
    source: Callable[[TractDescriptor], bool]
    target: Callable[[TractDescriptor], TractDescriptor]
    on_unit: Callable[[TractDescriptor], Callable]
    is_homomorphism: bool = True

    def applies(self, d: TractDescriptor) -> bool:
        return self.source(d)

    def map_payload(self, d: TractDescriptor, p):
        if p is None:
            return None
        return self.on_unit(d)(p)

    def __call__(self, e: TractElement) -> TractElement:
        if not self.applies(e.tract):
            raise SchemaError(f"homomorphism {self.name} not applicable to {e.tract}")
        return TractElement(self.target(e.tract), self.map_payload(e.tract, e.payload))


TRIVIAL_TO_K = Hom(
    name="trivial_to_K",
    source=lambda d: True,
    target=lambda d: KRASNER,
    on_unit=lambda d: (lambda p: 1),
)

MODULUS = Hom(
    name="modulus",
    source=TractDescriptor.is_extension,
    target=lambda d: extension(KRASNER, d.gamma),
    on_unit=lambda d: (lambda p: (1, p[1])),
)

# theta forgets the gamma part; it commutes with multiplication but does NOT
# preserve null sets, so it is flagged as a non-homomorphism and rejected by
# push-forwards.  Initial matroids use it directly on minimisers only.
THETA = Hom(
    name="theta",
    source=TractDescriptor.is_extension,
    target=lambda d: d.base,
    on_unit=lambda d: (lambda p: p[0]),
    is_homomorphism=False,
)


def embed_hom(gk: G.GammaKind) -> Hom:
    return Hom(
        name="embed",
        source=lambda d: not d.is_extension(),
        target=lambda d: extension(d, gk),
        on_unit=lambda d: (lambda p: (p, gk.zero())),
    )


_NAMED = {"trivial_to_K": TRIVIAL_TO_K, "modulus": MODULUS, "theta": THETA}


def hom_apply(h, a: TractElement, gk: Optional[G.GammaKind] = None) -> TractElement:
    """Apply a named or explicit homomorphism; `embed` needs a gamma kind."""
    if isinstance(h, str):
        if h == "embed":
            if gk is None:
                raise SchemaError("embed needs a gamma kind")
            h = embed_hom(gk)
        elif h in _NAMED:
            h = _NAMED[h]
        else:
            raise SchemaError(f"unknown homomorphism {h!r}")
    return h(a)


# ---------------------------------------------------------------------------
# finite unit enumeration (for grids, orderings and axiom sampling)


def finite_units(d: TractDescriptor) -> Optional[list]:
    """All unit payloads of a finite tract, else None."""
    if d.kind == "krasner":
        return [1]
    if d.kind in ("sign", "regular"):
        return [1, -1]
    return None


# ---------------------------------------------------------------------------
# axiom checking


@dataclass
class AxiomReport:
    tract: str
    passed: bool = True
    failures: list = field(default_factory=list)

    def fail(self, msg: str):
        self.passed = False
        self.failures.append(msg)


def check_tract_axioms(
    d: TractDescriptor,
    samples: Sequence[FormalSum],
    scalars: Sequence[TractElement],
    null_fn=None,
) -> AxiomReport:
    """Sampled verification of the tract axioms.

    Checks: the empty sum is null; the singleton {1} is not; exactly one
    sampled scalar c has {1, c} null (uniqueness of -1 among the samples;
    a proof of global uniqueness is out of reach for an axiom sampler);
    and nullity is invariant under scaling by every sampled unit.
    A custom null predicate can be injected to exercise negative controls.
    """
    nf = null_fn if null_fn is not None else (lambda terms: null(d, terms))
    rep = AxiomReport(tract=str(d))
    one = unit_one(d)
    if not nf(()):
        rep.fail("T1: the empty sum is not null")
    if nf((one,)):
        rep.fail("T2: the singleton {1} is null")
    negs = [c for c in scalars if c.payload is not None and nf((one, c.payload))]
    expected = unit_neg(d, one)
    if len(negs) != 1:
        rep.fail(f"T3: expected one additive inverse of 1 among scalars, found "
                 f"{[c.payload for c in negs]}")
    elif negs[0].payload != expected:
        rep.fail(f"T3: {negs[0].payload!r} cancels 1 but neg(1) = {expected!r}")
    for s in samples:
        base = nf(s.terms)
        for c in scalars:
            if c.payload is None:
                continue
            scaled = tuple(unit_mul(d, c.payload, t) for t in s.terms)
            if nf(scaled) != base:
                rep.fail(f"T4: scaling {s.terms!r} by {c.payload!r} flips nullity")
                break
    return rep


def all_formal_sums(d: TractDescriptor, units: Sequence, max_len: int) -> list[FormalSum]:
    """Every multiset of the given unit payloads with size <= max_len."""
    import itertools

    sums = [FormalSum(d, ())]
    for n in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(units, n):
            sums.append(FormalSum(d, tuple(combo)))
    return sums
