"""JSON encodings for tracts, elements, gammas, matroids, flags and grids.

Ground set indices are 1-based on the wire and 0-based internally.
Rationals travel as "p/q" strings (decimal-free), infinities as "inf".
parse(emit(x)) is the identity on every payload.
"""

from __future__ import annotations

from fractions import Fraction

from . import gamma as G
from . import matroids as M
from . import tracts as T
from .errors import SchemaError
from .series import HahnSeries


def _rat_out(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _rat_in(s) -> Fraction:
    if isinstance(s, bool):
        raise SchemaError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"not a rational: {s!r}")
    raise SchemaError(f"not a rational: {s!r}")


# --- gamma kinds and values


def encode_gamma_kind(gk: G.GammaKind):
    return gk.kind if gk.kind != "lex" else {"lex": gk.width}


def decode_gamma_kind(obj) -> G.GammaKind:
    if obj == "int":
        return G.INT
    if obj == "rational":
        return G.RATIONAL
    if isinstance(obj, dict) and set(obj) == {"lex"}:
        return G.lex(int(obj["lex"]))
    raise SchemaError(f"bad gamma kind {obj!r}")


def encode_gamma(v):
    if v is G.INF:
        return "inf"
    if isinstance(v, tuple):
        return [_rat_out(c) for c in v]
    if isinstance(v, int):
        return v
    return _rat_out(v)


def decode_gamma(gk: G.GammaKind, obj):
    if obj == "inf":
        return G.INF
    if gk.kind == "int":
        if isinstance(obj, int) and not isinstance(obj, bool):
            return obj
        raise SchemaError(f"expected integer gamma, got {obj!r}")
    if gk.kind == "rational":
        return _rat_in(obj)
    if not isinstance(obj, list) or len(obj) != gk.width:
        raise SchemaError(f"expected lex tuple of width {gk.width}")
    return tuple(_rat_in(c) for c in obj)


# --- tract descriptors

_KIND_NAMES = {
    "krasner": T.KRASNER, "sign": T.SIGN, "triangle": T.TRIANGLE,
    "regular": T.REGULAR, "dyadic": T.DYADIC, "hahn": T.HAHN,
}


def encode_tract(d: T.TractDescriptor):
    if d.is_extension():
        return {"kind": "extension", "base": encode_tract(d.base),
                "gamma": encode_gamma_kind(d.gamma)}
    return {"kind": d.kind}


def decode_tract(obj) -> T.TractDescriptor:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError(f"bad tract descriptor {obj!r}")
    kind = obj["kind"]
    if kind == "extension":
        return T.extension(decode_tract(obj["base"]),
                           decode_gamma_kind(obj["gamma"]))
    if kind in _KIND_NAMES:
        return _KIND_NAMES[kind]
    raise SchemaError(f"unknown tract kind {kind!r}")


# --- elements

_MINUS = {"-", "−"}


def encode_element(d: T.TractDescriptor, p):
    if p is None:
        return "inf" if d.is_extension() else ([] if d.kind == "hahn" else "0")
    k = d.kind
    if k == "krasner":
        return "1"
    if k in ("sign", "regular"):
        return "+" if p == 1 else "-"
    if k == "triangle":
        return _rat_out(p)
    if k == "dyadic":
        return {"sign": p[0], "exp": p[1]}
    if k == "hahn":
        return [{"e": _rat_out(e), "c": _rat_out(c)} for e, c in p.terms]
    return {"base": encode_element(d.base, p[0]), "gamma": encode_gamma(p[1])}


def decode_element(d: T.TractDescriptor, obj):
    k = d.kind
    if k == "extension":
        if obj == "inf":
            return None
        if not isinstance(obj, dict) or set(obj) != {"base", "gamma"}:
            raise SchemaError(f"bad extension element {obj!r}")
        base = decode_element(d.base, obj["base"])
        if base is None:
            raise SchemaError("extension unit needs a nonzero base part")
        return (base, decode_gamma(d.gamma, obj["gamma"]))
    if k == "hahn":
        if not isinstance(obj, list):
            raise SchemaError(f"bad hahn element {obj!r}")
        s = HahnSeries.from_pairs((_rat_in(t["e"]), _rat_in(t["c"])) for t in obj)
        return None if s.is_zero() else s
    if obj == "0":
        return None
    if k == "krasner":
        if obj == "1":
            return 1
    elif k in ("sign", "regular"):
        if obj == "+":
            return 1
        if obj in _MINUS:
            return -1
    elif k == "triangle":
        return T.validate_unit(d, _rat_in(obj))
    elif k == "dyadic":
        if isinstance(obj, dict) and set(obj) == {"sign", "exp"}:
            return T.validate_unit(d, (obj["sign"], obj["exp"]))
    raise SchemaError(f"bad {k} element {obj!r}")


# --- vectors, matroids, circuit sets


def encode_vector(v: M.TractVector):
    return [encode_element(v.tract, c) for c in v.coords]


def decode_vector(d: T.TractDescriptor, obj) -> M.TractVector:
    if not isinstance(obj, list):
        raise SchemaError("vector must be a list")
    return M.TractVector(d, tuple(decode_element(d, x) for x in obj))


def encode_plucker(P: M.PluckerVector):
    return {
        "tract": encode_tract(P.tract),
        "n": P.n,
        "r": P.r,
        "entries": [{"set": [i + 1 for i in B], "value": encode_element(P.tract, p)}
                    for B, p in P.entries],
    }


def decode_plucker(obj) -> M.PluckerVector:
    try:
        d = decode_tract(obj["tract"])
        n, r = int(obj["n"]), int(obj["r"])
        entries = obj["entries"]
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"bad matroid JSON: {e}")
    mapping = {}
    for ent in entries:
        B = tuple(sorted(int(i) - 1 for i in ent["set"]))
        mapping[B] = decode_element(d, ent["value"])
    return M.plucker(d, n, r, mapping)


def encode_circuits(C: M.CircuitSet):
    return {"tract": encode_tract(C.tract), "n": C.n,
            "vectors": [encode_vector(v) for v in C.vectors]}


def decode_circuits(obj) -> M.CircuitSet:
    d = decode_tract(obj["tract"])
    vecs = [decode_vector(d, v) for v in obj["vectors"]]
    return M.build_circuit_set(d, int(obj["n"]), vecs)


# --- directions, flags, orderings, grids


def encode_direction(gk: G.GammaKind, u):
    return [encode_gamma(g) for g in u]


def decode_direction(gk: G.GammaKind, obj) -> tuple:
    if not isinstance(obj, list):
        raise SchemaError("direction must be a list")
    return tuple(decode_gamma(gk, g) for g in obj)


def encode_flag(F):
    return {"parts": [encode_plucker(p) for p in F.parts]}


def decode_flag(obj):
    from .flags import FlagSequence

    if not isinstance(obj, dict) or "parts" not in obj:
        raise SchemaError("flag JSON needs a parts list")
    return FlagSequence(tuple(decode_plucker(p) for p in obj["parts"]))


def decode_ordering(d: T.TractDescriptor, obj):
    from .flags import TractOrdering

    if obj.get("inherited"):
        return TractOrdering(d, inherited=True)
    if "positives" in obj:
        pos = tuple(decode_element(d, e) for e in obj["positives"])
        return TractOrdering(d, positives=pos)
    raise SchemaError("ordering JSON needs positives or inherited")


def encode_ordering(o):
    if o.inherited:
        return {"inherited": True}
    if o.positives is not None:
        return {"positives": [encode_element(o.tract, p) for p in o.positives]}
    return {"natural": True}


def decode_grid(d: T.TractDescriptor, obj):
    from .linspace import make_grid

    if not isinstance(obj, dict) or "gammas" not in obj:
        raise SchemaError("grid JSON needs a gammas list")
    gammas = [decode_gamma(d.gamma, g) for g in obj["gammas"]]
    units = None
    if "units" in obj:
        units = [decode_element(d.base, e) for e in obj["units"]]
    n = int(obj["n"]) if "n" in obj else None
    if n is None:
        raise SchemaError("grid JSON needs n")
    return make_grid(d, n, gammas, units=units)
