"""Command-line front end.

Subcommands: check, circuits, dual, initial, flag, positroid, linspace,
tropicalize, demo, render.  Inputs are JSON files or inline JSON flags;
output is deterministic JSON (or SVG) on stdout.  Exit codes: 0 ok,
1 schema error, 2 mathematical integrity failure, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance as ACC
from . import fixtures as F
from . import flags as FL
from . import initial as IN
from . import jsonio as J
from . import linspace as L
from . import matroids as M
from . import render as R
from . import tracts as T
from . import valuation as V
from .errors import GuardExceeded, IntegrityError, SchemaError
from .series import HahnSeries


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SchemaError(f"no such file: {path}")
    except json.JSONDecodeError as e:
        raise SchemaError(f"bad JSON in {path}: {e}")


def _inline(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"bad inline JSON: {e}")


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _matroid(args) -> M.PluckerVector:
    return J.decode_plucker(_load(args.input))


def cmd_check(args):
    P = _matroid(args)
    rep = M.matroid_report(P)
    fail = rep.failing_strong if args.strong else rep.failing_weak
    _emit({
        "weak": rep.weak,
        "strong": rep.strong,
        "failing_relation": None if fail is None else
            {"I": [i + 1 for i in fail[0]], "J": [j + 1 for j in fail[1]]},
    })
    return 0


def cmd_circuits(args):
    P = _matroid(args)
    _emit(J.encode_circuits(M.circuits(P)))
    return 0


def cmd_dual(args):
    P = _matroid(args)
    _emit(J.encode_plucker(M.dual(P)))
    return 0


def cmd_initial(args):
    P = _matroid(args)
    u = J.decode_direction(P.tract.gamma, _inline(args.u))
    Q = IN.initial(P, u)
    C = IN.initial_circuits_of(P, u)
    _emit({"matroid": J.encode_plucker(Q), "circuits": J.encode_circuits(C)})
    return 0


def cmd_flag(args):
    Fs = J.decode_flag(_load(args.input))
    out = {"is_flag": FL.is_flag(Fs)}
    if args.u is not None:
        u = J.decode_direction(Fs.parts[0].tract.gamma, _inline(args.u))
        Fu = FL.initial_flag(Fs, u)
        out["initial"] = J.encode_flag(Fu)
        out["initial_is_flag"] = FL.is_flag(Fu)
    _emit(out)
    return 0


def cmd_positroid(args):
    P = _matroid(args)
    o = (J.decode_ordering(P.tract, _inline(args.ordering))
         if args.ordering else FL.TractOrdering.natural(P.tract))
    _emit({"positroid": FL.is_positroid(P, o, args.strength)})
    return 0


def cmd_linspace(args):
    P = _matroid(args)
    grid_obj = _inline(args.grid)
    grid_obj.setdefault("n", P.n)
    grid = J.decode_grid(P.tract, grid_obj)
    dom = None
    if not args.no_span:
        gammas = [J.decode_gamma(P.tract.gamma, g) for g in grid_obj["gammas"]]
        dom = L.default_scalar_domain(P, gammas)
    records = []
    for X in grid.points():
        rec = L.evaluate_point(P, X, scalar_domain=dom)
        if rec.member or args.all_points:
            records.append({
                "point": J.encode_vector(X),
                "toric": rec.toric,
                "charA": rec.charA, "charB": rec.charB, "charC": rec.charC,
                "charD": rec.charD,
            })
    _emit(records)
    return 0


def cmd_tropicalize(args):
    rows = _load(args.input)
    A = V.series_matrix([
        [HahnSeries.from_pairs((J._rat_in(t["e"]), J._rat_in(t["c"])) for t in cell)
         if isinstance(cell, list) else cell
         for cell in row] for row in rows])
    P = V.plucker_from_matrix(A)
    Q = V.tropicalize_matroid(P, args.kind)
    _emit({"matroid": J.encode_plucker(Q),
           "circuits": J.encode_circuits(M.circuits(Q))})
    return 0


def cmd_render(args):
    P = _matroid(args)
    grid_obj = _inline(args.grid)
    grid_obj.setdefault("n", P.n)
    grid = J.decode_grid(P.tract, grid_obj)
    svg = R.render_svg(P, grid)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg + "\n")
    return 0


# ---------------------------------------------------------------------------
# demos


def _demo_hahn_plucker():
    res = ACC.criterion_1()
    print("P =", res.detail)
    return res.passed


def _demo_triangle():
    P = F.triangle_plucker()
    rep = M.matroid_report(P)
    fails = ACC.all_failing_relations(P)
    print(f"weak={rep.weak} strong={rep.strong}")
    print("failing relations:",
          [([i + 1 for i in I], [j + 1 for j in J]) for I, J in fails])
    res = ACC.criterion_5()
    print(res.line())
    return res.passed


_SIMPLE_DEMOS = {
    "hahn-plucker": _demo_hahn_plucker,
    "triangle-weak-not-strong": _demo_triangle,
    "val-circuits": lambda: ACC.criterion_2().passed,
    "sval-circuits": lambda: ACC.criterion_3().passed,
    "ray-regions": lambda: ACC.criterion_4().passed,
    "linspace": lambda: ACC.criterion_9().passed,
    "flags": lambda: ACC.criterion_10().passed,
    "positroid": lambda: ACC.criterion_11().passed,
    "tropicalize": lambda: ACC.criterion_12().passed,
    "valuations": lambda: ACC.criterion_13().passed,
}


def cmd_demo(args):
    if args.all:
        ok = ACC.run_all()
        return 0 if ok else 2
    if args.name not in _SIMPLE_DEMOS:
        raise SchemaError(f"unknown demo {args.name!r}; "
                          f"available: {sorted(_SIMPLE_DEMOS)} or --all")
    ok = _SIMPLE_DEMOS[args.name]()
    print("ok" if ok else "FAILED")
    return 0 if ok else 2


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tracta",
                                description="matroids over tracts, exactly")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("check", cmd_check, help="weak/strong Plucker relation check")
    sp.add_argument("--input", required=True)
    sp.add_argument("--strong", action="store_true")

    sp = add("circuits", cmd_circuits, help="canonical circuits")
    sp.add_argument("--input", required=True)

    sp = add("dual", cmd_dual, help="dual matroid")
    sp.add_argument("--input", required=True)

    sp = add("initial", cmd_initial, help="initial matroid for a direction u")
    sp.add_argument("--input", required=True)
    sp.add_argument("--u", required=True, help='JSON direction, e.g. "[1,0,\\"inf\\"]"')

    sp = add("flag", cmd_flag, help="flag check and initial flags")
    sp.add_argument("--input", required=True)
    sp.add_argument("--u")

    sp = add("positroid", cmd_positroid, help="positivity check")
    sp.add_argument("--input", required=True)
    sp.add_argument("--ordering", help='JSON, e.g. {"inherited": true}')
    sp.add_argument("--strength", choices=("weak", "strong"), default="strong")

    sp = add("linspace", cmd_linspace, help="enumerate an enriched linear space")
    sp.add_argument("--input", required=True)
    sp.add_argument("--grid", required=True, help='JSON {"gammas": [...], ...}')
    sp.add_argument("--all-points", action="store_true")
    sp.add_argument("--no-span", action="store_true")

    sp = add("tropicalize", cmd_tropicalize, help="valuate a series matrix")
    sp.add_argument("--input", required=True)
    sp.add_argument("--kind", choices=("val", "sval", "fval"), default="val")

    sp = add("demo", cmd_demo, help="run a named worked example")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--all", action="store_true")

    sp = add("render", cmd_render, help="SVG of a small tropical linear space")
    sp.add_argument("--input", required=True)
    sp.add_argument("--grid", required=True)
    sp.add_argument("--out")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SchemaError as e:
        print(f"schema error: {e}", file=sys.stderr)
        return 1
    except IntegrityError as e:
        print(f"integrity failure: {e}", file=sys.stderr)
        return 2
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
