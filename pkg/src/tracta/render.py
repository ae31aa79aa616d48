"""SVG display aid for rank-2 Krasner-base linear spaces on 3 or 4 elements.

Grid members are projected by normalising the last coordinate to 0 (finite
points only), a 4th coordinate is flattened by a fixed isometric map, and
segments join adjacent collinear samples.  This is a drawing, not a
polyhedral computation.
"""

from __future__ import annotations

from fractions import Fraction

from . import linspace as L
from . import matroids as M
from . import tracts as T
from .errors import SchemaError


def _project(point) -> tuple:
    # normalise last coordinate to 0, then flatten to the plane
    mods = [c[1] for c in point.coords]
    rel = [float(m - mods[-1]) for m in mods[:-1]]
    if len(rel) == 2:
        return rel[0], rel[1]
    x, y, z = rel
    return x - 0.5 * z, y - 0.5 * z


def render_svg(P: M.PluckerVector, grid: L.SampleGrid, scale: float = 40.0) -> str:
    if not (P.tract.is_extension() and P.tract.base == T.KRASNER
            and P.r == 2 and P.n in (3, 4)):
        raise SchemaError("render supports rank-2 Krasner-base spaces on 3 or 4 "
                          "elements")
    members = [X for X in L.enumerate_members(P, grid)
               if all(c is not None for c in X.coords)]
    pts = sorted({_project(X) for X in members})
    if not pts:
        return ('<svg xmlns="http://www.w3.org/2000/svg" width="80" height="80">'
                "<!-- empty --></svg>")
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    pad = 1.0
    x0, y0 = min(xs) - pad, min(ys) - pad
    w = (max(xs) - x0 + pad) * scale
    h = (max(ys) - y0 + pad) * scale

    def at(p):
        return ((p[0] - x0) * scale, h - (p[1] - y0) * scale)

    # join samples whose midpoint is (close to) another sample's direction:
    # adjacent = separated by a minimal nonzero step among all pairs
    steps = set()
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            steps.add((q[0] - p[0], q[1] - p[1]))
    if steps:
        min_norm = min(dx * dx + dy * dy for dx, dy in steps)
        small = {s for s in steps if abs(s[0] * s[0] + s[1] * s[1] - min_norm) < 1e-9}
    else:
        small = set()
    lines = []
    pset = set(pts)
    for p in pts:
        for dx, dy in small:
            q = (p[0] + dx, p[1] + dy)
            if q in pset:
                (ax, ay), (bx, by) = at(p), at(q)
                lines.append(f'<line x1="{ax:.1f}" y1="{ay:.1f}" x2="{bx:.1f}" '
                             f'y2="{by:.1f}" stroke="#888" stroke-width="1"/>')
    circles = [f'<circle cx="{at(p)[0]:.1f}" cy="{at(p)[1]:.1f}" r="3" fill="#06c"/>'
               for p in pts]
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" '
            f'height="{h:.0f}">' + "".join(lines) + "".join(circles) + "</svg>")
