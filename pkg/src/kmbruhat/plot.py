"""SVG 1.1 drawings of rank-2 Tits cones and affine apartments.

Points of Y (x) R are placed in the plane through their pairings
p = (<x, alpha_1>, <x, alpha_2>) followed by a fixed rational shear, so the
fundamental chamber is the cone on the images of the two fundamental coweights.
For a singular Cartan matrix this is the quotient by the common kernel of the
simple roots, which is where the chamber structure lives.  Output depends only
on the inputs and is byte-identical across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .affine import AffineRoot, WPlusElt, format_element
from .errors import PreconditionViolated, RankNotTwo
from .root_datum import RootDatum, pair
from .roots import enumerate_roots, simple_root
from .weyl import WeylElt, WeylGroup

__all__ = ["PlotSpec", "render_tits_cone", "render_apartment", "plane_point"]

Number = Union[int, Fraction]
Point = tuple[float, float]

# plane image of the pairing coordinates: e1 -> (1, 0), e2 -> (1/2, 1)
_SHEAR = ((Fraction(1), Fraction(1, 2)), (Fraction(0), Fraction(1)))
_HIGHLIGHT_COLORS = ("#f28c28", "#d62728", "#2ca02c", "#9467bd", "#8c564b")
_CONE_FILL = "#4a7fd4"
_SIZE = 600


@dataclass(frozen=True)
class PlotSpec:
    """depth caps l(w) for drawn chambers; window is (xmin, ymin, xmax, ymax) in plane units.

    highlighted holds alcoves (W+ elements) and affine walls (affine roots) to color.
    """

    depth: int = 4
    window: tuple[Number, Number, Number, Number] = (-4, -4, 4, 4)
    highlighted: tuple[Union[WPlusElt, AffineRoot], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.depth < 1:
            raise PreconditionViolated("plot depth must be at least 1")
        x0, y0, x1, y1 = self.window
        if not (x0 < x1 and y0 < y1):
            raise PreconditionViolated("plot window must be nonempty")


def _require_rank_two(datum: RootDatum) -> None:
    if datum.gcm.size != 2:
        raise RankNotTwo(f"plots need a rank-2 Cartan matrix, got size {datum.gcm.size}")


def _pairings(datum: RootDatum, x: Sequence[int]) -> tuple[int, int]:
    a1, a2 = datum.simple_roots
    return pair(x, a1), pair(x, a2)


def _shear(p: Sequence[Number]) -> tuple[Fraction, Fraction]:
    return (
        _SHEAR[0][0] * p[0] + _SHEAR[0][1] * p[1],
        _SHEAR[1][0] * p[0] + _SHEAR[1][1] * p[1],
    )


def plane_point(datum: RootDatum, x: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Plane position of a lattice point."""
    _require_rank_two(datum)
    return _shear(_pairings(datum, x))


def _chamber_rays(W: WeylGroup, w: WeylElt) -> tuple[tuple[int, int], tuple[int, int]]:
    """Pairing coordinates of w(varpi_1), w(varpi_2): <w varpi_j, alpha_k> = [w^-1 alpha_k]_j."""
    datum = W.datum
    winv = w.inverse()
    cols = []
    for k in range(2):
        img = W.apply_root(winv, simple_root(datum, k))
        cols.append(img.simple_expansion)
    return (cols[0][0], cols[1][0]), (cols[0][1], cols[1][1])


def _unit(p: Sequence[Number]) -> Point:
    q = _shear(p)
    x, y = float(q[0]), float(q[1])
    r = math.hypot(x, y)
    return (x / r, y / r)


def _wall_direction(beta_expansion: Sequence[int]) -> tuple[int, int]:
    """A direction spanning {p : c1 p1 + c2 p2 = 0}."""
    c1, c2 = beta_expansion
    return (c2, -c1)


class _Canvas:
    """Tiny SVG writer with a fixed world-to-pixel map (y pointing up)."""

    def __init__(self, window: Sequence[Number], title: str):
        self.x0, self.y0, self.x1, self.y1 = (Fraction(c) for c in window)
        self.scale = Fraction(_SIZE) / max(self.x1 - self.x0, self.y1 - self.y0)
        self.width = float((self.x1 - self.x0) * self.scale)
        self.height = float((self.y1 - self.y0) * self.scale)
        self.parts: list[str] = [f"<title>{_escape(title)}</title>"]

    def px(self, p: Sequence[float]) -> str:
        x = (p[0] - float(self.x0)) * float(self.scale)
        y = (float(self.y1) - p[1]) * float(self.scale)
        return f"{x:.3f},{y:.3f}"

    def polygon(self, pts: Sequence[Point], fill: str, opacity: float, stroke: str = "none") -> None:
        coords = " ".join(self.px(p) for p in pts)
        self.parts.append(
            f'<polygon points="{coords}" fill="{fill}" fill-opacity="{opacity:.2f}" '
            f'stroke="{stroke}" stroke-width="0.5"/>'
        )

    def line(self, a: Point, b: Point, stroke: str, width: float, cls: str) -> None:
        (x1, y1), (x2, y2) = self.px(a).split(","), self.px(b).split(",")
        self.parts.append(
            f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{stroke}" stroke-width="{width:.2f}"/>'
        )

    def text(self, p: Point, label: str, size: int = 11) -> None:
        x, y = self.px(p).split(",")
        self.parts.append(
            f'<text x="{x}" y="{y}" font-size="{size}" font-family="sans-serif" '
            f'text-anchor="middle">{_escape(label)}</text>'
        )

    def comment(self, text: str) -> None:
        self.parts.append(f"<!-- {_escape(text)} -->")

    def document(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
            '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
            f'<svg version="1.1" xmlns="http://www.w3.org/2000/svg" '
            f'width="{self.width:.0f}" height="{self.height:.0f}" '
            f'viewBox="0 0 {self.width:.3f} {self.height:.3f}">\n'
        )
        body = "\n".join(self.parts)
        return f'{head}<rect width="100%" height="100%" fill="white"/>\n{body}\n</svg>\n'


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _fan(
    canvas: _Canvas, W: WeylGroup, center: Point, radius: float, depth: int, labels: bool
) -> list[WeylElt]:
    """Chambers C_w (l(w) <= depth) drawn as wedges of the given radius; returns them."""
    chambers = W.elements_up_to(depth)
    for w in chambers:
        r1, r2 = _chamber_rays(W, w)
        u1, u2 = _unit(r1), _unit(r2)
        pts = [center, _at(center, u1, radius), _at(center, u2, radius)]
        canvas.polygon(pts, _CONE_FILL, 0.25, stroke="#1f3f7a")
        if labels:
            mid = _unit(tuple(a + b for a, b in zip(r1, r2)))
            canvas.text(_at(center, mid, radius * 0.8), W.format_word(w.word), 10)
    return chambers


def _at(center: Point, u: Point, r: float) -> Point:
    return (center[0] + r * u[0], center[1] + r * u[1])


def render_tits_cone(datum: RootDatum, spec: PlotSpec = PlotSpec()) -> str:
    """Chambers C_w for l(w) <= depth, the walls between them, and the shaded cone."""
    _require_rank_two(datum)
    W = WeylGroup(datum)
    canvas = _Canvas(spec.window, f"Tits cone, Cartan matrix {_matrix_text(datum)}")
    x0, y0, x1, y1 = (float(c) for c in spec.window)
    center = (0.0, 0.0)
    radius = 0.95 * min(abs(x0), abs(y0), x1, y1) if x0 < 0 < x1 and y0 < 0 < y1 else 1.0
    chambers = _fan(canvas, W, center, radius, spec.depth, labels=True)
    walls: dict[tuple[int, ...], None] = {}
    for w in chambers:
        for gamma in W.inversion_set(w.inverse()):
            walls.setdefault(gamma.simple_expansion, None)
    for exp in sorted(walls, key=lambda e: (sum(e), e)):
        u = _unit(_wall_direction(exp))
        canvas.line(_at(center, u, -radius), _at(center, u, radius), "#555555", 0.6, "wall")
    canvas.comment(f"chambers: {len(chambers)}; walls: {len(walls)}")
    return canvas.document()


def _clip_line(
    coeffs: tuple[Fraction, Fraction], rhs: Fraction, window: Sequence[Fraction]
) -> Optional[tuple[Point, Point]]:
    """Segment of {a x + b y = rhs} inside the closed window, if nondegenerate."""
    a, b = coeffs
    x0, y0, x1, y1 = window
    pts: list[tuple[Fraction, Fraction]] = []
    if b != 0:
        for x in (x0, x1):
            y = (rhs - a * x) / b
            if y0 <= y <= y1:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (rhs - b * y) / a
            if x0 <= x <= x1:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2 or pts[0] == pts[-1]:
        return None
    (ax, ay), (bx, by) = pts[0], pts[-1]
    return (float(ax), float(ay)), (float(bx), float(by))


def _wall_in_plane(exp: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Coefficients (a, b) with <x, beta> = a X + b Y for plane coordinates (X, Y)."""
    # p = shear^-1 q with shear = [[1, 1/2], [0, 1]]: p1 = X - Y/2, p2 = Y
    c1, c2 = exp
    return Fraction(c1), Fraction(c2) - Fraction(c1, 2)


def render_apartment(datum: RootDatum, spec: PlotSpec = PlotSpec()) -> str:
    """Affine walls M_{beta[n]} = {<x, beta> + n = 0} in the window, local Tits cones at
    the origin and at -lam for each highlighted alcove C_{pi^lam w} = {-lam} x C_w, the
    highlighted alcoves and highlighted walls."""
    _require_rank_two(datum)
    W = WeylGroup(datum)
    window = tuple(Fraction(c) for c in spec.window)
    canvas = _Canvas(window, f"Affine apartment, Cartan matrix {_matrix_text(datum)}")
    alcoves = [h for h in spec.highlighted if isinstance(h, WPlusElt)]
    marked_walls = [h for h in spec.highlighted if isinstance(h, AffineRoot)]
    corners = [_pairings_plane_inverse(window, i) for i in range(4)]
    wall_count = 0
    for beta in enumerate_roots(datum, spec.depth):
        if not beta.positive:
            continue
        coeffs = _wall_in_plane(beta.simple_expansion)
        values = [coeffs[0] * X + coeffs[1] * Y for X, Y in corners]
        for n in range(math.floor(-max(values)), math.ceil(-min(values)) + 1):
            seg = _clip_line(coeffs, Fraction(-n), window)
            if seg is not None:
                canvas.line(seg[0], seg[1], "#999999", 0.5, "wall")
                wall_count += 1
    for a in marked_walls:
        seg = _clip_line(_wall_in_plane(a.beta.simple_expansion), Fraction(-a.n), window)
        if seg is not None:
            canvas.line(seg[0], seg[1], "#2ca02c", 2.0, "marked-wall")
            canvas.comment(f"wall M_{a}")
    span = float(min(window[2] - window[0], window[3] - window[1]))
    radius = 0.12 * span
    centers = [(0.0, 0.0)]
    for x in alcoves:
        c = _point(datum, tuple(-v for v in x.lam))
        if c not in centers:
            centers.append(c)
    for c in centers:
        _fan(canvas, W, c, radius, spec.depth, labels=False)
    for i, x in enumerate(alcoves):
        c = _point(datum, tuple(-v for v in x.lam))
        r1, r2 = _chamber_rays(W, x.w)
        color = _HIGHLIGHT_COLORS[i % len(_HIGHLIGHT_COLORS)]
        canvas.polygon([c, _at(c, _unit(r1), radius), _at(c, _unit(r2), radius)], color, 0.9, "black")
        canvas.comment(f"alcove {format_element(x)}")
    canvas.comment(f"walls: {wall_count}; alcoves: {len(alcoves)}")
    return canvas.document()


def _pairings_plane_inverse(window: Sequence[Fraction], i: int) -> tuple[Fraction, Fraction]:
    x0, y0, x1, y1 = window
    return ((x0, y0), (x1, y0), (x0, y1), (x1, y1))[i]


def _point(datum: RootDatum, x: Sequence[int]) -> Point:
    q = plane_point(datum, x)
    return (float(q[0]), float(q[1]))


def _matrix_text(datum: RootDatum) -> str:
    return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in datum.gcm.entries) + "]"
