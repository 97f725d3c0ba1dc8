"""Deterministic SVG drawing of a representative.

Conventions follow the usual pictures: the region is filled, each cut is a
dashed vertical segment from its mark to the boundary and each mark is an
``x`` glyph.  The y axis is flipped so "up" is up on screen.  Coordinates
are written with a fixed number of decimals computed from the exact values
by integer rounding, so identical input gives byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Point
from .semitoric import SemitoricRepresentative, cut_segment

DECIMALS = 4


@dataclass(frozen=True)
class RenderOptions:
    width: int = 400              # pixels; height follows the aspect ratio
    margin: Fraction = Fraction(1, 20)
    fill: str = "#d9e6f2"
    stroke: str = "#1f3b57"
    cut_stroke: str = "#444444"


def fmt(q: Fraction, decimals: int = DECIMALS) -> str:
    """Round half away from zero to ``decimals`` places, no floats involved."""
    q = Fraction(q)
    scale = 10 ** decimals
    neg = q < 0
    n = abs(q) * scale
    r = int(n) + (1 if n - int(n) >= Fraction(1, 2) else 0)
    whole, frac = divmod(r, scale)
    s = str(whole)
    if frac:
        s += "." + str(frac).rjust(decimals, "0").rstrip("0")
    return "-" + s if neg and r else s


def _xy(p: Point) -> tuple[Fraction, Fraction]:
    return Fraction(p[0]), -Fraction(p[1])


def render_svg(R: SemitoricRepresentative, options: RenderOptions | None = None) -> str:
    opt = options or RenderOptions()
    P = R.polygon
    xs = [x for x, _ in P.vertices]
    ys = [-y for _, y in P.vertices]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    span = max(w, h)
    mx, my = opt.margin * (w or span), opt.margin * (h or span)
    x0, y0 = min(xs) - mx, min(ys) - my
    vw, vh = w + 2 * mx, h + 2 * my
    px_h = Fraction(opt.width) * vh / vw
    stroke_w = span / 150
    glyph = span / 40

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opt.width}" '
        f'height="{fmt(px_h, 2)}" viewBox="{fmt(x0)} {fmt(y0)} {fmt(vw)} {fmt(vh)}">',
    ]
    pts = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in map(_xy, P.vertices))
    out.append(
        f'  <polygon class="region" points="{pts}" fill="{opt.fill}" '
        f'stroke="{opt.stroke}" stroke-width="{fmt(stroke_w)}"/>'
    )
    for c in R.marks:
        seg = cut_segment(P, c)
        if seg is None:
            continue
        (ax, ay), (bx, by) = map(_xy, seg)
        out.append(
            f'  <line class="cut" x1="{fmt(ax)}" y1="{fmt(ay)}" x2="{fmt(bx)}" y2="{fmt(by)}" '
            f'stroke="{opt.cut_stroke}" stroke-width="{fmt(stroke_w)}" '
            f'stroke-dasharray="{fmt(4 * stroke_w)} {fmt(3 * stroke_w)}"/>'
        )
    for c in R.marks:
        if c.y is None:
            # heightless mark: draw the glyph at the middle of the chord
            lo, hi = P.vertical_extent(c.x)
            cx, cy = _xy((c.x, (lo + hi) / 2))
        else:
            cx, cy = _xy((c.x, c.y))
        out.append(
            f'  <g class="mark" stroke="{opt.stroke}" stroke-width="{fmt(stroke_w)}">'
            f'<line x1="{fmt(cx - glyph)}" y1="{fmt(cy - glyph)}" x2="{fmt(cx + glyph)}" y2="{fmt(cy + glyph)}"/>'
            f'<line x1="{fmt(cx - glyph)}" y1="{fmt(cy + glyph)}" x2="{fmt(cx + glyph)}" y2="{fmt(cy - glyph)}"/>'
            "</g>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
