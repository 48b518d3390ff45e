"""Standalone SVG of a polar boundary.

The curve is drawn as short chords colored by the angle gamma between the
radius and the normal (blue: gamma = 0, red: gamma -> pi/2).  The largest
star-center disk (radius rho_max) and the smallest enclosing disk about the
center (radius R_min) are drawn as dashed circles.
"""

import math
import xml.etree.ElementTree as ET

import numpy as np

from . import geometry
from .geometry import PolarBoundary

SIZE = 600
MARGIN = 0.08
SEGMENTS = 720


def _fmt(x):
    return f"{x:.4f}"


def _heat(g):
    # g in [0, 1]: blue -> magenta -> red
    s = min(max(g, 0.0), 1.0)
    r = int(round(40 + 215 * s))
    b = int(round(220 * (1.0 - s) + 30 * s))
    gr = int(round(60 * (1.0 - s)))
    return f"#{r:02x}{gr:02x}{b:02x}"


def render_svg(boundary: PolarBoundary, *, title=None, segments=SEGMENTS,
               grid=geometry.DEFAULT_GRID, tol=geometry.DEFAULT_TOL) -> str:
    """SVG text for ``boundary`` in its native scale and position."""
    scale = boundary.normalization_scale
    cx, cy = boundary.center
    th = np.linspace(0.0, geometry.TWO_PI, segments + 1)
    th = np.unique(np.concatenate([th, np.mod(boundary.breaks, geometry.TWO_PI)]))
    th = np.append(th[th < geometry.TWO_PI], geometry.TWO_PI)
    f = boundary.f_array(th)
    xs = cx + scale * f * np.cos(th)
    ys = cy + scale * f * np.sin(th)

    mid = 0.5 * (th[:-1] + th[1:])
    fm = boundary.f_array(mid)
    gm = np.arctan(np.abs(boundary.fp_array(mid)) / fm)

    rho = geometry.rho_max(boundary, native=True, grid=grid, tol=tol)
    R = geometry.r_min(boundary, native=True, grid=grid, tol=tol)

    lo_x, hi_x = min(xs.min(), cx - R), max(xs.max(), cx + R)
    lo_y, hi_y = min(ys.min(), cy - R), max(ys.max(), cy + R)
    span = max(hi_x - lo_x, hi_y - lo_y)
    pad = MARGIN * span
    k = SIZE / (span + 2 * pad)

    def X(x):
        return (x - lo_x + pad) * k

    def Y(y):
        # svg y axis points down
        return (hi_y - y + pad) * k

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(SIZE),
        "height": str(SIZE),
        "viewBox": f"0 0 {SIZE} {SIZE}",
    })
    ET.SubElement(svg, "rect", {"width": "100%", "height": "100%", "fill": "white"})
    if title:
        t = ET.SubElement(svg, "text", {"x": "10", "y": "20", "font-family": "sans-serif",
                                        "font-size": "14"})
        t.text = title

    circles = ET.SubElement(svg, "g", {"fill": "none", "stroke-width": "1"})
    for name, rad, color, dash in (("R_min", R, "#888888", "6 4"),
                                   ("rho_max", rho, "#2a9d2a", "3 3")):
        if rad > 0:
            c = ET.SubElement(circles, "circle", {
                "cx": _fmt(X(cx)), "cy": _fmt(Y(cy)), "r": _fmt(rad * k),
                "stroke": color, "stroke-dasharray": dash,
            })
            ET.SubElement(c, "title").text = f"{name} = {rad:.6g}"

    curve = ET.SubElement(svg, "g", {"stroke-width": "2.5", "stroke-linecap": "round"})
    for i in range(len(mid)):
        ET.SubElement(curve, "line", {
            "x1": _fmt(X(xs[i])), "y1": _fmt(Y(ys[i])),
            "x2": _fmt(X(xs[i + 1])), "y2": _fmt(Y(ys[i + 1])),
            "stroke": _heat(gm[i] / (math.pi / 2)),
        })
    ET.SubElement(svg, "circle", {"cx": _fmt(X(cx)), "cy": _fmt(Y(cy)), "r": "3",
                                  "fill": "black"})
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"


def write_svg(boundary: PolarBoundary, path, **kw):
    text = render_svg(boundary, **kw)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
