"""Byte-stable SVG rendering of rank-2 staircases and Okounkov bodies."""

from __future__ import annotations

from fractions import Fraction

from .cones import Cone
from .errors import UnsupportedRank
from .ideals import MonomialIdeal, newton_polyhedron, staircase_contains
from .regions import CoboundedRegion

_SCALE = 40  # pixels per lattice unit
_MARGIN = 30


def _fmt(x: Fraction) -> str:
    """Exact fixed-point rendering with 3 decimals (byte-stable)."""
    milli = Fraction(x) * 1000 + Fraction(1, 2)
    n = milli.numerator // milli.denominator
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 1000}.{n % 1000:03d}"


def _to_px(point, window) -> tuple[str, str]:
    x = _MARGIN + Fraction(point[0]) * _SCALE
    y = _MARGIN + (Fraction(window) - Fraction(point[1])) * _SCALE
    return _fmt(x), _fmt(y)


def _clip_ray(vertex, direction, window):
    """Last in-window point of vertex + t*direction."""
    t_best = None
    for coord in range(2):
        d = Fraction(direction[coord])
        if d > 0:
            t = (Fraction(window) - Fraction(vertex[coord])) / d
            t_best = t if t_best is None else min(t_best, t)
        elif d < 0:
            t = -Fraction(vertex[coord]) / d
            t_best = t if t_best is None else min(t_best, t)
    t_best = Fraction(0) if t_best is None else max(Fraction(0), t_best)
    return (
        Fraction(vertex[0]) + t_best * direction[0],
        Fraction(vertex[1]) + t_best * direction[1],
    )


def render_svg(cone: Cone, region: CoboundedRegion | None, ideal: MonomialIdeal | None,
               window: int = 8) -> bytes:
    """Outline of sigma^v, the region boundary, and staircase lattice dots."""
    if cone.rank != 2:
        raise UnsupportedRank("SVG rendering handles rank 2 only")
    size = 2 * _MARGIN + window * _SCALE
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    # Cone boundary rays.
    for ray in cone.dual_rays:
        end = _clip_ray((0, 0), ray, window)
        x1, y1 = _to_px((0, 0), window)
        x2, y2 = _to_px(end, window)
        lines.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            'stroke="black" stroke-width="1"/>'
        )
    # Region boundary: polyline through the sorted vertices, extended along
    # the two extreme rays of sigma^v.
    if region is not None:
        verts = sorted(region.vertices)
        chain = [_clip_ray(verts[0], cone.dual_rays[0], window)] if verts else []
        chain += verts
        if verts:
            chain.append(_clip_ray(verts[-1], cone.dual_rays[-1], window))
        points = " ".join(",".join(_to_px(p, window)) for p in chain)
        lines.append(
            f'<polyline points="{points}" fill="none" stroke="blue" stroke-width="2"/>'
        )
    # Staircase dots.
    dots = []
    for i in range(window + 1):
        for j in range(window + 1):
            m = (i, j)
            if not cone.contains_m(m):
                continue
            if ideal is not None:
                inside = staircase_contains(ideal, m)
            elif region is not None:
                inside = any(x != 0 for x in m) and region.cogauge(m) >= 1
            else:
                inside = False
            dots.append((m, inside))
    for m, inside in dots:
        cx, cy = _to_px(m, window)
        fill = "red" if inside else "lightgray"
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="{fill}"/>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
