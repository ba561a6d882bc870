"""SVG pictures of the even-slope tree in the Poincare disk.

Graph structure is exact; only the final coordinates are floats. The real line
plus infinity is sent to the unit circle by z -> (z + i)/(iz + 1), which puts
0/1 at the top, 1/1 on the right and infinity at the bottom.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .d2tree import children, default_ts, generation, is_vertex, slope_path
from .errors import BadHighlight
from .exactfrac import INF, ZERO, ExtRational, reduce


@dataclass(frozen=True)
class DiskPoint:
    x: float
    y: float


def cayley(v: ExtRational) -> DiskPoint:
    if v.is_inf:
        return DiskPoint(0.0, -1.0)
    p, q = v.num, v.den
    # t = p/q: (2t, 1 - t^2) / (1 + t^2), kept in integers until the last step
    r = p * p + q * q
    return DiskPoint(2 * p * q / r, (q * q - p * p) / r)


@dataclass(frozen=True)
class Geodesic:
    """Hyperbolic line between two boundary points.

    ``center``/``radius`` describe the supporting circle orthogonal to the unit
    circle; both are ``None`` when the endpoints are antipodal (a diameter).
    """

    u: DiskPoint
    v: DiskPoint
    center: Optional[tuple[float, float]]
    radius: Optional[float]


def _antipodal(a: ExtRational, b: ExtRational) -> bool:
    # t * s = -1, with infinity antipodal to 0
    return a.num * b.num + a.den * b.den == 0


def geodesic(a: ExtRational, b: ExtRational) -> Geodesic:
    u, v = cayley(a), cayley(b)
    if _antipodal(a, b):
        return Geodesic(u, v, None, None)
    dot = u.x * v.x + u.y * v.y
    cx, cy = (u.x + v.x) / (1 + dot), (u.y + v.y) / (1 + dot)
    radius = math.hypot(u.x - cx, u.y - cy)
    return Geodesic(u, v, (cx, cy), radius)


@dataclass
class Scene:
    vertices: dict[ExtRational, int] = field(default_factory=dict)  # vertex -> generation
    edges: list[tuple[ExtRational, ExtRational]] = field(default_factory=list)
    farey_edges: list[tuple[ExtRational, ExtRational]] = field(default_factory=list)
    highlight: list[tuple[ExtRational, ExtRational]] = field(default_factory=list)


def _farey(depth: int) -> list[tuple[ExtRational, ExtRational]]:
    """Farey edges produced by `depth` rounds of mediants on [0, inf], mirrored."""
    edges = [(ZERO, INF)]
    frontier = [(ZERO, INF)]
    for _ in range(depth):
        nxt = []
        for a, b in frontier:
            m = reduce(a.num + b.num, a.den + b.den)
            edges += [(a, m), (m, b)]
            nxt += [(a, m), (m, b)]
        frontier = nxt
    mirrored = [(-a, -b) for a, b in edges if not (a == ZERO and b == INF)]
    return edges + mirrored


def build_scene(generations: int, cap: int = 3, highlight: Optional[tuple[int, int]] = None,
                farey_depth: int = 0) -> Scene:
    """Vertices of generation <= `generations` reached with the first `cap` child parameters.

    Both halves are drawn; the negative half mirrors the positive one. A
    highlighted target of generation <= `generations` is added together with
    its path even if the cap would have skipped it.
    """
    if generations < 0:
        raise ValueError(f"generations must be non-negative, got {generations}")
    sc = Scene()
    sc.vertices[ZERO] = 0
    layer = [ZERO]
    for g in range(1, generations + 1):
        nxt = []
        for x in layer:
            for c in children(x, default_ts(x, cap)):
                sc.vertices[c] = g
                sc.edges.append((x, c))
                nxt.append(c)
        layer = nxt

    path_edges = []
    if highlight is not None:
        p, q = highlight
        if p == 0 and q == 0:
            raise BadHighlight("0/0 is not a slope")
        target = reduce(p, q)
        if not is_vertex(target):
            raise BadHighlight(f"{target} is not an even vertex")
        if target != ZERO:
            g = generation(target)
            if g > generations:
                raise BadHighlight(f"{target} has generation {g}, beyond the {generations} rendered")
            sign = 1 if target.num > 0 else -1
            slopes = slope_path(abs(target.num), sign * target.den).slopes
            path_edges = list(zip(slopes, slopes[1:]))

    sc.edges += [(-a, -b) for a, b in sc.edges]
    for v, g in list(sc.vertices.items()):
        sc.vertices[-v] = g
    have = set(sc.edges)
    for a, b in path_edges:
        sc.vertices.setdefault(b, sc.vertices[a] + 1)
        if (a, b) not in have:
            sc.edges.append((a, b))
            have.add((a, b))
    sc.highlight = path_edges
    if farey_depth:
        sc.farey_edges = _farey(farey_depth)
    return sc


def _fmt(v: float) -> str:
    s = f"{v:.10f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _svg_y(y: float) -> float:
    return -y


def _path_d(geo: Geodesic) -> str:
    ux, uy = geo.u.x, _svg_y(geo.u.y)
    vx, vy = geo.v.x, _svg_y(geo.v.y)
    if geo.center is None:
        return f"M {_fmt(ux)} {_fmt(uy)} L {_fmt(vx)} {_fmt(vy)}"
    cx, cy = geo.center[0], _svg_y(geo.center[1])
    cross = (ux - cx) * (vy - cy) - (uy - cy) * (vx - cx)
    sweep = 1 if cross > 0 else 0
    r = _fmt(geo.radius)
    return f"M {_fmt(ux)} {_fmt(uy)} A {r} {r} 0 0 {sweep} {_fmt(vx)} {_fmt(vy)}"


def render_svg(generations: int, *, show_farey: bool = False, highlight: Optional[tuple[int, int]] = None,
               width_px: int = 800, cap: int = 3, label_generations: int = 2, farey_depth: int = 5) -> str:
    sc = build_scene(generations, cap, highlight, farey_depth if show_farey else 0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width_px}" height="{width_px}" '
        'viewBox="-1.05 -1.05 2.1 2.1">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.004"/>',
    ]
    if sc.farey_edges:
        out.append('<g class="farey" fill="none" stroke="#bbbbbb" stroke-width="0.002">')
        out += [f'<path d="{_path_d(geodesic(a, b))}"/>' for a, b in sc.farey_edges]
        out.append("</g>")
    out.append('<g class="d2" fill="none" stroke="black" stroke-width="0.004">')
    out += [f'<path data-edge="{a}--{b}" d="{_path_d(geodesic(a, b))}"/>' for a, b in sc.edges]
    out.append("</g>")
    if sc.highlight:
        out.append('<g class="highlight" fill="none" stroke="#d62728" stroke-width="0.012">')
        out += [f'<path data-edge="{a}--{b}" d="{_path_d(geodesic(a, b))}"/>' for a, b in sc.highlight]
        out.append("</g>")
    out.append('<g class="vertices" font-family="sans-serif" text-anchor="middle" '
               'stroke="white" stroke-width="0.006" paint-order="stroke">')
    for v, g in sorted(sc.vertices.items(), key=lambda kv: (kv[1], kv[0])):
        pt = cayley(v)
        x, y = pt.x, _svg_y(pt.y)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(0.012 / (1 + g))}" fill="black"/>')
        if g <= label_generations:
            fs = 0.06 / (1 + 0.5 * g)
            lx, ly = x * (1 - 1.5 * fs), y * (1 - 1.5 * fs) + fs / 3
            out.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="{_fmt(fs)}">{v}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
