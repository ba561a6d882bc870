import math
import re
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from lenscap.d2tree import is_edge
from lenscap.errors import BadHighlight
from lenscap.exactfrac import INF, ONE, ZERO, reduce
from lenscap.render import build_scene, cayley, geodesic, render_svg

from . import strategies

F = reduce
NS = {"s": "http://www.w3.org/2000/svg"}


@pytest.mark.parametrize("x, xy", [(ZERO, (0, 1)), (INF, (0, -1)), (ONE, (1, 0)), (F(-1, 1), (-1, 0))])
def test_cayley_fixed_points(x, xy):
    pt = cayley(x)
    assert abs(pt.x - xy[0]) < 1e-12 and abs(pt.y - xy[1]) < 1e-12


@given(strategies.fractions)
def test_cayley_matches_complex_map(x):
    t = x.num / x.den
    if abs(t) > 1e6:
        return
    z = (t + 1j) / (1j * t + 1)
    pt = cayley(x)
    assert abs(pt.x - z.real) < 1e-9 and abs(pt.y - z.imag) < 1e-9
    assert abs(math.hypot(pt.x, pt.y) - 1) < 1e-12


def test_antipodal_pairs_are_diameters():
    assert geodesic(ZERO, INF).center is None
    assert geodesic(ONE, F(-1, 1)).center is None
    assert geodesic(F(2, 1), F(-1, 2)).center is None


@given(strategies.even_vertices(hi=10**4), strategies.even_vertices(hi=10**4))
def test_geodesic_orthogonal_to_boundary(a, b):
    if a == b:
        return
    g = geodesic(a, b)
    cx, cy = g.center
    assert abs(cx * cx + cy * cy - (1 + g.radius ** 2)) < 1e-9 * max(1.0, g.radius ** 2)


def test_scene_generation_zero():
    sc = build_scene(0)
    assert sc.vertices == {ZERO: 0} and sc.edges == []
    root = ET.fromstring(render_svg(0))
    assert len(root.findall("s:circle", NS)) == 1
    assert root.findall(".//s:g[@class='d2']/s:path", NS) == []
    assert [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")] == ["0/1"]


def test_scene_generation_one():
    sc = build_scene(1, cap=3)
    assert set(map(str, sc.vertices)) == {"0/1", "2/1", "2/3", "2/5", "-2/1", "-2/3", "-2/5"}
    assert len(sc.edges) == 6


def test_scene_highlight():
    sc = build_scene(2, cap=3, highlight=(8, 3))
    assert sc.highlight == [(ZERO, F(2, 1)), (F(2, 1), F(8, 3))]
    svg = render_svg(2, highlight=(8, 3))
    root = ET.fromstring(svg)
    hl = root.findall(".//s:g[@class='highlight']/s:path", NS)
    assert [p.get("data-edge") for p in hl] == ["0/1--2/1", "2/1--8/3"]


def test_highlight_beyond_cap_is_added():
    sc = build_scene(2, cap=1, highlight=(-8, 3))
    assert F(-8, 3) in sc.vertices
    assert (F(-2, 1), F(-8, 3)) in sc.edges


@pytest.mark.parametrize("hl", [(3, 1), (1, 0), (14, 5), (0, 0)])
def test_bad_highlight(hl):
    with pytest.raises(BadHighlight):
        build_scene(2, highlight=hl)


@pytest.mark.parametrize("g, cap", [(1, 3), (2, 3), (3, 4)])
def test_all_scene_edges_are_tree_edges(g, cap):
    sc = build_scene(g, cap=cap, highlight=(8, 3) if g >= 2 else None)
    assert all(is_edge(a, b) for a, b in sc.edges)
    assert len(sc.edges) == len(sc.vertices) - 1


def svg_arc_center(x1, y1, x2, y2, r, large, sweep):
    """Endpoint-to-center conversion for an SVG elliptical arc with rx = ry = r."""
    dx, dy = (x1 - x2) / 2, (y1 - y2) / 2
    coef = math.sqrt(max(0.0, (r * r - dx * dx - dy * dy) / (dx * dx + dy * dy)))
    if large == sweep:
        coef = -coef
    return coef * dy + (x1 + x2) / 2, -coef * dx + (y1 + y2) / 2


def test_svg_arcs_bend_inside_the_disk():
    svg = render_svg(3, cap=4, highlight=(8, 3), show_farey=True)
    arcs = re.findall(r'd="M (\S+) (\S+) A (\S+) \S+ 0 (\d) (\d) (\S+) (\S+)"', svg)
    assert arcs
    for x1, y1, r, large, sweep, x2, y2 in arcs:
        x1, y1, r, x2, y2 = map(float, (x1, y1, r, x2, y2))
        cx, cy = svg_arc_center(x1, y1, x2, y2, r, int(large), int(sweep))
        # the drawn circle is the orthogonal one, so its center sits outside the disk
        assert math.hypot(cx, cy) > 1
        assert abs(cx * cx + cy * cy - (1 + r * r)) < 1e-6 * max(1.0, r * r)


def test_render_is_deterministic_and_sized():
    a = render_svg(2, highlight=(8, 3), show_farey=True, width_px=640)
    assert a == render_svg(2, highlight=(8, 3), show_farey=True, width_px=640)
    root = ET.fromstring(a)
    assert root.get("viewBox") == "-1.05 -1.05 2.1 2.1"
    assert root.get("width") == "640"
    assert root.findall(".//s:g[@class='farey']/s:path", NS)


def test_labels_fade_after_label_generations():
    root = ET.fromstring(render_svg(3, cap=2, label_generations=1))
    labels = {t.text for t in root.iter("{http://www.w3.org/2000/svg}text")}
    assert "2/1" in labels and "4/1" not in labels
