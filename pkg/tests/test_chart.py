"""SVG tower charts: structure, determinism, geometry.

The renderer promises plain SVG 1.1 with integer coordinates, a white
background, one column per nonzero slice degree and one row per
conjugacy class with the whole group on top, so these tests parse the
text directly rather than going through an XML library.
"""

import re

from slicekit.chart import render_tower_svg


def test_chart_document_shape(towers):
    svg = render_tower_svg(towers[("C2", "burnside", 1)])
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" version="1.1"')
    assert svg.rstrip().endswith("</svg>")
    assert 'fill="white"' in svg
    assert 'font-family="monospace"' in svg
    assert 'font-size="12"' in svg
    assert ">slice tower: shift +1, regular<" in svg


def test_chart_rows_and_columns(towers):
    svg = render_tower_svg(towers[("C2", "burnside", 1)])
    texts = re.findall(r"<text[^>]*>([^<]*)</text>", svg)
    # degree headers for both nonzero slices, then rows G on top of 1
    assert "1" in texts and "2" in texts
    assert texts.index("G") < texts.index("1", texts.index("G"))
    # burnside slices: Z at both levels in degree 1, Z at G in degree 2
    assert texts.count("Z") == 3


def test_chart_minus_tower_labels(towers):
    svg = render_tower_svg(towers[("C2", "constant-Z", -1)])
    assert ">slice tower: shift -1, regular<" in svg
    texts = re.findall(r"<text[^>]*>([^<]*)</text>", svg)
    assert "-2" in texts and "-1" in texts
    assert "Z/2" in texts


def test_chart_integer_geometry(towers):
    for key in (("S3", "burnside", 1), ("Q8", "constant-Z2", -1)):
        svg = render_tower_svg(towers[key])
        for attr in re.findall(r' (?:x|y|x1|y1|x2|y2|width|height)="([^"]*)"', svg):
            assert re.fullmatch(r"-?[0-9]+", attr), attr
        assert "http" not in svg.replace("http://www.w3.org/2000/svg", "")


def test_chart_deterministic_bytes(groups):
    from slicekit.mackey import mackey_preset
    from slicekit.slices import em_tower_plus
    a = render_tower_svg(em_tower_plus(mackey_preset(groups["S3"], "burnside")))
    b = render_tower_svg(em_tower_plus(mackey_preset(groups["S3"], "burnside")))
    assert a == b


def test_chart_every_class_row_present(towers, lattices):
    svg = render_tower_svg(towers[("D8", "burnside", 1)])
    texts = re.findall(r"<text[^>]*>([^<]*)</text>", svg)
    lat = lattices["D8"]
    for sid in lat.class_representatives():
        assert lat.label(sid) in texts
