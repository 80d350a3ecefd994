"""Static SVG rendering of slice towers.

One chart is a grid: columns are the nonzero slice degrees in
increasing order, rows are subgroup conjugacy classes with the whole
group on top, and each cell shows the invariant factors of that slice's
level.  Output is plain SVG 1.1 text with integer coordinates and no
external resources, so identical towers render byte-identical files.
"""

from __future__ import annotations

from .abelian import factor_string

FONT = "monospace"
FONT_SIZE = 12
CHAR_W = 8          # coarse monospace advance at size 12
ROW_H = 24
PAD = 12


def _escape(text):
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))


def _text(x, y, s, anchor="middle"):
    return ('<text x="%d" y="%d" font-family="%s" font-size="%d" '
            'text-anchor="%s">%s</text>' % (x, y, FONT, FONT_SIZE, anchor, _escape(s)))


def _line(x1, y1, x2, y2):
    return '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black" stroke-width="1"/>' % (
        x1, y1, x2, y2)


def render_tower_svg(T):
    lat = T.base.lattice
    reps = sorted(lat.class_representatives(),
                  key=lambda sid: (-lat.subgroup(sid).order, sid))
    labels = [lat.label(sid) for sid in reps]
    degrees = list(T.nonzero_slice_degrees())

    cells = {}
    for k in degrees:
        S = T.slices[k]
        for sid in reps:
            inv = S.levels[sid].invariant_factors()
            cells[(sid, k)] = "" if inv == (0, ()) else factor_string(inv)

    label_w = PAD * 2 + CHAR_W * max([len(s) for s in labels] or [1])
    col_w = []
    for k in degrees:
        longest = max([len(cells[(sid, k)]) for sid in reps] + [len(str(k))])
        col_w.append(max(60, PAD * 2 + CHAR_W * longest))

    title = "slice tower: shift %+d, %s" % (T.shift, T.variant)
    top = PAD + ROW_H          # title band
    header_y = top + ROW_H     # baseline row for degree headers
    grid_top = top + ROW_H + 6
    width = label_w + sum(col_w) + PAD
    height = grid_top + ROW_H * len(reps) + PAD
    width = max(width, PAD * 2 + CHAR_W * len(title) + 2 * PAD)

    parts = []
    parts.append('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                 'width="%d" height="%d" viewBox="0 0 %d %d">' % (
                     width, height, width, height))
    parts.append('<rect x="0" y="0" width="%d" height="%d" fill="white"/>' % (
        width, height))
    parts.append(_text(PAD, PAD + FONT_SIZE, title, anchor="start"))

    x = label_w
    col_x = []
    for w in col_w:
        col_x.append(x)
        x += w
    right = label_w + sum(col_w)

    for k, cx, w in zip(degrees, col_x, col_w):
        parts.append(_text(cx + w // 2, header_y, str(k)))
    parts.append(_line(label_w, grid_top, right if degrees else label_w + 60, grid_top))
    parts.append(_line(label_w, grid_top, label_w, grid_top + ROW_H * len(reps)))

    for i, (sid, lab) in enumerate(zip(reps, labels)):
        y = grid_top + ROW_H * i + (ROW_H + FONT_SIZE) // 2 - 2
        parts.append(_text(label_w - PAD, y, lab, anchor="end"))
        for k, cx, w in zip(degrees, col_x, col_w):
            s = cells[(sid, k)]
            if s:
                parts.append(_text(cx + w // 2, y, s))

    parts.append('</svg>')
    return "\n".join(parts) + "\n"


def render_chart(T, path):
    svg = render_tower_svg(T)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg)
