"""SVG rendering of line arrangements.

Each line becomes one segment clipped to a fixed world window around the
affine lattice points; each affine lattice point becomes a circle marker
colored by weight (4 black, 3 red, 2 white).  Coordinates are converted
from exact field elements through certified 12-digit approximations, so
the output is deterministic.
"""

from __future__ import annotations

from .field import to_float

CANVAS = 600.0
MARGIN = 0.18
PRECISION = 12

WEIGHT_FILL = {4: "#000000", 3: "#cc2222", 2: "#ffffff"}


def _fmt(v: float) -> str:
    return f"{v:.4f}".rstrip("0").rstrip(".")


def _line_floats(line):
    return tuple(to_float(c, PRECISION) for c in line.coords)


def _clip_line(u, v, w, box):
    """Segment of u*x + v*y + w = 0 inside the box, or None."""
    x0, y0, x1, y1 = box
    pts = []
    eps = 1e-12
    if abs(v) > eps:
        for x in (x0, x1):
            y = -(u * x + w) / v
            if y0 - eps <= y <= y1 + eps:
                pts.append((x, y))
    if abs(u) > eps:
        for y in (y0, y1):
            x = -(v * y + w) / u
            if x0 - eps <= x <= x1 + eps:
                pts.append((x, y))
    # keep the two extremes among collected boundary hits
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def render_svg(arr, out_path=None) -> str:
    """Render the arrangement; returns the SVG text, optionally writing it."""
    affine = [p for p in arr.lattice if p.point.is_affine]
    coords = [
        (to_float(x, PRECISION), to_float(y, PRECISION))
        for x, y in (p.point.affine_xy() for p in affine)
    ]
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-6)
    pad = span * MARGIN
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2
    half = span / 2 + pad
    box = (cx - half, cy - half, cx + half, cy + half)
    scale = CANVAS / (2 * half)

    def screen(x, y):
        return (x - box[0]) * scale, CANVAS - (y - box[1]) * scale

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{int(CANVAS)}" height="{int(CANVAS)}" '
        f'viewBox="0 0 {int(CANVAS)} {int(CANVAS)}">',
        f'<rect width="{int(CANVAS)}" height="{int(CANVAS)}" fill="#ffffff"/>',
    ]
    for label, line in arr.lines:
        u, v, w = _line_floats(line)
        seg = _clip_line(u, v, w, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        sx0, sy0 = screen(ax, ay)
        sx1, sy1 = screen(bx, by)
        parts.append(
            f'<line x1="{_fmt(sx0)}" y1="{_fmt(sy0)}" x2="{_fmt(sx1)}" '
            f'y2="{_fmt(sy1)}" stroke="#333333" stroke-width="1.2">'
            f"<title>{label}</title></line>"
        )
    for p, (x, y) in zip(affine, coords):
        sx, sy = screen(x, y)
        fill = WEIGHT_FILL.get(p.weight, "#8888ff")
        parts.append(
            f'<circle cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="5" fill="{fill}" '
            f'stroke="#000000" stroke-width="1"/>'
        )
        if p.label:
            parts.append(
                f'<text x="{_fmt(sx + 8)}" y="{_fmt(sy - 8)}" '
                f'font-size="14" font-family="serif">{p.label}</text>'
            )
    parts.append("</svg>")
    text = "\n".join(parts) + "\n"
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
