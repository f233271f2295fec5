"""Minimal SVG 1.1 emission for instances with an optional edge set.

Points become circles (the root highlighted), edges straight lines.
The viewport is auto-fitted with a 5% margin; the y-axis is flipped so
figures read in the usual mathematical orientation.
"""

from __future__ import annotations

from .geom import Instance

WIDTH = 800.0
POINT_RADIUS = 3.0
ROOT_RADIUS = 5.0


def render_svg(instance: Instance, edges=()) -> str:
    coords = [(float(p.x), float(p.y)) for p in instance.points]
    xs = [x for x, _ in coords]
    ys = [y for _, y in coords]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span_x = max_x - min_x
    span_y = max_y - min_y
    pad = 0.05 * max(span_x, span_y, 1.0)
    min_x -= pad
    max_x += pad
    min_y -= pad
    max_y += pad
    span_x = max_x - min_x
    span_y = max_y - min_y
    scale = WIDTH / span_x
    height = span_y * scale

    def sx(x):
        return (x - min_x) * scale

    def sy(y):
        return (max_y - y) * scale  # flip: SVG y grows downward

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {WIDTH:.2f} {height:.2f}">',
    ]
    for i, j in sorted(edges):
        x1, y1 = coords[i]
        x2, y2 = coords[j]
        parts.append(
            f'<line x1="{sx(x1):.2f}" y1="{sy(y1):.2f}" '
            f'x2="{sx(x2):.2f}" y2="{sy(y2):.2f}" '
            'stroke="#355" stroke-width="1.5"/>'
        )
    for v, (x, y) in enumerate(coords):
        if v == instance.root:
            parts.append(
                f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="{ROOT_RADIUS}" '
                'fill="#c22" stroke="black" stroke-width="1"/>'
            )
        else:
            parts.append(
                f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="{POINT_RADIUS}" '
                'fill="#27c"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
