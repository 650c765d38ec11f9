"""ASCII and SVG frame rendering of configurations."""

from __future__ import annotations

from .grid import Configuration

Viewport = tuple[int, int, int, int]  # x0, y0, x1, y1 inclusive


def render_ascii(c: Configuration, viewport: Viewport) -> str:
    """One character per node, rows printed north to south: `.` for an
    empty node, the first letter of the color label otherwise."""
    x0, y0, x1, y1 = _check(viewport)
    rows = []
    for y in range(y1, y0 - 1, -1):
        rows.append(
            " ".join(c[(x, y)][0] if (x, y) in c else "." for x in range(x0, x1 + 1))
        )
    return "\n".join(rows) + "\n"


_SVG_COLORS = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"
]


def render_svg(c: Configuration, viewport: Viewport, cell: int = 24) -> str:
    x0, y0, x1, y1 = _check(viewport)
    w = (x1 - x0 + 1) * cell
    h = (y1 - y0 + 1) * cell
    labels = sorted({col for col in c.values()})
    fill = {lab: _SVG_COLORS[i % len(_SVG_COLORS)] for i, lab in enumerate(labels)}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
    ]
    for i in range(x1 - x0 + 2):
        out.append(
            f'<line x1="{i * cell}" y1="0" x2="{i * cell}" y2="{h}" '
            'stroke="#ccc" stroke-width="1"/>'
        )
    for j in range(y1 - y0 + 2):
        out.append(
            f'<line x1="0" y1="{j * cell}" x2="{w}" y2="{j * cell}" '
            'stroke="#ccc" stroke-width="1"/>'
        )
    for (x, y), col in sorted(c.items()):
        cx = (x - x0) * cell + cell // 2
        cy = (y1 - y) * cell + cell // 2
        out.append(
            f'<circle cx="{cx}" cy="{cy}" r="{cell // 2 - 3}" '
            f'fill="{fill[col]}" stroke="black"/>'
        )
        out.append(
            f'<text x="{cx}" y="{cy + 4}" text-anchor="middle" '
            f'font-size="{cell // 2}" fill="white">{col[0]}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_frame(c: Configuration, viewport: Viewport, format: str = "ascii") -> str:
    if format == "ascii":
        return render_ascii(c, viewport)
    if format == "svg":
        return render_svg(c, viewport)
    raise ValueError(f"unknown format {format!r}")


def _check(viewport: Viewport) -> Viewport:
    x0, y0, x1, y1 = viewport
    if x1 < x0 or y1 < y0:
        raise ValueError(f"degenerate viewport {viewport}")
    return viewport
