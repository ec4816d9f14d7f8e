"""SVG drawing of a cover: strip boundaries, tile lines and sector outlines."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .placement import Cover

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="{w:.2f}" height="{h:.2f}" viewBox="0 0 {w:.2f} {h:.2f}" version="1.1" xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="{w:.2f}" height="{h:.2f}" style="fill:#ffffff"/>
"""

PALETTE = ("#1f77b4", "#d62728")


@dataclass(frozen=True)
class RenderSpec:
    output_path: str = "cover.svg"
    pixels_per_unit: int = 200
    show_tiles: bool = True
    sector_fill_opacity: float = 0.25

    def __post_init__(self):
        if self.pixels_per_unit < 10:
            raise ValueError("pixels_per_unit must be at least 10")
        if not 0 < self.sector_fill_opacity <= 1:
            raise ValueError("sector_fill_opacity must lie in (0, 1]")


def render_svg(cover: Cover, spec: RenderSpec | None = None) -> str:
    """SVG document for ``cover``; the y axis points up, as in a plot."""
    spec = spec or RenderSpec()
    k = spec.pixels_per_unit
    R = cover.shape.radius
    x0, x1 = cover.window.x_min, cover.window.x_max
    pad = 0.25
    y_top = 1.0 + R + pad
    y_bot = -R - pad
    w = (x1 - x0 + 2 * pad) * k
    h = (y_top - y_bot) * k

    def X(x):
        return (x - x0 + pad) * k

    def Y(y):
        return (y_top - y) * k

    out = [PREAMBLE.format(w=w, h=h)]
    out.append(f'<rect x="{X(x0):.3f}" y="{Y(1.0):.3f}" width="{(x1 - x0) * k:.3f}" height="{k:.3f}" '
               'style="fill:#f4f4f4;stroke:none"/>')
    if spec.show_tiles:
        n = int(math.floor((x1 - x0) / cover.period + 1e-9))
        for i in range(n + 1):
            xt = x0 + i * cover.period
            out.append(f'<line x1="{X(xt):.3f}" y1="{Y(0):.3f}" x2="{X(xt):.3f}" y2="{Y(1):.3f}" '
                       'style="stroke:#888888;stroke-width:1;stroke-dasharray:4,3"/>')
    # draws only sectors that reach into the window
    for i, s in enumerate(cover.placements):
        if s.vertex.x - R > x1 or s.vertex.x + R < x0:
            continue
        v = s.vertex
        p, q = s.side_endpoints()
        large = 1 if s.angle > math.pi else 0
        color = PALETTE[0] if v.y < 0.5 else PALETTE[1]
        out.append(
            f'<path d="M {X(v.x):.3f} {Y(v.y):.3f} L {X(p.x):.3f} {Y(p.y):.3f} '
            f'A {R * k:.3f} {R * k:.3f} 0 {large} 0 {X(q.x):.3f} {Y(q.y):.3f} Z" '
            f'style="fill:{color};fill-opacity:{spec.sector_fill_opacity};stroke:{color};stroke-width:1.5"/>'
        )
        out.append(f'<circle cx="{X(v.x):.3f}" cy="{Y(v.y):.3f}" r="3" style="fill:{color}"/>')
    for yb in (0.0, 1.0):
        out.append(f'<line x1="{X(x0):.3f}" y1="{Y(yb):.3f}" x2="{X(x1):.3f}" y2="{Y(yb):.3f}" '
                   'style="stroke:#000000;stroke-width:2"/>')
    out.append("</svg>\n")
    return "\n".join(out)


def write_svg(cover: Cover, spec: RenderSpec) -> str:
    with open(spec.output_path, "w") as fh:
        fh.write(render_svg(cover, spec))
    return spec.output_path
