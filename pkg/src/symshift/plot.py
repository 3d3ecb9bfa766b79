"""Plain-text and SVG output of the modified weight parameters w_i* = p+1 - w_i."""

from __future__ import annotations

from xml.sax.saxutils import escape


def weights_text(values) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(values))


def weights_svg(values, title: str = "", xscale: float = 6.0, yscale: float = 24.0, margin: float = 30.0) -> str:
    """Self-contained SVG polyline of ``values`` against their index."""
    values = list(values)
    top = max(max(values, default=0), 1)
    width = margin * 2 + xscale * max(len(values) - 1, 1)
    height = margin * 2 + yscale * top

    def xy(i, v):
        return f"{margin + xscale * i:.1f},{height - margin - yscale * v:.1f}"

    pts = " ".join(xy(i, v) for i, v in enumerate(values))
    base = height - margin
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
        f'<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{margin}" y1="{base:.1f}" x2="{width - margin:.1f}" y2="{base:.1f}" stroke="#888" stroke-width="1"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{base:.1f}" stroke="#888" stroke-width="1"/>',
    ]
    for h in range(top + 1):
        y = base - yscale * h
        parts.append(f'<text x="{margin - 6}" y="{y + 4:.1f}" font-size="10" text-anchor="end">{h}</text>')
    if title:
        parts.append(f'<text x="{width / 2:.1f}" y="{margin / 2 + 4:.1f}" font-size="12" text-anchor="middle">{escape(title)}</text>')
    if len(values) == 1:
        x, y = xy(0, values[0]).split(",")
        parts.append(f'<circle cx="{x}" cy="{y}" r="2" fill="black"/>')
    else:
        parts.append(f'<polyline fill="none" stroke="black" stroke-width="1.2" points="{pts}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
