"""Static SVG drawing of the stretched chord configuration."""
from __future__ import annotations

from .chords import EllipseSpec, lattice_points


def _num(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(n: int, spec: EllipseSpec, size_px: int = 480) -> str:
    """Ellipse outline, the ``n`` marked points and the chords from ``a + b``.

    The view box is centred on the origin with half-width ``1.1 * (a + |b|)``
    in both directions; SVG's y axis points down, so ordinates are negated.
    """
    pts = lattice_points(n, spec)
    half = 1.1 * (spec.a + abs(spec.b))
    stroke = half / 150
    radius = half / 60
    anchor = pts[0]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size_px}" height="{size_px}" '
        f'viewBox="{_num(-half)} {_num(-half)} {_num(2 * half)} {_num(2 * half)}">',
        f'  <ellipse cx="0" cy="0" rx="{_num(spec.a + spec.b)}" ry="{_num(spec.a - spec.b)}" '
        f'fill="none" stroke="black" stroke-width="{_num(stroke)}"/>',
    ]
    for z in pts[1:]:
        lines.append(
            f'  <line x1="{_num(anchor.real)}" y1="{_num(-anchor.imag)}" '
            f'x2="{_num(z.real)}" y2="{_num(-z.imag)}" stroke="#1f5fbf" stroke-width="{_num(stroke)}"/>'
        )
    for j, z in enumerate(pts):
        fill = "#c0392b" if j == 0 else "black"
        lines.append(f'  <circle cx="{_num(z.real)}" cy="{_num(-z.imag)}" r="{_num(radius)}" fill="{fill}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
