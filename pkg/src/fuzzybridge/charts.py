"""Deterministic SVG renderings of membership bar graphs and centroid positions.

Both charts use a fixed 640x480 canvas with the plot area at x 70..570 and
y 60..420. The x axis always spans 0..5 (one unit per label), so 100 px per
unit. Bar charts span 0..1 membership on y (360 px per unit); the centroid
plot spans 0..0.6 (600 px per unit).
"""
from __future__ import annotations

from fractions import Fraction
from html import escape
from typing import Sequence, Union

from .assessment import LABELS, Centroid, MembershipVector
from .reporting import fraction_text

Number = Union[Fraction, float, int]

WIDTH, HEIGHT = 640, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 570, 60, 420
X_SCALE = Fraction(RIGHT - LEFT, 5)
BAR_Y_MAX = Fraction(1)
CENTROID_Y_MAX = Fraction(6, 10)

# Vertices of the region sketch: worst, uniform (minimum y_c) and ideal centroids.
WORST = (Fraction(1, 2), Fraction(1, 2))
UNIFORM = (Fraction(5, 2), Fraction(1, 10))
IDEAL = (Fraction(9, 2), Fraction(1, 2))


def fmt(v: Number) -> str:
    """Shortest decimal text for a coordinate, at most 3 places."""
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    s = f"{float(round(v, 3)):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _px_x(x: Number) -> Fraction:
    return LEFT + X_SCALE * Fraction(x)


def _px_y(y: Number, y_max: Fraction) -> Fraction:
    return BOTTOM - Fraction(BOTTOM - TOP) * Fraction(y) / y_max


def _header(kind: str, y_max: Fraction) -> list[str]:
    y_scale = Fraction(BOTTOM - TOP) / y_max
    return [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f"<!-- fuzzybridge {kind}: x {fmt(X_SCALE)} px per unit from x={LEFT}, "
        f"y {fmt(y_scale)} px per unit up from y={BOTTOM} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]


def _axes(y_max: Fraction, y_step: Fraction, title: str, x_name: str, y_name: str) -> list[str]:
    out = [
        f'<text x="{WIDTH // 2}" y="{TOP // 2}" text-anchor="middle" font-size="16">{escape(title)}</text>',
        f'<text x="{RIGHT + 10}" y="{BOTTOM + 4}">{x_name}</text>',
        f'<text x="{LEFT}" y="{TOP - 10}" text-anchor="middle">{y_name}</text>',
        f'<line class="axis" x1="{LEFT}" y1="{BOTTOM}" x2="{RIGHT}" y2="{BOTTOM}" stroke="black"/>',
        f'<line class="axis" x1="{LEFT}" y1="{BOTTOM}" x2="{LEFT}" y2="{TOP}" stroke="black"/>',
    ]
    for i in range(6):
        x = fmt(_px_x(i))
        out.append(f'<line x1="{x}" y1="{BOTTOM}" x2="{x}" y2="{BOTTOM + 5}" stroke="black"/>')
        out.append(f'<text x="{x}" y="{BOTTOM + 18}" text-anchor="middle">{i}</text>')
    steps = int(y_max / y_step)
    for k in range(steps + 1):
        v = y_step * k
        y = fmt(_px_y(v, y_max))
        out.append(f'<line x1="{LEFT - 5}" y1="{y}" x2="{LEFT}" y2="{y}" stroke="black"/>')
        out.append(f'<text x="{LEFT - 8}" y="{y}" text-anchor="end" dominant-baseline="middle">{fmt(v)}</text>')
    return out


def render_bar_chart(v: MembershipVector, title: str = "Membership") -> str:
    """Bar graph of a membership vector: label F over [0,1), D over [1,2), ..., A over [4,5]."""
    out = _header("membership bar chart", BAR_Y_MAX)
    out += _axes(BAR_Y_MAX, Fraction(1, 5), title, "x", "m(x)")
    for i, label in enumerate(LABELS):
        y = v[label]
        top = _px_y(y, BAR_Y_MAX)
        out.append(
            f'<rect class="bar" data-label="{label.name}" data-membership="{fraction_text(y)}" '
            f'x="{fmt(_px_x(i))}" y="{fmt(top)}" width="{fmt(X_SCALE)}" height="{fmt(BOTTOM - top)}" '
            f'fill="#4a7ab5" stroke="black"/>'
        )
        centre = fmt(_px_x(Fraction(2 * i + 1, 2)))
        out.append(f'<text x="{centre}" y="{BOTTOM + 34}" text-anchor="middle" font-weight="bold">{label.name}</text>')
        out.append(f'<text x="{centre}" y="{fmt(top - 6)}" text-anchor="middle">{fraction_text(y)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_centroid_plot(
    points: Sequence[tuple[str, Centroid]], title: str = "Centres of gravity"
) -> str:
    """Plot group centroids over the worst/uniform/ideal triangle.

    The triangle is a visual guide only; points outside it are drawn as is.
    """
    if not points:
        raise ValueError("no centroids to plot")
    y_max = CENTROID_Y_MAX
    out = _header("centroid plot", y_max)
    out += _axes(y_max, Fraction(1, 10), title, "x_c", "y_c")
    corners = [WORST, UNIFORM, IDEAL]
    poly = " ".join(f"{fmt(_px_x(x))},{fmt(_px_y(y, y_max))}" for x, y in corners)
    out.append(f'<polygon class="region" points="{poly}" fill="#eeeeee" stroke="gray" stroke-dasharray="4 3"/>')
    for name, (x, y), dy in zip(("worst", "uniform", "ideal"), corners, (-8, 16, -8)):
        out.append(
            f'<text class="vertex" x="{fmt(_px_x(x))}" y="{fmt(_px_y(y, y_max) + dy)}" '
            f'text-anchor="middle" fill="gray">{name}</text>'
        )
    for k, (group, c) in enumerate(points):
        cx, cy = fmt(_px_x(c.x_c)), fmt(_px_y(c.y_c, y_max))
        out.append(
            f'<circle class="centroid" data-group="{escape(group)}" data-x="{fraction_text(c.x_c)}" '
            f'data-y="{fraction_text(c.y_c)}" cx="{cx}" cy="{cy}" r="4" fill="#c0392b"/>'
        )
        dy = -8 if k % 2 == 0 else 16
        out.append(f'<text x="{cx}" y="{fmt(_px_y(c.y_c, y_max) + dy)}" text-anchor="middle">{escape(group)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
