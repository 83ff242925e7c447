"""Static SVG route maps."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .chromosome import RoutePlan
from .scenario import Scenario

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def plot_svg(plan: RoutePlan, scenario: Scenario, size: int = 600, radius_scale: float = 2.0, title: str = "") -> str:
    """Mission square, fires at (scaled) initial radius, UAV starts, one numbered route per UAV.

    Output depends only on the inputs, so reruns are byte-identical.
    """
    margin = 30
    s = (size - 2 * margin) / max(scenario.width, scenario.height)
    h_px = scenario.height * s + 2 * margin
    w_px = scenario.width * s + 2 * margin

    def xy(p):
        # SVG y grows downwards
        return margin + p[0] * s, margin + (scenario.height - p[1]) * s

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w_px)}" height="{_fmt(h_px)}" '
        f'viewBox="0 0 {_fmt(w_px)} {_fmt(h_px)}">',
        f'<rect x="{margin}" y="{margin}" width="{_fmt(scenario.width * s)}" '
        f'height="{_fmt(scenario.height * s)}" fill="white" stroke="black" stroke-width="1"/>',
    ]
    if title:
        out.append(f'<text x="{margin}" y="{margin - 10}" font-size="14">{escape(title)}</text>')
    for f in scenario.fires:
        cx, cy = xy(f.position)
        r = math.sqrt(f.initial_area / math.pi) * s * radius_scale
        out.append(
            f'<circle class="fire" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(max(r, 2.0))}" '
            f'fill="orange" fill-opacity="0.6" stroke="red"/>'
        )
    for i, route in enumerate(plan.routes):
        color = PALETTE[i % len(PALETTE)]
        ux, uy = xy(scenario.uavs[i].position)
        if route:
            pts = [(ux, uy)] + [xy(scenario.fire(j).position) for j in route]
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            out.append(
                f'<polyline class="route" data-uav="{i + 1}" points="{coords}" fill="none" '
                f'stroke="{color}" stroke-width="1.5"/>'
            )
            for order, (x, y) in enumerate(pts[1:], start=1):
                out.append(
                    f'<text x="{_fmt(x + 4)}" y="{_fmt(y - 4)}" font-size="10" fill="{color}">{order}</text>'
                )
        out.append(
            f'<rect class="uav" data-uav="{i + 1}" x="{_fmt(ux - 4)}" y="{_fmt(uy - 4)}" width="8" height="8" '
            f'fill="{color}"/>'
        )
        out.append(f'<text x="{_fmt(ux + 6)}" y="{_fmt(uy + 12)}" font-size="10">U{i + 1}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
