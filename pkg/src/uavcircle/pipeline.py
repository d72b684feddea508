"""Coverage circle -> UAV waypoint at its center -> per-node link statistics."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Tuple

from .channel import Waypoint3, link_stats, LinkStats
from .cmec import ConstrainedResult, constrained_mec
from .scenario import Scenario, dumps


@dataclass(frozen=True)
class NodeLink:
    index: int
    selected: bool
    stats: LinkStats


@dataclass(frozen=True)
class Report:
    constrained: ConstrainedResult
    waypoint: Waypoint3
    per_node: Tuple[NodeLink, ...]
    min_expected_gain: float
    mean_expected_gain: float

    def to_dict(self) -> dict:
        c = self.constrained.circle
        return {
            "circle": {"cx": c.center.x, "cy": c.center.y, "r": c.radius},
            "selected": list(self.constrained.selected),
            "weight_sum": self.constrained.weight_sum,
            "waypoint": {"x": self.waypoint.x, "y": self.waypoint.y, "z": self.waypoint.z},
            "per_node": [
                {"index": n.index, "selected": n.selected, **asdict(n.stats)}
                for n in self.per_node
            ],
            "summary": {
                "min_expected_gain": self.min_expected_gain,
                "mean_expected_gain": self.mean_expected_gain,
            },
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def run_pipeline(s: Scenario) -> Report:
    n = min(s.capacity, len(s.nodes))
    res = constrained_mec(s.nodes, n, s.tolerance)
    center = res.circle.center
    u = Waypoint3(center.x, center.y, s.altitude)
    chosen = set(res.selected)
    per_node = tuple(
        NodeLink(i, i in chosen, link_stats(u, node.point, s.los, s.channel))
        for i, node in enumerate(s.nodes)
    )
    sel_gains = [per_node[i].stats.h_expected for i in res.selected]
    total = 0.0
    for g in sel_gains:
        total += g
    return Report(res, u, per_node, min(sel_gains), total / len(sel_gains))


def write_report(r: Report, path) -> None:
    Path(path).write_text(r.to_json(), encoding="utf-8")


# ---------------------------------------------------------------- SVG

SVG_SIZE = 800.0
MAX_NODE_PX = 12.0


def _f(v: float) -> str:
    return f"{v:.3f}"


def svg_text(s: Scenario, r: Report) -> str:
    c = r.constrained.circle
    xs = [n.point.x for n in s.nodes] + [c.center.x - c.radius, c.center.x + c.radius]
    ys = [n.point.y for n in s.nodes] + [c.center.y - c.radius, c.center.y + c.radius]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.05 * span
    scale = SVG_SIZE / (span + 2 * pad)

    def px(x):
        return (x - x0 + pad) * scale

    def py(y):
        return SVG_SIZE - (y - y0 + pad) * scale

    wmax = max(n.weight for n in s.nodes) or 1.0
    chosen = set(r.constrained.selected)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE:.0f}" '
        f'height="{SVG_SIZE:.0f}" viewBox="0 0 {SVG_SIZE:.0f} {SVG_SIZE:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<circle class="coverage" cx="{_f(px(c.center.x))}" cy="{_f(py(c.center.y))}" '
        f'r="{_f(c.radius * scale)}" fill="#4c72b0" fill-opacity="0.12" '
        'stroke="#4c72b0" stroke-width="1.5"/>',
        '<g class="nodes">',
    ]
    for i, n in enumerate(s.nodes):
        # marker area proportional to weight
        rad = MAX_NODE_PX * math.sqrt(n.weight / wmax)
        cls, fill = ("node selected", "#c44e52") if i in chosen else ("node", "#8c8c8c")
        out.append(
            f'<circle class="{cls}" data-index="{i}" cx="{_f(px(n.point.x))}" '
            f'cy="{_f(py(n.point.y))}" r="{_f(rad)}" fill="{fill}"/>'
        )
    out.append("</g>")
    wx, wy = px(r.waypoint.x), py(r.waypoint.y)
    out.append(
        f'<g class="waypoint" stroke="black" stroke-width="2">'
        f'<line x1="{_f(wx - 6)}" y1="{_f(wy - 6)}" x2="{_f(wx + 6)}" y2="{_f(wy + 6)}"/>'
        f'<line x1="{_f(wx - 6)}" y1="{_f(wy + 6)}" x2="{_f(wx + 6)}" y2="{_f(wy - 6)}"/>'
        "</g>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(s: Scenario, r: Report, path) -> None:
    Path(path).write_text(svg_text(s, r), encoding="utf-8")
