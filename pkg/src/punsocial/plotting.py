"""Per-metric data files and deterministic SVG line charts.

SVGs are assembled by hand so equal inputs always produce byte-identical
files; no plotting toolkit metadata or timestamps sneak in.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

SERIES_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2")

WIDTH, HEIGHT = 640, 420
MARGIN_LEFT, MARGIN_RIGHT = 70, 30
MARGIN_TOP, MARGIN_BOTTOM = 40, 60


def write_series_data(
    path: str | Path, iterations: Sequence[int], series: Mapping[str, Sequence[float]]
) -> None:
    """TSV with one iteration column and one value column per series."""
    names = list(series)
    lines = ["\t".join(["iteration"] + names)]
    for row_index, iteration in enumerate(iterations):
        values = [f"{series[name][row_index]:.6f}" for name in names]
        lines.append("\t".join([str(iteration)] + values))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _x_position(value: float, x_min: float, x_max: float) -> float:
    span = (x_max - x_min) or 1.0
    usable = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    return MARGIN_LEFT + (value - x_min) / span * usable


def _y_position(value: float, y_min: float, y_max: float) -> float:
    span = (y_max - y_min) or 1.0
    usable = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    return HEIGHT - MARGIN_BOTTOM - (value - y_min) / span * usable


def render_line_chart(
    path: str | Path,
    title: str,
    series: Mapping[str, Sequence[tuple[float, float]]],
    x_label: str = "iteration",
    y_label: str = "value",
) -> None:
    """Render one SVG line chart with a fixed layout and color palette."""
    points = [p for values in series.values() for p in values]
    if not points:
        raise ValueError("nothing to plot")
    x_min = min(p[0] for p in points)
    x_max = max(p[0] for p in points)
    y_min = min(0.0, min(p[1] for p in points))
    y_max = max(1.0, max(p[1] for p in points))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{title}</text>',
    ]
    # Axes
    x0, y0 = MARGIN_LEFT, HEIGHT - MARGIN_BOTTOM
    x1, y1 = WIDTH - MARGIN_RIGHT, MARGIN_TOP
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{(x0 + x1) / 2:.1f}" y="{HEIGHT - 18}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{x_label}</text>'
    )
    parts.append(
        f'<text x="20" y="{(y0 + y1) / 2:.1f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="13" transform="rotate(-90 20 {(y0 + y1) / 2:.1f})">{y_label}</text>'
    )
    # Ticks: 5 on each axis
    for tick in range(5):
        x_value = x_min + tick * (x_max - x_min) / 4 if x_max > x_min else x_min
        y_value = y_min + tick * (y_max - y_min) / 4
        xp = _x_position(x_value, x_min, x_max)
        yp = _y_position(y_value, y_min, y_max)
        parts.append(f'<line x1="{xp:.2f}" y1="{y0}" x2="{xp:.2f}" y2="{y0 + 5}" stroke="black"/>')
        parts.append(
            f'<text x="{xp:.2f}" y="{y0 + 20}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="11">{x_value:g}</text>'
        )
        parts.append(f'<line x1="{x0 - 5}" y1="{yp:.2f}" x2="{x0}" y2="{yp:.2f}" stroke="black"/>')
        parts.append(
            f'<text x="{x0 - 10}" y="{yp + 4:.2f}" text-anchor="end" font-family="sans-serif" '
            f'font-size="11">{y_value:.2f}</text>'
        )
    # Series lines + legend
    for index, (name, values) in enumerate(series.items()):
        color = SERIES_COLORS[index % len(SERIES_COLORS)]
        coords = " ".join(
            f"{_x_position(x, x_min, x_max):.2f},{_y_position(y, y_min, y_max):.2f}"
            for x, y in values
        )
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        legend_y = MARGIN_TOP + 16 * index
        parts.append(
            f'<line x1="{x1 - 130}" y1="{legend_y}" x2="{x1 - 105}" y2="{legend_y}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{x1 - 100}" y="{legend_y + 4}" font-family="sans-serif" '
            f'font-size="12">{name}</text>'
        )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
