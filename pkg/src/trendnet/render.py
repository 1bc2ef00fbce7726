"""The four figure families as deterministic SVG documents.

Line chart (one location's trend), correlation heatmap, spanning-tree
diagram, and choropleth frames.  Same input + same RenderSpec = identical
bytes; all randomness is confined to the seeded tree layout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .correlation import CorrelationMatrix
from .errors import EmptySeries, InvalidValue, LabelMismatch
from .layout import force_layout
from .network import CentralityReport, SpanningTree
from .svg import SvgDoc, fmt
from .timeseries import LocationSeries
from .trends_csv import RegionSnapshot

WORLD_GEOMETRY_PATH = Path(__file__).resolve().parent / "data" / "world_grid.json"

NEUTRAL_FILL = "#d4d4d4"


@dataclass(frozen=True)
class RenderSpec:
    """Size, palette, seed, and title for one render."""

    width: int = 900
    height: int = 600
    color_map: str = ""
    seed: int = 42
    title: str = ""

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise InvalidValue(f"render size must be positive, got {self.width}x{self.height}")


def _lerp_channel(a: int, b: int, t: float) -> int:
    return int(round(a + (b - a) * t))


def _lerp_hex(c0: str, c1: str, t: float) -> str:
    r0, g0, b0 = int(c0[1:3], 16), int(c0[3:5], 16), int(c0[5:7], 16)
    r1, g1, b1 = int(c1[1:3], 16), int(c1[3:5], 16), int(c1[5:7], 16)
    return "#{:02x}{:02x}{:02x}".format(
        _lerp_channel(r0, r1, t), _lerp_channel(g0, g1, t), _lerp_channel(b0, b1, t)
    )


def diverging_color(value: float) -> str:
    """Blue (-1) through near-white (0) to red (+1)."""
    v = max(-1.0, min(1.0, value))
    if v < 0:
        return _lerp_hex("#f7f7f7", "#0571b0", -v)
    return _lerp_hex("#f7f7f7", "#ca0020", v)


def sequential_color(fraction: float) -> str:
    """Pale (0) to dark red (1)."""
    return _lerp_hex("#fff5f0", "#99000d", max(0.0, min(1.0, fraction)))

_SCALES = {
    "rdbu": diverging_color,
    "reds": sequential_color,
}


def _scale(spec: RenderSpec, default: str):
    name = spec.color_map or default
    if name not in _SCALES:
        raise InvalidValue(f"unknown color map {name!r} (have {sorted(_SCALES)})")
    return _SCALES[name]


def render_line_chart(series: LocationSeries, spec: RenderSpec) -> str:
    """One polyline over a fixed [0, 100] y-axis with date labels."""
    if len(series.values) == 0:
        raise EmptySeries("nothing to plot")
    doc = SvgDoc(spec.width, spec.height)
    left, right, top, bottom = 55, 20, 45, 50
    plot_w = spec.width - left - right
    plot_h = spec.height - top - bottom

    doc.rect(left, top, plot_w, plot_h, fill="#ffffff", stroke="#cccccc")
    for tick in (0, 25, 50, 75, 100):
        y = top + plot_h * (1.0 - tick / 100.0)
        doc.line(left, y, left + plot_w, y, stroke="#e5e5e5", **{"class": "gridline"})
        doc.text(left - 8, y + 3, str(tick), font_size="10", text_anchor="end",
                 fill="#444444", font_family="sans-serif")

    n = len(series.values)
    dates = series.grid.dates()

    def x_at(i: int) -> float:
        if n == 1:
            return left + plot_w / 2.0
        return left + plot_w * i / (n - 1)

    points = [
        (x_at(i), top + plot_h * (1.0 - v / 100.0)) for i, v in enumerate(series.values)
    ]
    doc.polyline(points, stroke="#1f77b4", stroke_width="1.5", **{"class": "series"})

    n_ticks = min(6, n)
    tick_indices = sorted({round(i * (n - 1) / max(1, n_ticks - 1)) for i in range(n_ticks)})
    for i in tick_indices:
        doc.line(x_at(i), top + plot_h, x_at(i), top + plot_h + 4, stroke="#444444")
        doc.text(x_at(i), top + plot_h + 16, dates[i].isoformat(), font_size="9",
                 text_anchor="middle", fill="#444444", font_family="sans-serif",
                 **{"class": "date-tick"})

    title = spec.title or f"{series.keyword} ({series.geo})"
    doc.text(spec.width / 2.0, 22, title, font_size="15", text_anchor="middle",
             fill="#111111", font_family="sans-serif", **{"class": "title"})
    doc.text(14, top + plot_h / 2.0, "relative search volume", font_size="10",
             text_anchor="middle", fill="#444444", font_family="sans-serif",
             transform=f"rotate(-90 14 {fmt(top + plot_h / 2.0)})")
    return doc.to_string()


def render_heatmap(matrix: CorrelationMatrix, spec: RenderSpec) -> str:
    """N x N colored cells in canonical label order, labels on both axes."""
    color = _scale(spec, "rdbu")
    doc = SvgDoc(spec.width, spec.height)
    n = len(matrix)
    left, top = 70, 70
    legend_h = 40
    cell = min((spec.width - left - 20) / n, (spec.height - top - 20 - legend_h) / n)
    font = fmt(max(3.0, min(10.0, cell * 0.7)))

    title = spec.title or f"{matrix.method} correlation"
    doc.text(spec.width / 2.0, 22, title, font_size="15", text_anchor="middle",
             fill="#111111", font_family="sans-serif", **{"class": "title"})

    for i, row_label in enumerate(matrix.labels):
        y = top + i * cell
        doc.text(left - 5, y + cell * 0.75, row_label, font_size=font, text_anchor="end",
                 fill="#333333", font_family="sans-serif", **{"class": "row-label"})
        x_col = left + i * cell
        doc.text(x_col + cell * 0.75, top - 5, row_label, font_size=font,
                 text_anchor="start", fill="#333333", font_family="sans-serif",
                 transform=f"rotate(-90 {fmt(x_col + cell * 0.75)} {fmt(top - 5)})",
                 **{"class": "col-label"})
        for j in range(n):
            doc.rect(left + j * cell, y, cell, cell, fill=color(matrix.rho[i][j]),
                     **{"class": "cell"})

    # Legend: fixed [-1, 1] scale regardless of observed values.
    steps = 20
    legend_w = min(240.0, spec.width - left - 20)
    ly = top + n * cell + 18
    for s in range(steps):
        v = -1.0 + 2.0 * (s + 0.5) / steps
        doc.rect(left + legend_w * s / steps, ly, legend_w / steps, 10, fill=color(v),
                 **{"class": "legend-swatch"})
    for v, anchor in ((-1.0, "start"), (0.0, "middle"), (1.0, "end")):
        x = left + legend_w * (v + 1.0) / 2.0
        doc.text(x, ly + 22, f"{v:+.0f}" if v else "0", font_size="9", text_anchor=anchor,
                 fill="#444444", font_family="sans-serif")
    return doc.to_string()


def render_tree(tree: SpanningTree, centrality: CentralityReport, spec: RenderSpec) -> str:
    """Seeded force-directed tree drawing; node radius is linear in degree."""
    if set(centrality.degrees) != set(tree.nodes):
        raise LabelMismatch("centrality report labels differ from tree nodes")
    doc = SvgDoc(spec.width, spec.height)
    index = {node: i for i, node in enumerate(tree.nodes)}
    pos = force_layout(
        len(tree.nodes),
        [(index[a], index[b]) for a, b, _ in tree.edges],
        seed=spec.seed,
    )
    margin = 60
    xs = margin + pos[:, 0] * (spec.width - 2 * margin)
    ys = (margin + 20) + pos[:, 1] * (spec.height - 2 * margin - 20)

    r_min, r_max = 6.0, 22.0
    def radius(node: str) -> float:
        return r_min + (r_max - r_min) * centrality.normalized[node]

    for a, b, _ in tree.edges:
        doc.line(xs[index[a]], ys[index[a]], xs[index[b]], ys[index[b]],
                 stroke="#999999", stroke_width="1.2", **{"class": "edge"})
    for node in tree.nodes:
        i = index[node]
        doc.circle(xs[i], ys[i], radius(node), fill="#4c8ec4", stroke="#27506f",
                   **{"class": "node"})
    for node in tree.nodes:
        i = index[node]
        doc.text(xs[i], ys[i] + 3, node, font_size="8", text_anchor="middle",
                 fill="#ffffff", font_family="sans-serif", **{"class": "node-label"})

    if spec.title:
        doc.text(spec.width / 2.0, 24, spec.title, font_size="15", text_anchor="middle",
                 fill="#111111", font_family="sans-serif", **{"class": "title"})
    return doc.to_string()


@lru_cache(maxsize=1)
def world_geometry() -> dict[str, list[tuple[float, float]]]:
    """Bundled simplified country polygons, keyed by ISO alpha-2 code."""
    doc = json.loads(WORLD_GEOMETRY_PATH.read_text(encoding="utf-8"))
    return {
        code: [(float(x), float(y)) for x, y in entry["polygon"]]
        for code, entry in doc["countries"].items()
    }


def _geometry_bounds(geometry) -> tuple[float, float, float, float]:
    xs = [x for poly in geometry.values() for x, _ in poly]
    ys = [y for poly in geometry.values() for _, y in poly]
    return min(xs), min(ys), max(xs), max(ys)


def render_choropleth_frames(snapshots: list[RegionSnapshot], spec: RenderSpec) -> list[str]:
    """One SVG per snapshot; all frames share projection and legend scale.

    Fill intensity is monotone in RSV (fixed 0..100 scale).  Countries absent
    from a snapshot stay neutral; snapshot geos missing from the bundled
    geometry are listed in a <desc> warning on that frame.
    """
    if not snapshots:
        raise EmptySeries("no snapshots to render")
    color = _scale(spec, "reds")
    geometry = world_geometry()
    min_x, min_y, max_x, max_y = _geometry_bounds(geometry)

    top, bottom, side = 40, 60, 20
    plot_w = spec.width - 2 * side
    plot_h = spec.height - top - bottom
    scale = min(plot_w / (max_x - min_x), plot_h / (max_y - min_y))

    def project(x: float, y: float) -> tuple[float, float]:
        return side + (x - min_x) * scale, top + (y - min_y) * scale

    frames = []
    for snapshot in snapshots:
        doc = SvgDoc(spec.width, spec.height)
        missing = sorted(geo for geo in snapshot.values if geo not in geometry)
        if missing:
            doc.desc("no geometry for: " + ", ".join(missing))

        start, end = snapshot.window
        title = spec.title or snapshot.keyword
        doc.text(spec.width / 2.0, 22, f"{title} {start.isoformat()} to {end.isoformat()}",
                 font_size="14", text_anchor="middle", fill="#111111",
                 font_family="sans-serif", **{"class": "title"})

        for code in sorted(geometry):
            value = snapshot.values.get(code)
            fill = NEUTRAL_FILL if value is None else color(value / 100.0)
            doc.polygon([project(x, y) for x, y in geometry[code]], fill=fill,
                        stroke="#ffffff", stroke_width="0.6", **{"class": "country"})
            cx = sum(x for x, _ in geometry[code]) / len(geometry[code])
            cy = sum(y for _, y in geometry[code]) / len(geometry[code])
            px, py = project(cx, cy)
            doc.text(px, py + 2.2, code, font_size=fmt(scale * 0.32), text_anchor="middle",
                     fill="#333333", font_family="sans-serif", **{"class": "country-label"})

        steps = 20
        legend_w = min(260.0, plot_w)
        ly = spec.height - 34
        for s in range(steps):
            doc.rect(side + legend_w * s / steps, ly, legend_w / steps, 10,
                     fill=color((s + 0.5) / steps), **{"class": "legend-swatch"})
        for v in (0, 50, 100):
            doc.text(side + legend_w * v / 100.0, ly + 22, str(v), font_size="9",
                     text_anchor="middle", fill="#444444", font_family="sans-serif")
        frames.append(doc.to_string())
    return frames
