"""Deterministic SVG figures of a normed plane's unit circle, antinorm circle, bisectors and densities."""

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from rich.console import Console

from .bisectors import busemann_bisector, daf_bisector, glogovskii_bisector, measure_bisector
from .config import PLOT_LAYERS, QUIET, SIGNIFICANT_DIGITS, SVG_SIZE
from .measures import build_measure
from .norm_core import TWO_PI, NormedPlane, Vec2

console = Console(stderr=True, quiet=QUIET)

CURVE_SAMPLES = 720
LAYER_STYLES = {
    "unit_circle": ("#1f77b4", "2"),
    "antinorm_circle": ("#ff7f0e", "1.5"),
    "legs": ("#333333", "1.5"),
    "busemann": ("#2ca02c", "1.5"),
    "glogovskii": ("#d62728", "1.5"),
    "daf": ("#9467bd", "1.5"),
    "measure": ("#8c564b", "1.5"),
    "measure_density": ("#17becf", "1"),
    "dekster_density": ("#bcbd22", "1"),
}


def _fmt(value: float) -> str:
    text = format(value, f".{SIGNIFICANT_DIGITS}g")
    return "0" if text == "-0" else text


class SVGPlotter:
    """Draws plane geometry into a fixed size x size viewBox centred on o."""

    def __init__(self, plane: NormedPlane, size: int = SVG_SIZE):
        self.plane = plane
        self.size = size
        self.radius = self._extent()
        self.scale = 0.42 * size / self.radius
        self.root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            version="1.1",
            width=f"{size}px",
            height=f"{size}px",
            viewBox=f"0 0 {size} {size}",
        )

    def _extent(self) -> float:
        """Largest Euclidean radius of the unit and antinorm circles."""
        radius = 0.0
        for k in range(CURVE_SAMPLES):
            u = Vec2.from_angle(TWO_PI * k / CURVE_SAMPLES)
            radius = max(radius, 1.0 / self.plane.gauge(u), 1.0 / self.plane.antinorm(u))
        return radius

    def _px(self, v: Vec2) -> Tuple[str, str]:
        half = self.size / 2.0
        return _fmt(half + self.scale * v.x), _fmt(half - self.scale * v.y)

    def _path(self, layer: str, points: Sequence[Vec2], closed: bool):
        stroke, width = LAYER_STYLES[layer]
        coords = [self._px(p) for p in points]
        d = "M" + " L".join(f"{x} {y}" for x, y in coords) + (" Z" if closed else "")
        group = ET.SubElement(self.root, "g", id=layer)
        ET.SubElement(group, "path", d=d, fill="none", stroke=stroke, **{"stroke-width": width})

    def _ray(self, group: ET.Element, layer: str, direction: Vec2):
        stroke, width = LAYER_STYLES[layer]
        end = direction * (self.radius * 1.1 / direction.length())
        (x1, y1), (x2, y2) = self._px(Vec2(0.0, 0.0)), self._px(end)
        ET.SubElement(group, "line", x1=x1, y1=y1, x2=x2, y2=y2, stroke=stroke,
                      **{"stroke-width": width, "class": layer})

    def unit_circle(self):
        spec = self.plane.spec
        if spec.kind in ("polygon", "regular_polygon"):
            points = list(spec.polygon_vertices())
        else:
            points = [self.plane.unit_circle_point(TWO_PI * k / CURVE_SAMPLES) for k in range(CURVE_SAMPLES)]
        self._path("unit_circle", points, closed=True)

    def antinorm_circle(self):
        points = []
        for k in range(CURVE_SAMPLES):
            u = Vec2.from_angle(TWO_PI * k / CURVE_SAMPLES)
            points.append(u / self.plane.antinorm(u))
        self._path("antinorm_circle", points, closed=True)

    def bisectors(self, x: Vec2, y: Vec2):
        group = ET.SubElement(self.root, "g", id="bisectors")
        self._ray(group, "legs", x)
        self._ray(group, "legs", y)
        self._ray(group, "busemann", busemann_bisector(self.plane, x, y).direction)
        self._ray(group, "glogovskii", glogovskii_bisector(self.plane, x, y).direction)
        self._ray(group, "daf", daf_bisector(self.plane, x, y).direction)
        measure = build_measure(self.plane, "arc_length")
        self._ray(group, "measure", measure_bisector(measure, x, y).direction)

    def density(self, layer: str, kind: str):
        """Polar curve of a measure density, scaled so its peak reaches the unit-circle extent."""
        measure = build_measure(self.plane, kind, n_quad=256)
        thetas = [TWO_PI * k / CURVE_SAMPLES for k in range(CURVE_SAMPLES)]
        values = [measure.density(t) for t in thetas]
        peak = max(values)
        points = [Vec2.from_angle(t, self.radius * v / peak) for t, v in zip(thetas, values)]
        self._path(layer, points, closed=True)

    def write(self, out_path: Path) -> Path:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        ET.ElementTree(self.root).write(out_path, encoding="utf-8", xml_declaration=True)
        return out_path


def plot(
    plane: NormedPlane,
    layers: Sequence[str],
    out_path: Union[str, Path],
    x: Optional[Vec2] = None,
    y: Optional[Vec2] = None,
) -> Path:
    """
    Write an SVG figure with the requested layers, drawn in PLOT_LAYERS order.

    Args:
        layers: subset of PLOT_LAYERS
        x, y: legs of the angle, required by the bisectors layer

    Returns:
        Path to the written file
    """
    unknown = [layer for layer in layers if layer not in PLOT_LAYERS]
    if unknown:
        raise ValueError(f"unknown plot layers {unknown}; expected a subset of {PLOT_LAYERS}")
    if "bisectors" in layers and (x is None or y is None):
        raise ValueError("the bisectors layer needs both --x and --y")

    plotter = SVGPlotter(plane)
    drawn: List[str] = []
    for layer in PLOT_LAYERS:
        if layer not in layers:
            continue
        if layer == "unit_circle":
            plotter.unit_circle()
        elif layer == "antinorm_circle":
            plotter.antinorm_circle()
        elif layer == "bisectors":
            plotter.bisectors(x, y)
        elif layer == "measure_density":
            plotter.density(layer, "arc_length")
        elif layer == "dekster_density":
            plotter.density(layer, "dekster_raw")
        drawn.append(layer)

    path = plotter.write(Path(out_path))
    console.print(f"[bold green]✅ Plot saved:[/] {path} ({', '.join(drawn)})")
    return path
