"""SVG figures: one panel per channel with dashed vertical lines at the breakpoints."""
from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from .core import MultiSeries

SVG_NS = "http://www.w3.org/2000/svg"


def render_svg(series: MultiSeries, breakpoints, width: int = 640, panel_height: int = 120,
               margin: int = 30, title: str | None = None, max_panels: int | None = None) -> str:
    n = series.n_x if max_panels is None else min(series.n_x, max_panels)
    top = 24 if title else 6
    height = top + n * (panel_height + 8) + 20
    svg = ET.Element("svg", {
        "xmlns": SVG_NS, "version": "1.1",
        "width": str(width), "height": str(height),
        "viewBox": f"0 0 {width} {height}",
    })
    ET.SubElement(svg, "rect", {"width": "100%", "height": "100%", "fill": "white"})
    if title:
        t = ET.SubElement(svg, "text", {"x": str(margin), "y": "16", "font-size": "12",
                                        "font-family": "sans-serif"})
        t.text = title
    T = series.T
    plot_w = width - 2 * margin

    def sx(t):
        return margin + plot_w * t / T

    for i in range(n):
        y = series.values[i]
        y0 = top + i * (panel_height + 8)
        lo, hi = float(y.min()), float(y.max())
        span = hi - lo if hi > lo else 1.0

        def sy(v):
            return y0 + panel_height - 4 - (panel_height - 8) * (v - lo) / span

        g = ET.SubElement(svg, "g", {"class": "panel", "id": f"channel-{i + 1}"})
        ET.SubElement(g, "rect", {"x": str(margin), "y": str(y0), "width": str(plot_w),
                                  "height": str(panel_height), "fill": "none",
                                  "stroke": "#999", "stroke-width": "0.5"})
        label = ET.SubElement(g, "text", {"x": "2", "y": str(y0 + panel_height / 2),
                                          "font-size": "10", "font-family": "sans-serif"})
        label.text = f"x{i + 1}"
        pts = " ".join(f"{sx(t):.2f},{sy(v):.2f}" for t, v in enumerate(y))
        ET.SubElement(g, "polyline", {"points": pts, "fill": "none", "stroke": "blue",
                                      "stroke-width": "1"})
        for tau in breakpoints:
            ET.SubElement(g, "line", {"class": "breakpoint",
                                      "x1": f"{sx(tau):.2f}", "x2": f"{sx(tau):.2f}",
                                      "y1": str(y0), "y2": str(y0 + panel_height),
                                      "stroke": "red", "stroke-dasharray": "4,3",
                                      "stroke-width": "1"})
    axis = ET.SubElement(svg, "text", {"x": str(width / 2), "y": str(height - 4),
                                       "font-size": "10", "font-family": "sans-serif"})
    axis.text = "t"
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode")


def write_svg(path, series: MultiSeries, breakpoints, **kwargs) -> None:
    with open(path, "w") as fh:
        fh.write(render_svg(series, breakpoints, **kwargs))
