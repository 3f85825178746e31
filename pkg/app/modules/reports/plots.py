# -*- coding: utf-8 -*-
"""SVG figures for exponent tables, box counts and polygon overlays.

Output is byte-deterministic: the SVG id salt is fixed and the date metadata is dropped.
"""
import io
import math
from enum import Enum
from fractions import Fraction
from typing import Optional
import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Circle, Polygon
from loguru import logger
from modules.errors import ConfigInvalid, EmptyTable
from modules.reports.tables import Table

matplotlib.use("Agg")

DEFAULT_SALT = "kakeya-workbench"
STYLE = {
    "figure.figsize": (5.0, 4.0),
    "font.size": 9,
    "font.family": "DejaVu Sans",
    "svg.fonttype": "path",
    "axes.grid": True,
    "grid.alpha": 0.3,
}


class PlotKind(str, Enum):
    EXPONENT_CURVE = "exponent-curve"
    LOG_LOG = "log-log"
    POLYGON_VS_CIRCLE = "polygon-vs-circle"


def _number(value) -> float:
    if isinstance(value, str):
        return float(Fraction(value))
    return float(value)


def _exponent_curve(figure: Figure, table: Table, x: str, y: str):
    ax = figure.add_subplot(1, 1, 1)
    pairs = [(_number(a), _number(b)) for a, b in zip(table.column(x), table.column(y)) if b is not None]
    ax.plot([a for a, _ in pairs], [b for _, b in pairs], marker="o", linestyle="-", color="tab:blue")
    ax.set_xlabel(f"${x}$")
    ax.set_ylabel(r"$\log |S| \,/\, \log " + x + "$")
    ax.set_ylim(0, max(1.05, max(b for _, b in pairs) + 0.05) if pairs else 1.05)


def _log_log(figure: Figure, table: Table, x: str, y: str):
    ax = figure.add_subplot(1, 1, 1)
    xs = [_number(value) for value in table.column(x)]
    ys = [_number(value) for value in table.column(y)]
    ax.loglog(xs, ys, marker="o", linestyle="-", color="tab:blue")
    if len(xs) > 1 and xs[0] != xs[-1]:
        slope = (math.log(ys[-1]) - math.log(ys[0])) / (math.log(xs[-1]) - math.log(xs[0]))
        ax.set_title(f"slope {slope:.4f}")
    ax.set_xlabel(r"$1/\epsilon$")
    ax.set_ylabel(r"$N(\epsilon)$")


def _polygon_vs_circle(figure: Figure, table: Table):
    ax = figure.add_subplot(1, 1, 1)
    groups = {}
    for label, px, py in zip(table.column("polygon"), table.column("x"), table.column("y")):
        groups.setdefault(label, []).append((_number(px), _number(py)))
    ax.add_patch(Circle((0, 0), 1, fill=False, color="black", linewidth=1.2, label="unit circle"))
    colors = matplotlib.colormaps["viridis"]
    for index, (label, points) in enumerate(groups.items()):
        ax.add_patch(Polygon(points, closed=True, fill=False, color=colors(index / max(1, len(groups))),
                             linewidth=0.9, label=str(label)))
    reach = max(1.0, max(max(abs(px), abs(py)) for points in groups.values() for px, py in points))
    ax.set_xlim(-1.1 * reach, 1.1 * reach)
    ax.set_ylim(-1.1 * reach, 1.1 * reach)
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=7)


def render(table: Table, kind: PlotKind, x: Optional[str] = None, y: Optional[str] = None) -> Figure:
    """Draw a table onto a fresh figure.

    Exponent curves read columns ``x`` (default ``n``) and ``y`` (default ``exponent``); log-log
    plots default to ``scale`` and ``count``; polygon overlays need ``polygon``, ``x`` and ``y``
    with vertices listed in boundary order.

    :raises EmptyTable: the table has no rows.
    """
    kind = PlotKind(kind)
    if not len(table):
        raise EmptyTable(f"nothing to plot for {kind.value}")
    figure = Figure()
    try:
        if kind == PlotKind.EXPONENT_CURVE:
            _exponent_curve(figure, table, x or "n", y or "exponent")
        elif kind == PlotKind.LOG_LOG:
            _log_log(figure, table, x or "scale", y or "count")
        else:
            _polygon_vs_circle(figure, table)
    except (KeyError, ValueError) as ex:
        raise ConfigInvalid(f"table does not fit a {kind.value} plot: {ex}") from ex
    if table.title:
        figure.suptitle(table.title)
    return figure


def emit_plot(table: Table, kind: PlotKind, x: Optional[str] = None, y: Optional[str] = None,
              salt: str = DEFAULT_SALT) -> bytes:
    """SVG bytes of :func:`render`, identical for identical tables."""
    kind = PlotKind(kind)
    with matplotlib.rc_context({**STYLE, "svg.hashsalt": salt}):
        figure = render(table, kind, x, y)
        buffer = io.BytesIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug(f"{kind.value} plot of {len(table)} rows")
    return buffer.getvalue()
