"""SVG and TikZ renderings of hook, pointed-interval and co-interval models."""

import io
import logging
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from src.core.config import Config  # noqa: E402
from src.core.geometry_models import Co132IntervalModel, HookModel, MptModel  # noqa: E402

logger = logging.getLogger(__name__)

# fixed ids and no timestamp keep the SVG bytes reproducible
plt.rcParams["svg.hashsalt"] = "repwords"
plt.rcParams["svg.fonttype"] = "none"

_DPI = 72
_MARGIN = 1


def _coordinate(value: Fraction) -> str:
    return f"{float(value):.4f}".rstrip("0").rstrip(".")


def _new_figure(width_units: float, height_units: float, scale: int):
    fig = plt.figure(figsize=(width_units * scale / _DPI, height_units * scale / _DPI), dpi=_DPI)
    ax = fig.add_axes([0, 0, 1, 1])
    ax.set_aspect("equal")
    ax.axis("off")
    return fig, ax


def _to_svg(fig) -> str:
    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def hook_svg(model: HookModel, scale: int | None = None) -> str:
    scale = scale or Config.SVG_SCALE
    hooks = sorted(model.hooks, key=lambda hook: hook.c)
    low = min(float(h.l) for h in hooks) - _MARGIN
    high = max(float(h.r) for h in hooks) + _MARGIN
    fig, ax = _new_figure(high - low, high - low + 1, scale)
    ax.set_xlim(low, high)
    ax.set_ylim(-high, -low + 1)
    ax.plot([low, high], [-low, -high], color="0.6", linewidth=0.8)
    ax.plot([low, high], [-low + 1, -high + 1], color="0.6", linewidth=0.8, linestyle="--")
    for label, hook in enumerate(hooks, start=1):
        c, l, r = float(hook.c), float(hook.l), float(hook.r)
        ax.plot([c, c, r], [-l, -c, -c], color="black", linewidth=1.5)
        ax.annotate(str(label), (c, -c), textcoords="offset points", xytext=(-8, -12), fontsize=9)
    logger.info(f"SVG de ganchos gerado com {len(hooks)} vértices")
    return _to_svg(fig)


def mpt_svg(model: MptModel, scale: int | None = None) -> str:
    scale = scale or Config.SVG_SCALE
    low = min(float(iv.l) for iv in model.intervals) - _MARGIN
    high = max(float(iv.r) for iv in model.intervals) + _MARGIN
    fig, ax = _new_figure(high - low, model.n + 1, scale)
    ax.set_xlim(low, high)
    ax.set_ylim(0, model.n + 1)
    for vertex, iv in enumerate(model.intervals, start=1):
        ax.plot([float(iv.l), float(iv.r)], [vertex, vertex], color="black", linewidth=1.5)
        ax.plot([float(iv.p)], [vertex], marker="o", color="black", markersize=4)
        ax.annotate(str(vertex), (float(iv.l), vertex), textcoords="offset points", xytext=(-10, -3), fontsize=9)
    return _to_svg(fig)


def interval_svg(model: Co132IntervalModel, scale: int | None = None) -> str:
    scale = scale or Config.SVG_SCALE
    low = min(float(x) for x in model.lefts) - _MARGIN
    high = max(float(x) for x in model.rights) + _MARGIN
    fig, ax = _new_figure(high - low, model.n + 1, scale)
    ax.set_xlim(low, high)
    ax.set_ylim(0, model.n + 1)
    for vertex in range(1, model.n + 1):
        left, right = model.interval(vertex)
        ax.plot([float(left), float(right)], [vertex, vertex], color="black", linewidth=1.5)
        ax.annotate(str(vertex), (float(right), vertex), textcoords="offset points", xytext=(4, -3), fontsize=9)
    return _to_svg(fig)


def hook_tikz(model: HookModel) -> str:
    hooks = sorted(model.hooks, key=lambda hook: hook.c)
    low = min(h.l for h in hooks) - _MARGIN
    high = max(h.r for h in hooks) + _MARGIN
    lines = [
        "\\begin{tikzpicture}",
        f"\\draw [gray] ({_coordinate(low)}, {_coordinate(-low)}) -- ({_coordinate(high)}, {_coordinate(-high)});",
        f"\\draw [gray, dashed] ({_coordinate(low)}, {_coordinate(-low + 1)}) -- "
        f"({_coordinate(high)}, {_coordinate(-high + 1)});",
    ]
    for label, hook in enumerate(hooks, start=1):
        c, l, r = hook.c, hook.l, hook.r
        lines.append(
            f"\\draw [thick] ({_coordinate(c)}, {_coordinate(-l)}) -- ({_coordinate(c)}, {_coordinate(-c)})"
            f" -- ({_coordinate(r)}, {_coordinate(-c)});"
        )
        lines.append(f"\\node [below left] at ({_coordinate(c)}, {_coordinate(-c)}) {{${label}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def mpt_tikz(model: MptModel) -> str:
    lines = ["\\begin{tikzpicture}"]
    for vertex, iv in enumerate(model.intervals, start=1):
        y = _coordinate(Fraction(-vertex, 2))
        lines.append(f"\\draw [thick] ({_coordinate(iv.l)}, {y}) -- ({_coordinate(iv.r)}, {y});")
        lines.append(f"\\fill ({_coordinate(iv.p)}, {y}) circle (1.5pt);")
        lines.append(f"\\node [left] at ({_coordinate(iv.l)}, {y}) {{${vertex}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def interval_tikz(model: Co132IntervalModel) -> str:
    lines = ["\\begin{tikzpicture}"]
    for vertex in range(1, model.n + 1):
        left, right = model.interval(vertex)
        y = _coordinate(Fraction(-vertex, 2))
        lines.append(f"\\draw [thick] ({_coordinate(left)}, {y}) -- ({_coordinate(right)}, {y});")
        lines.append(f"\\node [right] at ({_coordinate(right)}, {y}) {{${vertex}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
