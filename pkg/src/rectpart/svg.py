"""Flat SVG rendering of a layout.

The viewBox is the container in layout units, so rect widths and heights in
the document equal the pane extents exactly; only the y coordinate is
flipped, because SVG grows downward while layouts grow upward.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Instance, Layout

#: Fixed fill palette; panes pick a color by hashing their index.
PALETTE = (
    "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
    "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd",
    "#5a7fb5", "#e08f5f", "#6aba78", "#cf5f62", "#9183c0",
    "#a18770", "#e39bd0", "#9c9c9c", "#d6c785", "#76c2d8",
)


@dataclass(frozen=True)
class SvgOptions:
    """Rendering knobs: ``labels`` is one of "none", "index", "full"."""

    labels: str = "index"
    pixel_width: int = 800


def _color(index: int) -> str:
    # Knuth multiplicative hash scatters neighboring indices across the palette.
    return PALETTE[(index * 2654435761) % len(PALETTE)]


def render_svg(layout: Layout, inst: Instance, options: SvgOptions = SvgOptions()) -> bytes:
    """One SVG document with one rect per pane, optionally labeled."""
    if options.labels not in ("none", "index", "full"):
        raise ValueError(f'labels must be "none", "index" or "full", got {options.labels!r}')
    c = inst.container
    px_w = options.pixel_width
    px_h = max(1, round(px_w * c.h / c.w))
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{px_w}" height="{px_h}" '
        f'viewBox="{c.x!r} {c.y!r} {c.w!r} {c.h!r}">',
    ]
    for i, r in enumerate(layout.rects):
        y_flipped = 2.0 * c.y + c.h - r.y - r.h
        parts.append(
            f'  <rect x="{r.x!r}" y="{y_flipped!r}" width="{r.w!r}" height="{r.h!r}" '
            f'fill="{_color(i)}" stroke="black" stroke-width="1" '
            'vector-effect="non-scaling-stroke"/>'
        )
        if options.labels != "none":
            text = str(i) if options.labels == "index" else f"{i}: {inst.areas[i]:.4g}"
            cx = r.x + r.w / 2.0
            cy = y_flipped + r.h / 2.0
            size = 0.3 * min(r.w, r.h)
            parts.append(
                f'  <text x="{cx!r}" y="{cy!r}" font-size="{size!r}" '
                'text-anchor="middle" dominant-baseline="central" '
                f'font-family="sans-serif">{text}</text>'
            )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
