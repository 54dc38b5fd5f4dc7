"""Lower bounds and quality reports for produced layouts.

Any pane of area A has half-perimeter at least 2*sqrt(A), attained by a
square. A tighter per-pane bound exists for panes whose shape is pinned by
the tiling itself: for such "forced" panes the realized width + height is a
valid bound, because no rearrangement can shorten their short edge. The
forced set is the least fixed point of three rules:

* the container itself is forced;
* when a forced rectangle is cut and a single target area claims at least
  half of it, that area's order in the reduction never changes, so the
  second (right/bottom) piece is forced;
* a rectangle both of whose long edges lie inside long edges of forced
  rectangles is forced. Each edge may be certified by a different forced
  rectangle in the default mode; ``per_edge=False`` demands one certifier
  for both. A square has no distinct long side, so all four of its edges act
  as long edges, and as a candidate it qualifies when either opposite pair
  is certified.

The forced-aware bound sums width + height over forced terminal panes and
2*sqrt(A) over the rest; it is never smaller than the naive all-square bound
and never exceeds the true guillotine optimum.
"""

from __future__ import annotations

import bisect
import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .geometry import (
    Instance,
    Internal,
    Layout,
    LayoutTree,
    Leaf,
    Rect,
    aspect_ratio,
    half_perimeter,
    preorder,
    validate_layout,
)

#: Coordinate slack for edge containment, relative to the container extent.
EDGE_TOL = 1e-9


def _index_tree(tree: LayoutTree) -> tuple[list[LayoutTree], list[int], list[int]]:
    """Preorder node list plus left/right child ids (-1 for leaves).

    The ids match positions in :func:`rectpart.geometry.preorder`.
    """
    nodes: list[LayoutTree] = []
    left_id: list[int] = []
    right_id: list[int] = []
    stack: list[tuple[LayoutTree, int, bool]] = [(tree, -1, False)]
    while stack:
        node, parent, is_right = stack.pop()
        my_id = len(nodes)
        nodes.append(node)
        left_id.append(-1)
        right_id.append(-1)
        if parent >= 0:
            if is_right:
                right_id[parent] = my_id
            else:
                left_id[parent] = my_id
        if isinstance(node, Internal):
            stack.append((node.right, my_id, True))
            stack.append((node.left, my_id, False))
    return nodes, left_id, right_id


def _long_edges(r: Rect) -> list[tuple[str, float, float, float]]:
    """Long edges as (orientation, line coordinate, span start, span end).

    Horizontal edges for wide rectangles, vertical for tall ones, all four
    for exact squares.
    """
    horiz = [("h", r.y, r.x, r.x + r.w), ("h", r.y + r.h, r.x, r.x + r.w)]
    vert = [("v", r.x, r.y, r.y + r.h), ("v", r.x + r.w, r.y, r.y + r.h)]
    if r.w > r.h:
        return horiz
    if r.h > r.w:
        return vert
    return horiz + vert


def detect_forced(
    tree: LayoutTree, areas: Sequence[float], *, per_edge: bool = True
) -> set[int]:
    """Ids of forced nodes, indexing the preorder listing of ``tree``.

    ``areas`` is the instance's target-area list, looked up through each
    leaf's ``area_index``; it supplies the largest-constituent test for the
    dominant-area rule. The closure runs as a worklist: forcing a node
    publishes its long edges and, when a single constituent claims at least
    half its area, forces its right child.
    """
    nodes, left_id, right_id = _index_tree(tree)
    n_nodes = len(nodes)

    a_max = [0.0] * n_nodes
    for i in range(n_nodes - 1, -1, -1):
        node = nodes[i]
        if isinstance(node, Leaf):
            if not 0 <= node.area_index < len(areas):
                raise ValueError(f"leaf index {node.area_index} outside the area list")
            a_max[i] = float(areas[node.area_index])
        else:
            a_max[i] = max(a_max[left_id[i]], a_max[right_id[i]])

    root = nodes[0].rect
    tol = EDGE_TOL * max(root.w, root.h)

    # All candidate long edges, bucketed by orientation and sorted by their
    # supporting line so a forced edge only scans nearby candidates.
    edges_of: list[list[tuple[str, float, float, float]]] = []
    pairs_of: list[list[tuple[int, int]]] = []
    cand: dict[str, list[tuple[float, float, float, int, int]]] = {"h": [], "v": []}
    for i in range(n_nodes):
        edges = _long_edges(nodes[i].rect)
        edges_of.append(edges)
        pairs_of.append([(0, 1)] if len(edges) == 2 else [(0, 1), (2, 3)])
        for slot, (orient, c, lo, hi) in enumerate(edges):
            cand[orient].append((c, lo, hi, i, slot))
    for orient in cand:
        cand[orient].sort(key=lambda t: t[0])
    coords = {orient: [t[0] for t in cand[orient]] for orient in cand}

    certifiers: list[list[set[int]]] = [[set() for _ in edges] for edges in edges_of]
    forced = [False] * n_nodes
    queue: deque[int] = deque()

    def is_certified(j: int) -> bool:
        for s1, s2 in pairs_of[j]:
            if per_edge:
                if certifiers[j][s1] and certifiers[j][s2]:
                    return True
            elif certifiers[j][s1] & certifiers[j][s2]:
                return True
        return False

    def force(i: int) -> None:
        if not forced[i]:
            forced[i] = True
            queue.append(i)

    force(0)
    while queue:
        f = queue.popleft()
        node = nodes[f]
        if isinstance(node, Internal) and a_max[f] >= 0.5 * node.rect.area * (1.0 - 1e-12):
            force(right_id[f])
        for orient, c, lo, hi in _long_edges(node.rect):
            start = bisect.bisect_left(coords[orient], c - tol)
            stop = bisect.bisect_right(coords[orient], c + tol)
            for _, clo, chi, j, slot in cand[orient][start:stop]:
                if forced[j]:
                    continue
                if clo >= lo - tol and chi <= hi + tol:
                    certifiers[j][slot].add(f)
                    if is_certified(j):
                        force(j)
    return {i for i in range(n_nodes) if forced[i]}


def _bounds_with_flags(inst: Instance, layout: Layout) -> tuple[float, float, list[bool]]:
    naive = math.fsum(2.0 * math.sqrt(a) for a in inst.areas)
    flags = [False] * inst.n
    tree = layout.tree
    if tree is None and inst.n == 1:
        # A flat single-pane layout is the container itself, hence forced.
        tree = Leaf(layout.rects[0], 0)
    if tree is not None:
        forced = detect_forced(tree, inst.areas)
        for node_id, node in enumerate(preorder(tree)):
            if node_id in forced and isinstance(node, Leaf):
                flags[node.area_index] = True
    forced_aware = math.fsum(
        (r.w + r.h) if flags[i] else 2.0 * math.sqrt(inst.areas[i])
        for i, r in enumerate(layout.rects)
    )
    return naive, forced_aware, flags


def _require_valid(inst: Instance, layout: Layout) -> None:
    diag = validate_layout(inst, layout)
    if not diag.ok:
        raise ValueError(f"layout does not satisfy the instance: {diag}")


def lower_bound(inst: Instance, layout: Layout) -> tuple[float, float]:
    """(naive, forced-aware) lower bounds on the total half-perimeter.

    The naive bound is layout-free: sum of 2*sqrt(A_i). The forced-aware
    bound swaps in width + height for panes the layout's own tree pins.
    """
    _require_valid(inst, layout)
    naive, forced_aware, _ = _bounds_with_flags(inst, layout)
    return naive, forced_aware


@dataclass(frozen=True)
class PaneQuality:
    """Per-pane metrics within a :class:`QualityReport`."""

    index: int
    half_perimeter: float
    aspect_ratio: float
    forced: bool


@dataclass(frozen=True)
class QualityReport:
    """Achieved cost, both lower bounds, and per-pane shape statistics."""

    total_half_perimeter: float
    naive_lower_bound: float
    forced_aware_lower_bound: float
    approx_ratio: float
    max_aspect_ratio: float
    per_rect: tuple[PaneQuality, ...]


def report(inst: Instance, layout: Layout) -> QualityReport:
    """Full quality report; ``approx_ratio`` is total over the forced-aware bound."""
    _require_valid(inst, layout)
    naive, forced_aware, flags = _bounds_with_flags(inst, layout)
    per = tuple(
        PaneQuality(i, half_perimeter(r), aspect_ratio(r), flags[i])
        for i, r in enumerate(layout.rects)
    )
    total = layout.total_half_perimeter()
    return QualityReport(
        total_half_perimeter=total,
        naive_lower_bound=naive,
        forced_aware_lower_bound=forced_aware,
        approx_ratio=total / forced_aware,
        max_aspect_ratio=max(p.aspect_ratio for p in per),
        per_rect=per,
    )
