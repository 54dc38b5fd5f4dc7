"""Exhaustive search for the cheapest guillotine tiling of a small instance.

Every node of the search tries every split of its area multiset into two
non-empty groups (2^(n-1) - 1 of them) and both cut orientations, recursing
on each side. States are memoized on the area multiset and the pane
dimensions, canonicalized up to transposition; the cost of a tiling is
invariant under transposing the pane, so the swap is lossless. Ties prefer
the lexicographically smallest group assignment, then a vertical cut, which
keeps results reproducible. Non-guillotine partitions are outside the search
space, so the returned value is the guillotine optimum specifically.
"""

from __future__ import annotations

import math

from .geometry import Cut, Instance, Internal, Layout, LayoutTree, Leaf, Rect


class OracleSizeError(RuntimeError):
    """Instance is too large for exhaustive search; raised instead of hanging."""


def _sig12(v: float) -> float:
    # 12 significant digits: coarse enough to merge float noise in memo keys,
    # far finer than any area tolerance at supported sizes.
    return float(f"{v:.12g}")


def optimal_guillotine(inst: Instance, max_n: int = 8) -> tuple[float, Layout]:
    """Minimum total half-perimeter over all guillotine tilings, with a witness.

    Refuses instances with more than ``max_n`` areas. The witness layout
    follows the usual conventions: the first group of a split takes the left
    piece of a vertical cut or the top piece of a horizontal one.
    """
    n = inst.n
    if n > max_n:
        raise OracleSizeError(f"exhaustive search refused for n={n} > max_n={max_n}")

    order = sorted(range(n), key=lambda i: (-inst.areas[i], i))
    items = tuple((float(inst.areas[i]), i) for i in order)

    memo: dict[tuple, float] = {}

    def key(vals: tuple[float, ...], w: float, h: float) -> tuple:
        if w < h:
            w, h = h, w
        return (tuple(_sig12(v) for v in vals), _sig12(w), _sig12(h))

    def split(vals: tuple, mask: int) -> tuple[list, list]:
        # Bit j-1 of the mask sends element j to the second group; element 0
        # always stays in the first, which halves the enumeration.
        g1, g2 = [], []
        for j, v in enumerate(vals):
            if j and (mask >> (j - 1)) & 1:
                g2.append(v)
            else:
                g1.append(v)
        return g1, g2

    def best(vals: tuple[float, ...], w: float, h: float) -> float:
        if len(vals) == 1:
            return w + h
        k = key(vals, w, h)
        hit = memo.get(k)
        if hit is not None:
            return hit
        best_v = math.inf
        for mask in range(1, 1 << (len(vals) - 1)):
            g1, g2 = split(vals, mask)
            s1 = math.fsum(g1)
            t1, t2 = tuple(g1), tuple(g2)
            w1 = s1 / h
            v = best(t1, w1, h) + best(t2, w - w1, h)
            if v < best_v:
                best_v = v
            h1 = s1 / w
            v = best(t1, w, h1) + best(t2, w, h - h1)
            if v < best_v:
                best_v = v
        memo[k] = best_v
        return best_v

    def rebuild(group: tuple[tuple[float, int], ...], rect: Rect) -> LayoutTree:
        # The rounded memo keys merge states that differ beyond the 12th
        # digit, so the stored optimum can be off by ~1e-12 relative for this
        # exact rect; accept the first candidate within that noise band.
        if len(group) == 1:
            return Leaf(rect, group[0][1])
        vals = tuple(v for v, _ in group)
        target = best(vals, rect.w, rect.h)
        eps = 1e-10 * target
        for mask in range(1, 1 << (len(group) - 1)):
            g1, g2 = split(group, mask)
            s1 = math.fsum(v for v, _ in g1)
            v1 = tuple(v for v, _ in g1)
            v2 = tuple(v for v, _ in g2)
            w1 = s1 / rect.h
            if best(v1, w1, rect.h) + best(v2, rect.w - w1, rect.h) <= target + eps:
                left = Rect(rect.x, rect.y, w1, rect.h)
                right = Rect(rect.x + w1, rect.y, rect.w - w1, rect.h)
                return Internal(
                    rect, Cut.VERTICAL, rebuild(tuple(g1), left), rebuild(tuple(g2), right)
                )
            h1 = s1 / rect.w
            if best(v1, rect.w, h1) + best(v2, rect.w, rect.h - h1) <= target + eps:
                top = Rect(rect.x, rect.y + (rect.h - h1), rect.w, h1)
                bottom = Rect(rect.x, rect.y, rect.w, rect.h - h1)
                return Internal(
                    rect, Cut.HORIZONTAL, rebuild(tuple(g1), top), rebuild(tuple(g2), bottom)
                )
        raise AssertionError("memoized optimum could not be reproduced")

    value = best(tuple(v for v, _ in items), inst.container.w, inst.container.h)
    tree = rebuild(items, inst.container)
    return value, Layout.from_tree(tree, n)
