"""Divide-and-conquer partitioner that repeatedly merges the two smallest areas.

The driver sorts the target areas once (non-increasing), reduces the working
list to two compound blocks by replacing the two smallest entries with their
sum until only two remain, cuts the rectangle in proportion to the two block
totals, and recurses into both pieces. Every intermediate list is kept sorted,
so each block hands its members to the recursive call already in order.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .geometry import Cut, Instance, Internal, Layout, LayoutTree, Leaf, Rect, split_rect

#: Worst-case ratio between the produced total half-perimeter and the best
#: possible one, over all instances.
APPROX_FACTOR = 1.203

#: Tighter guarantee for runs in which every pane either has aspect ratio at
#: most 3 or has its dimensions pinned by the tiling.
APPROX_FACTOR_SQUARISH = 2.0 / math.sqrt(3.0)


@dataclass(frozen=True)
class Block:
    """A group of positions in the sorted working list, merged during reduction.

    ``total`` always equals the block's entry in the working list, which is
    the sum of its member areas up to float rounding.
    """

    members: tuple[int, ...]
    total: float


@dataclass
class ReductionStats:
    """Mutable counters for comparing the two reduction rules.

    ``iterations`` counts loop passes actually spent. ``pairwise_equivalent``
    accumulates length - 2 per bipartition, which is what the pairwise rule
    spends on a list of that length no matter its content; for the pairwise
    rule itself the two counters always agree.
    """

    iterations: int = 0
    pairwise_equivalent: int = 0


def sort_descending(areas: Sequence[float]) -> tuple[list[float], list[int]]:
    """Non-increasing copy of ``areas`` plus the permutation mapping sorted
    position to original index. Stable: equal areas keep their input order."""
    perm = sorted(range(len(areas)), key=lambda i: -areas[i])
    return [areas[i] for i in perm], perm


def _insertion_point(values: list[float], value: float) -> int:
    # Position in a non-increasing list; ties land after the existing equal
    # entries, so older blocks stay first. The ascending view costs a full
    # copy but keeps the search itself in C.
    return len(values) - bisect.bisect_left(values[::-1], value)


def _insert_sorted(
    values: list[float], blocks: list[Block], value: float, block: Block
) -> tuple[list[float], list[Block]]:
    pos = _insertion_point(values, value)
    return values[:pos] + [value] + values[pos:], blocks[:pos] + [block] + blocks[pos:]


def bipartition_two_smallest(
    sorted_areas: Sequence[float], stats: ReductionStats | None = None
) -> tuple[Block, Block]:
    """Reduce a non-increasing area list to two blocks, merging the two
    smallest entries at every step and reinserting the sum where it keeps the
    list sorted.

    Returns the blocks in working-list order, so the first total is >= the
    second. Raises ValueError for lists shorter than two.
    """
    if len(sorted_areas) < 2:
        raise ValueError("need at least two areas to bipartition")
    if stats is not None:
        stats.pairwise_equivalent += len(sorted_areas) - 2
    values = list(sorted_areas)
    members: list[tuple[int, ...]] = [(i,) for i in range(len(values))]
    while len(values) > 2:
        value = values[-2] + values[-1]
        merged = tuple(sorted(members[-2] + members[-1]))
        rest_v = values[:-2]
        rest_m = members[:-2]
        pos = _insertion_point(rest_v, value)
        values = rest_v[:pos] + [value] + rest_v[pos:]
        members = rest_m[:pos] + [merged] + rest_m[pos:]
        if stats is not None:
            stats.iterations += 1
    return Block(members[0], values[0]), Block(members[1], values[1])


Reducer = Callable[[Sequence[float], "ReductionStats | None"], tuple[Block, Block]]


def _build(
    rect: Rect,
    values: list[float],
    indices: list[int],
    reduce_to_two: Reducer,
    stats: ReductionStats | None,
) -> LayoutTree:
    if len(values) == 1:
        return Leaf(rect, indices[0])
    b1, b2 = reduce_to_two(values, stats)
    first, second = split_rect(rect, b1.total)
    cut = Cut.VERTICAL if rect.w > rect.h else Cut.HORIZONTAL
    left = _build(
        first,
        [values[i] for i in b1.members],
        [indices[i] for i in b1.members],
        reduce_to_two,
        stats,
    )
    right = _build(
        second,
        [values[i] for i in b2.members],
        [indices[i] for i in b2.members],
        reduce_to_two,
        stats,
    )
    return Internal(rect, cut, left, right)


def _partition(inst: Instance, reduce_to_two: Reducer, stats: ReductionStats | None) -> Layout:
    values, perm = sort_descending(inst.areas)
    tree = _build(inst.container, values, perm, reduce_to_two, stats)
    return Layout.from_tree(tree, inst.n)


def partition_dc(inst: Instance, stats: ReductionStats | None = None) -> Layout:
    """Lay out ``inst`` with the pairwise smallest-merge rule.

    Deterministic: the same instance always yields the same layout. The first
    block of every bipartition (the one with the larger total) takes the
    left piece of a vertical cut or the top piece of a horizontal one.
    """
    return _partition(inst, bipartition_two_smallest, stats)
