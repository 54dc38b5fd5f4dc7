"""Threshold-bundling variant of the divide-and-conquer partitioner.

Instead of merging exactly two entries per step, each reduction step computes
the mean of the current working list and folds the whole tail below it into
one block. When nothing qualifies (the strict minorant is missing, which only
happens for an all-equal list, or it sits at the very front of the tail) the
lower half of the list is folded instead. Each step removes at least one
entry and usually many, so the reduction takes far fewer iterations than the
pairwise rule; the resulting layouts carry no quality guarantee.
"""

from __future__ import annotations

import math
from typing import Sequence

from .dc import Block, ReductionStats, _insert_sorted, _partition
from .geometry import Instance, Layout


def mdc_reduce_step(
    sorted_areas: Sequence[float], blocks: Sequence[Block]
) -> tuple[list[float], list[Block]]:
    """One bundling step on a non-increasing working list of length > 2.

    Let tau be the mean of the current entries and i the first 1-based
    position strictly below tau. The tail from m = i is folded into a single
    entry, except when i does not exist (all entries equal) or i is the last
    position, in which case m = ceil(length / 2). The folded entry is
    reinserted where it keeps the list sorted, ties after equal entries.
    Returns the shortened list and the matching block list.
    """
    k = len(sorted_areas)
    if k <= 2:
        raise ValueError("reduction step needs more than two entries")
    tau = math.fsum(sorted_areas) / k
    # The head is never strictly below the mean, so i >= 2 whenever it exists.
    i = next((j + 1 for j, a in enumerate(sorted_areas) if a < tau), None)
    if i is not None and i < k:
        m = i
    else:
        m = (k + 1) // 2
    value = math.fsum(sorted_areas[m - 1 :])
    members: list[int] = []
    for b in blocks[m - 1 :]:
        members.extend(b.members)
    merged = Block(tuple(sorted(members)), value)
    return _insert_sorted(list(sorted_areas[: m - 1]), list(blocks[: m - 1]), value, merged)


def _reduce_below_mean(
    sorted_areas: Sequence[float], stats: ReductionStats | None = None
) -> tuple[Block, Block]:
    if len(sorted_areas) < 2:
        raise ValueError("need at least two areas to bipartition")
    if stats is not None:
        stats.pairwise_equivalent += len(sorted_areas) - 2
    values = list(sorted_areas)
    blocks = [Block((i,), a) for i, a in enumerate(values)]
    while len(values) > 2:
        values, blocks = mdc_reduce_step(values, blocks)
        if stats is not None:
            stats.iterations += 1
    return blocks[0], blocks[1]


def partition_mdc(inst: Instance, stats: ReductionStats | None = None) -> Layout:
    """Lay out ``inst`` with the threshold-bundling rule.

    Same recursion skeleton and cut conventions as
    :func:`rectpart.dc.partition_dc`; only the reduction rule differs.
    """
    return _partition(inst, _reduce_below_mean, stats)
