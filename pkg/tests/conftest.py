"""Shared helpers for walking layout trees in tests."""

from __future__ import annotations

from rectpart import Internal, Leaf, aspect_ratio
from rectpart.bounds import _index_tree


def consecutive_ratio_cap(inst):
    """Aspect-ratio cap every tree node must respect: the container's own
    ratio, 3, or one plus the largest consecutive ratio of the sorted areas."""
    dec = sorted(inst.areas, reverse=True)
    max_ratio = max((dec[i] / dec[i + 1] for i in range(len(dec) - 1)), default=1.0)
    return max(aspect_ratio(inst.container), 3.0, 1.0 + max_ratio)


def node_invariants(inst, layout):
    """(balance_ok, ar_ok) checked at every node of the layout tree.

    balance: the left child of every cut holds at least a third of its
    parent's area, and so does the right child whenever no single target
    area claims more than two thirds of the parent.
    ar: every node's aspect ratio stays under consecutive_ratio_cap.
    """
    nodes, left_id, right_id = _index_tree(layout.tree)
    count = len(nodes)
    amax = [0.0] * count
    for i in range(count - 1, -1, -1):
        node = nodes[i]
        if isinstance(node, Leaf):
            amax[i] = inst.areas[node.area_index]
        else:
            amax[i] = max(amax[left_id[i]], amax[right_id[i]])

    cap = consecutive_ratio_cap(inst) + 1e-9
    ar_ok = all(aspect_ratio(node.rect) <= cap for node in nodes)

    balance_ok = True
    for i, node in enumerate(nodes):
        if isinstance(node, Internal):
            area = node.rect.area
            eps = 1e-9 * area
            if nodes[left_id[i]].rect.area < area / 3.0 - eps:
                balance_ok = False
            if amax[i] <= (2.0 / 3.0) * area and nodes[right_id[i]].rect.area < area / 3.0 - eps:
                balance_ok = False
    return balance_ok, ar_ok


def parent_ids(tree):
    """parent id per preorder node id, -1 for the root."""
    nodes, left_id, right_id = _index_tree(tree)
    parents = [-1] * len(nodes)
    for i in range(len(nodes)):
        if left_id[i] >= 0:
            parents[left_id[i]] = i
            parents[right_id[i]] = i
    return parents
