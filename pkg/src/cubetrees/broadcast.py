"""Multipath broadcast metrics over a tree decomposition.

A family of edge-disjoint spanning trees lets a root stream different chunks
of a message down different trees simultaneously without any link carrying
two trees' traffic.  This module reports the quantities that drive such a
schedule: per-tree depth from the root, the worst-case per-link tree load
(1 for any valid decomposition), and a first-order pipelined time estimate.

The time model is deliberately simple: the message is cut into k * parts
equal chunks, each tree streams its chunks in a pipeline, hops have uniform
cost and there is no contention, so a tree of depth D finishes after
(D + parts - 1) hops.  This is a utility estimate, not a network simulation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .construct import Decomposition
from .hypercube import edge_endpoints, num_vertices


def tree_depths(dec: Decomposition, root: int) -> list[int]:
    """Eccentricity of root within each tree, by breadth-first traversal."""
    vertices = num_vertices(dec.n)
    if not 0 <= root < vertices:
        raise ValueError(f"root {root} out of range for n={dec.n}")
    depths = []
    for j in range(1, dec.k + 1):
        u, v = edge_endpoints(dec.tree_edge_ids(j), dec.n)
        adjacency: dict[int, list[int]] = {}
        for a, b in zip(u.tolist(), v.tolist()):
            adjacency.setdefault(a, []).append(b)
            adjacency.setdefault(b, []).append(a)
        depth = {root: 0}
        queue = deque([root])
        far = 0
        while queue:
            node = queue.popleft()
            for nxt in adjacency.get(node, ()):
                if nxt not in depth:
                    depth[nxt] = depth[node] + 1
                    far = max(far, depth[nxt])
                    queue.append(nxt)
        depths.append(far)
    return depths


def link_load_over_trees(tree_edge_ids: Iterable[np.ndarray], total_edges: int) -> int:
    """Maximum number of trees claiming any single edge id."""
    counts = np.zeros(total_edges, dtype=np.int64)
    for ids in tree_edge_ids:
        counts[np.asarray(ids, dtype=np.int64)] += 1
    return int(counts.max()) if total_edges else 0


def link_load(dec: Decomposition) -> int:
    """Per-link tree load of a decomposition; 1 whenever the labeling is a
    genuine partition with at least one tree (leftover edges carry none)."""
    return link_load_over_trees(
        (dec.tree_edge_ids(j) for j in range(1, dec.k + 1)), dec.num_edges
    )


def broadcast_time(
    dec: Decomposition, root: int, parts: int = 1, hop_cost: float = 1.0
) -> float:
    """Pipelined completion time: hop_cost * max over trees of (depth + parts - 1)."""
    if dec.k == 0:
        raise ValueError("broadcast model undefined with zero trees (n = 1)")
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    depths = tree_depths(dec, root)
    return hop_cost * (max(depths) + parts - 1)


@dataclass(frozen=True)
class BroadcastMetrics:
    root: int
    depths: tuple[int, ...]
    max_link_load: int
    total_time_model: float

    def to_text(self) -> str:
        lines = [
            f"broadcast metrics from root {self.root}:",
            f"  tree depths: {list(self.depths)}",
            f"  max link load: {self.max_link_load}",
            f"  pipelined time estimate: {self.total_time_model}",
        ]
        return "\n".join(lines)


def broadcast_metrics(
    dec: Decomposition, root: int, parts: int = 1, hop_cost: float = 1.0
) -> BroadcastMetrics:
    depths = tuple(tree_depths(dec, root))
    if dec.k == 0:
        raise ValueError("broadcast model undefined with zero trees (n = 1)")
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    return BroadcastMetrics(
        root=root,
        depths=depths,
        max_link_load=link_load(dec),
        total_time_model=hop_cost * (max(depths) + parts - 1),
    )
