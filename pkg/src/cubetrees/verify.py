"""Independent structural checks for hypercube edge-set decompositions.

Everything here works from first principles on the label array: union-find
connectivity, acyclicity, and plain counting.  Nothing is imported from the
construction code, so a verified decomposition is certified by a second,
unrelated route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

import numpy as np

from .hypercube import edge_endpoints, num_edges, num_vertices

if TYPE_CHECKING:  # annotation only; the checker never calls into construct
    from .construct import Decomposition


class MalformedDecompositionError(ValueError):
    """Structurally invalid decomposition (wrong length or label out of range).

    Distinct from a failing check: a malformed input cannot be meaningfully
    verified at all.
    """


# Kind strings mirrored here (not imported) to keep the checker free of any
# construct-module dependency.
EVEN_KIND = "even"
ODD_KIND = "odd"


class UnionFind:
    """Array-based disjoint sets with path compression."""

    __slots__ = ("parent", "merges")

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.merges = 0

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]  # path halving
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        self.merges += 1
        return True


def _as_id_array(edge_ids: Iterable[int] | np.ndarray) -> np.ndarray:
    return np.asarray(edge_ids, dtype=np.int64).reshape(-1)


def _union_all(u: np.ndarray, v: np.ndarray, size: int) -> UnionFind:
    uf = UnionFind(size)
    parent = uf.parent
    merges = 0
    # Inlined find/union: this loop dominates verification time at n=20.
    for a, b in zip(u.tolist(), v.tolist()):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[b] = a
            merges += 1
    uf.merges = merges
    return uf


def is_spanning_tree(edge_ids: Iterable[int] | np.ndarray, n: int) -> bool:
    """True iff the edge set has 2^n - 1 edges and connects all 2^n vertices.

    Cardinality plus connectivity implies the set is a tree; incidence with
    every vertex is implied too, but verify_decomposition still records it
    separately.
    """
    ids = _as_id_array(edge_ids)
    vertices = num_vertices(n)
    if ids.size != vertices - 1:
        return False
    u, v = edge_endpoints(ids, n)
    return _union_all(u, v, vertices).merges == vertices - 1


def is_matching(edge_ids: Iterable[int] | np.ndarray, n: int) -> bool:
    """True iff no two edges share an endpoint (the empty set qualifies)."""
    ids = _as_id_array(edge_ids)
    if ids.size == 0:
        return True
    u, v = edge_endpoints(ids, n)
    ends = np.concatenate([u, v])
    return np.unique(ends).size == ends.size


def forest_components(edge_ids: Iterable[int] | np.ndarray, n: int) -> tuple[bool, int]:
    """(acyclic?, component count) of an edge set.

    Components are counted over the endpoints of the given edges only, so
    cube vertices touched by no edge do not contribute.
    """
    ids = _as_id_array(edge_ids)
    if ids.size == 0:
        return True, 0
    u, v = edge_endpoints(ids, n)
    uf = _union_all(u, v, num_vertices(n))
    touched = int(np.unique(np.concatenate([u, v])).size)
    is_forest = uf.merges == ids.size  # every edge merged two distinct sets
    return is_forest, touched - uf.merges


def _incident_to_all(u: np.ndarray, v: np.ndarray, vertices: int) -> bool:
    seen = np.zeros(vertices, dtype=bool)
    seen[u] = True
    seen[v] = True
    return bool(seen.all())


@dataclass(frozen=True)
class TreeCheck:
    label: int
    edge_count: int
    size_ok: bool
    connected: bool
    incident_to_all: bool

    @property
    def ok(self) -> bool:
        return self.size_ok and self.connected and self.incident_to_all


@dataclass(frozen=True)
class LeftoverCheck:
    size: int
    expected_size: int
    is_matching: bool | None  # populated for even decompositions
    is_forest: bool | None  # populated for odd decompositions
    components: int | None
    expected_components: int | None

    @property
    def ok(self) -> bool:
        if self.size != self.expected_size:
            return False
        if self.is_matching is not None:
            return self.is_matching
        return bool(self.is_forest) and self.components == self.expected_components


@dataclass(frozen=True)
class VerifyReport:
    n: int
    k: int
    kind: str
    partition_ok: bool
    trees: tuple[TreeCheck, ...]
    leftover: LeftoverCheck

    @property
    def overall(self) -> bool:
        return self.partition_ok and self.leftover.ok and all(t.ok for t in self.trees)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "kind": self.kind,
            "partition_ok": self.partition_ok,
            "trees": [
                {
                    "label": t.label,
                    "edge_count": t.edge_count,
                    "size_ok": t.size_ok,
                    "connected": t.connected,
                    "incident_to_all": t.incident_to_all,
                    "ok": t.ok,
                }
                for t in self.trees
            ],
            "leftover": {
                "size": self.leftover.size,
                "expected_size": self.leftover.expected_size,
                "is_matching": self.leftover.is_matching,
                "is_forest": self.leftover.is_forest,
                "components": self.leftover.components,
                "expected_components": self.leftover.expected_components,
                "ok": self.leftover.ok,
            },
            "overall": self.overall,
        }

    def to_text(self) -> str:
        lines = [
            f"decomposition of Q_{self.n}: k={self.k} trees, kind={self.kind}",
            f"  partition of {num_edges(self.n)} edges: {_mark(self.partition_ok)}",
        ]
        for t in self.trees:
            lines.append(
                f"  tree {t.label}: {t.edge_count} edges, "
                f"connected={_mark(t.connected)}, "
                f"spans all vertices={_mark(t.incident_to_all)}: {_mark(t.ok)}"
            )
        lo = self.leftover
        if lo.is_matching is not None:
            shape = f"matching={_mark(lo.is_matching)}"
        else:
            shape = f"forest={_mark(bool(lo.is_forest))}, components={lo.components} (want {lo.expected_components})"
        lines.append(f"  leftover: {lo.size} edges (want {lo.expected_size}), {shape}: {_mark(lo.ok)}")
        lines.append(f"  overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def _mark(ok: bool) -> str:
    return "ok" if ok else "FAIL"


def verify_decomposition(dec: "Decomposition") -> VerifyReport:
    """Check every claimed property of a decomposition from first principles.

    Raises MalformedDecompositionError for structurally invalid input;
    returns a report (possibly failing) otherwise.
    """
    n, k, labels = dec.n, dec.k, dec.labels
    total = num_edges(n)
    if labels.shape != (total,):
        raise MalformedDecompositionError(
            f"label array has length {labels.shape}, expected ({total},)"
        )
    if labels.size and int(labels.max()) > k:
        raise MalformedDecompositionError(
            f"label {int(labels.max())} exceeds tree count k={k}"
        )

    # With one label per edge id, the labeling is a partition exactly when
    # the structural checks above hold; record the covering count anyway.
    counts = np.bincount(labels, minlength=k + 1)
    partition_ok = int(counts.sum()) == total

    vertices = num_vertices(n)
    tree_checks = []
    for j in range(1, k + 1):
        ids = np.flatnonzero(labels == j)
        u, v = edge_endpoints(ids, n)
        uf = _union_all(u, v, vertices)
        tree_checks.append(
            TreeCheck(
                label=j,
                edge_count=int(ids.size),
                size_ok=int(ids.size) == vertices - 1,
                connected=vertices - uf.merges == 1,
                incident_to_all=_incident_to_all(u, v, vertices),
            )
        )

    leftover_ids = np.flatnonzero(labels == 0)
    if dec.kind == EVEN_KIND:
        leftover = LeftoverCheck(
            size=int(leftover_ids.size),
            expected_size=k,
            is_matching=is_matching(leftover_ids, n),
            is_forest=None,
            components=None,
            expected_components=None,
        )
    else:
        forest, comps = forest_components(leftover_ids, n)
        # n = 1 has zero trees and its single edge as leftover: one component.
        expected_comps = 1 if n == 1 else k
        leftover = LeftoverCheck(
            size=int(leftover_ids.size),
            expected_size=(1 << (n - 1)) + k,
            is_matching=None,
            is_forest=forest,
            components=comps,
            expected_components=expected_comps,
        )

    return VerifyReport(
        n=n,
        k=k,
        kind=dec.kind,
        partition_ok=partition_ok,
        trees=tuple(tree_checks),
        leftover=leftover,
    )
