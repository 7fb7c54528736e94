"""Brute-force oracles on small general graphs.

These deliberately trade efficiency for independence: exhaustive subset and
partition enumeration with hard vertex caps, used to cross-validate the
closed-form cube invariants and the constructed tree families at desk scale.

Two classical exact characterizations drive the oracles:

  * arboricity equals the maximum over vertex subsets S (|S| >= 2) of
    ceil(e(S) / (|S|-1)), where e(S) counts edges inside S.  Restricting to
    induced subgraphs is lossless because dropping edges never raises the
    ratio, which cuts the search from 2^|E| subgraphs to 2^|V| subsets.
  * the spanning-tree packing number equals the minimum over vertex
    partitions P (at least two parts) of floor(cross(P) / (|P|-1)), where
    cross(P) counts edges joining different parts.

Partitions are enumerated as restricted growth strings, the canonical
duplicate-free encoding: a[0] = 0 and a[i] <= max(a[:i]) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .hypercube import CapExceededError

ARBORICITY_VERTEX_CAP = 16  # 2^V induced subgraphs
PACKING_VERTEX_CAP = 10  # Bell(V) vertex partitions
SPOT_CHECK_VERTEX_CAP = 8


class EdgeListParseError(ValueError):
    """An edge-list text input could not be parsed into a simple graph."""


@dataclass(frozen=True)
class SmallGraph:
    """Simple undirected graph on vertices 0..num_vertices-1.

    Edges are stored as sorted (u, v) pairs with u < v; loops and parallel
    edges are rejected.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def hypercube(cls, n: int) -> "SmallGraph":
        """Q_n as a plain edge list (independent of the bit-arithmetic model)."""
        edges = [
            (v, v | (1 << d))
            for v in range(1 << n)
            for d in range(n)
            if not v & (1 << d)
        ]
        return cls(num_vertices=1 << n, edges=tuple(edges))

    def without_edges(self, removed: set[tuple[int, int]]) -> "SmallGraph":
        removed = {(min(u, v), max(u, v)) for u, v in removed}
        return SmallGraph(
            num_vertices=self.num_vertices,
            edges=tuple(e for e in self.edges if e not in removed),
        )


def load_edge_list(text: str) -> SmallGraph:
    """Parse a plain-text edge list: one "u v" pair per line, 0-based ids,
    blank lines and '#' comments ignored.  Vertex count is max id + 1."""
    edges = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                f"line {lineno}: non-integer vertex in {raw!r}"
            ) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"line {lineno}: negative vertex id in {raw!r}")
        top = max(top, u, v)
        edges.append((u, v))
    if not edges:
        raise EdgeListParseError("edge list is empty")
    try:
        return SmallGraph(num_vertices=top + 1, edges=tuple(edges))
    except ValueError as exc:
        raise EdgeListParseError(str(exc)) from None


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of {0..n-1} as restricted growth strings.

    Yields Bell(n) assignment tuples; a[i] is the block of element i, blocks
    are numbered by first appearance.
    """
    if n < 1:
        raise ValueError("need at least one element")
    a = [0] * n

    def grow(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        for block in range(top + 2):
            a[i] = block
            yield from grow(i + 1, max(top, block))

    yield from grow(1, 0)


def nw_arboricity(g: SmallGraph) -> int:
    """Arboricity by exhaustive induced-subgraph density maximization."""
    if not g.edges:
        raise ValueError("arboricity is undefined for an edgeless graph")
    if g.num_vertices > ARBORICITY_VERTEX_CAP:
        raise CapExceededError(
            f"{g.num_vertices} vertices exceeds the arboricity oracle cap "
            f"of {ARBORICITY_VERTEX_CAP}"
        )
    adj = [0] * g.num_vertices
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    best = 0
    for mask in range(3, 1 << g.num_vertices):
        size = mask.bit_count()
        if size < 2:
            continue
        inner = 0
        rest = mask
        while rest:
            low = rest & -rest
            inner += (adj[low.bit_length() - 1] & mask).bit_count()
            rest ^= low
        inner //= 2
        if inner:
            best = max(best, -(-inner // (size - 1)))
    return best


def packing_upper_bound(g: SmallGraph) -> int:
    """Maximum edge-disjoint spanning tree count by partition enumeration.

    Returns min over partitions with >= 2 parts of floor(cross/(parts-1));
    a disconnected graph yields 0 via any partition separating components.
    """
    if g.num_vertices < 2:
        raise ValueError("need at least 2 vertices")
    if g.num_vertices > PACKING_VERTEX_CAP:
        raise CapExceededError(
            f"{g.num_vertices} vertices exceeds the packing oracle cap "
            f"of {PACKING_VERTEX_CAP}"
        )
    edges = g.edges
    best: int | None = None
    for assign in restricted_growth_strings(g.num_vertices):
        parts = max(assign) + 1
        if parts < 2:
            continue
        cross = sum(1 for u, v in edges if assign[u] != assign[v])
        value = cross // (parts - 1)
        if best is None or value < best:
            best = value
            if best == 0:
                break
    assert best is not None  # n >= 2 always has the all-singletons partition
    return best


def catlin_spot_check(g: SmallGraph, removed: set[tuple[int, int]]) -> bool:
    """After deleting |removed| edges from g, can |removed| edge-disjoint
    spanning trees still be packed?

    Statement-level sanity test only: the caller is responsible for g being
    2*|removed|-edge-connected, which is what makes a True answer expected.
    """
    if g.num_vertices > SPOT_CHECK_VERTEX_CAP:
        raise CapExceededError(
            f"{g.num_vertices} vertices exceeds the spot-check cap "
            f"of {SPOT_CHECK_VERTEX_CAP}"
        )
    return packing_upper_bound(g.without_edges(removed)) >= len(removed)
