"""Explicit maximum spanning-tree decompositions of hypercubes.

Every edge of the n-cube is assigned a label in {0, 1, ..., k} with
k = floor(n/2): labels 1..k name k pairwise edge-disjoint spanning trees,
and label 0 marks the leftover edges.  For even n the leftover is a
matching of size k; for odd n it is a forest with exactly k connected
components and 2^(n-1) + k edges.

The even construction is recursive.  Q_{2k} splits into four copies of
Q_{2k-2} indexed by the two new top coordinates in Gray order
(00, 01, 11, 10), so consecutive copies sit at Hamming distance 1 and are
joined by perfect cross matchings.  Given the decomposition of the smaller
cube with trees T_1..T_j (j = k-1) and leftover matching e_1..e_j, the step
wires the copies together:

  * trees 1..j-1: the four copies of T_i joined by three selected cross
    edges, one per consecutive copy pair;
  * tree j: copy 1's last tree, plus the leftover matchings of copies
    2..4, plus all unselected cross edges of the three consecutive pairs;
  * tree j+1: the last trees of copies 2..4, the full cross matching
    between copies 1 and 4, and two selected cross edges;
  * new leftover: copy 1's leftover matching plus the one remaining
    selected cross edge between copies 2 and 3.

The selected cross edge for leftover edge e_i between adjacent copies is
the one incident to the numerically smaller endpoint of e_i; this fixed
rule (plus the fixed Gray copy order and base case) makes the output
byte-identical across runs.

The odd construction is a single step on top of the even one: Q_{2k+1} is
two copies of Q_{2k} joined by a perfect matching.  Trees 1..k-1 pair up
across the copies with one selected cross edge each; tree k threads copy
1's last tree through the unselected cross edges into copy 2's leftover
matching; the leftover collects copy 1's matching, one selected cross
edge, and copy 2's last tree, which form a forest with k components.

Labels are kept in a flat uint8 array in dense edge-id order, and each
extension step is pure block arithmetic on that array: embedding a copy
shifts every dimension block by copy_bits * 2^(m-1), so copies are
contiguous slices and the whole step runs in O(edges) with no per-edge
Python work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .hypercube import (
    DEFAULT_DIMENSION_CAP,
    Edge,
    check_dimension,
    edge_endpoints,
    edge_id,
    embed,
    num_edges,
)

EVEN = "even"
ODD = "odd"

# Label 0 marks leftover edges; labels 1..k are the spanning trees.
LEFTOVER = 0

# Copy index -> top-coordinate bits, Gray order.  Consecutive entries (and
# the first/last pair) differ in exactly one bit, so copy pairs (1,2),
# (2,3), (3,4), (1,4) are joined by perfect matchings.
EVEN_COPY_BITS = (0, 1, 3, 2)
ODD_COPY_BITS = (0, 1)


@dataclass(frozen=True)
class Decomposition:
    """Complete edge labeling of the n-cube.

    labels[edge_id] is 0 for leftover edges and j in 1..k for tree j.
    The array is uint8 (k <= 12 under the default dimension cap) and must
    be treated as immutable once constructed.
    """

    n: int
    k: int
    kind: str
    labels: np.ndarray

    def __post_init__(self) -> None:
        if self.kind not in (EVEN, ODD):
            raise ValueError(f"kind must be {EVEN!r} or {ODD!r}, got {self.kind!r}")
        if self.kind != (EVEN if self.n % 2 == 0 else ODD):
            raise ValueError(f"kind {self.kind!r} does not match parity of n={self.n}")
        if self.k != self.n // 2:
            raise ValueError(f"k must be floor(n/2) = {self.n // 2}, got {self.k}")
        if self.labels.dtype != np.uint8 or self.labels.shape != (num_edges(self.n),):
            raise ValueError(
                f"labels must be a uint8 array of length {num_edges(self.n)}"
            )

    @property
    def num_edges(self) -> int:
        return num_edges(self.n)

    def tree_edge_ids(self, j: int) -> np.ndarray:
        if not 1 <= j <= self.k:
            raise ValueError(f"tree index {j} out of range 1..{self.k}")
        return np.flatnonzero(self.labels == j)

    def leftover_edge_ids(self) -> np.ndarray:
        return np.flatnonzero(self.labels == LEFTOVER)

    def label_counts(self) -> np.ndarray:
        """Edge count per label, index 0 = leftover."""
        return np.bincount(self.labels, minlength=self.k + 1)


def base_q2() -> Decomposition:
    """Decomposition of the 2-cube: one spanning tree plus a matching of size 1.

    The tree is the 4-cycle minus one edge: {(00,01), (01,11), (10,11)};
    the leftover is the dimension-1 edge at vertex 00.
    """
    # Edge ids for n=2: 0 = (00,01), 1 = (10,11), 2 = (00,10), 3 = (01,11).
    return Decomposition(n=2, k=1, kind=EVEN, labels=np.array([1, 1, 0, 1], dtype=np.uint8))


def _leftover_lower_endpoints(labels: np.ndarray, m: int) -> np.ndarray:
    """Numerically smaller endpoints of the leftover edges, in edge-id order.

    These are the vertices where selected cross edges attach during an
    extension step; edge-id order defines the pairing between leftover
    edges and cross-matching selections.
    """
    ids = np.flatnonzero(labels == LEFTOVER)
    u, _ = edge_endpoints(ids, m)  # canonical endpoint has the edge bit clear
    return u


def _extend_even(sub_labels: np.ndarray, sub_k: int) -> np.ndarray:
    """One even step: labels of Q_{2*sub_k} -> labels of Q_{2*sub_k + 2}."""
    m = 2 * sub_k
    half = 1 << (m - 1)  # local dimension-block size
    full = 1 << (m + 1)  # output dimension-block size
    out = np.empty((m + 2) * full, dtype=np.uint8)

    # Copy 1 keeps every label; in copies 2..4 the leftover feeds the new
    # tree sub_k and the last tree becomes the new final tree sub_k + 1.
    moved = np.arange(sub_k + 2, dtype=np.uint8)
    moved[LEFTOVER] = sub_k
    moved[sub_k] = sub_k + 1

    for copy_bits in EVEN_COPY_BITS:
        remap = None if copy_bits == 0 else moved
        for d in range(m):
            block = sub_labels[d * half : (d + 1) * half]
            lo = d * full + copy_bits * half
            out[lo : lo + half] = block if remap is None else remap[block]

    # Cross matchings.  Dimension m holds the copy pairs (1,2) and (3,4),
    # dimension m+1 holds (1,4) and (2,3); within each half-block the offset
    # is the local vertex of the lower endpoint.
    q = 1 << m
    m12 = m * full
    m34 = m * full + q
    m14 = (m + 1) * full
    m23 = (m + 1) * full + q
    out[m12:m34] = sub_k  # bulk of (1,2) joins the new tree sub_k
    out[m34 : m34 + q] = sub_k
    out[m14:m23] = sub_k + 1  # the (1,4) matching belongs entirely to the final tree
    out[m23 : m23 + q] = sub_k

    chosen = _leftover_lower_endpoints(sub_labels, m)
    for j, u in enumerate(chosen.tolist(), start=1):
        last = j == sub_k
        out[m12 + u] = sub_k + 1 if last else j
        out[m23 + u] = LEFTOVER if last else j
        out[m34 + u] = sub_k + 1 if last else j
    return out


def _extend_odd(sub_labels: np.ndarray, sub_k: int) -> np.ndarray:
    """Odd step: labels of Q_{2*sub_k} -> labels of Q_{2*sub_k + 1}."""
    m = 2 * sub_k
    half = 1 << (m - 1)
    full = 1 << m
    out = np.empty((m + 1) * full, dtype=np.uint8)

    # Copy 2 donates its leftover to tree sub_k and its last tree to the
    # new leftover forest; copy 1 keeps every label.
    moved = np.arange(sub_k + 1, dtype=np.uint8)
    moved[LEFTOVER] = sub_k
    moved[sub_k] = LEFTOVER

    for copy_bits in ODD_COPY_BITS:
        remap = None if copy_bits == 0 else moved
        for d in range(m):
            block = sub_labels[d * half : (d + 1) * half]
            lo = d * full + copy_bits * half
            out[lo : lo + half] = block if remap is None else remap[block]

    cross = m * full
    out[cross : cross + full] = sub_k
    chosen = _leftover_lower_endpoints(sub_labels, m)
    for j, u in enumerate(chosen.tolist(), start=1):
        out[cross + u] = LEFTOVER if j == sub_k else j
    return out


def construct_even(k: int, cap: int = DEFAULT_DIMENSION_CAP) -> Decomposition:
    """Decomposition of Q_{2k}: k spanning trees plus a leftover matching of size k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    check_dimension(2 * k, cap)
    labels = base_q2().labels
    for sub_k in range(1, k):
        labels = _extend_even(labels, sub_k)
    return Decomposition(n=2 * k, k=k, kind=EVEN, labels=labels)


def construct_odd(k: int, cap: int = DEFAULT_DIMENSION_CAP) -> Decomposition:
    """Decomposition of Q_{2k+1}: k spanning trees plus a k-component leftover forest."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    check_dimension(2 * k + 1, cap)
    sub = construct_even(k, cap)
    return Decomposition(n=2 * k + 1, k=k, kind=ODD, labels=_extend_odd(sub.labels, k))


def construct(n: int, cap: int = DEFAULT_DIMENSION_CAP) -> Decomposition:
    """Decomposition of Q_n with floor(n/2) trees.

    n = 1 is degenerate: floor(1/2) = 0 trees, so the single edge is
    emitted as leftover (a forest with one component).
    """
    check_dimension(n, cap)
    if n == 1:
        return Decomposition(n=1, k=0, kind=ODD, labels=np.zeros(1, dtype=np.uint8))
    if n % 2 == 0:
        return construct_even(n // 2, cap)
    return construct_odd(n // 2, cap)


class EvenStepSizes(NamedTuple):
    """Edge counts of the three tree families produced by one even step."""

    joined_trees: int  # four copy trees plus three selected cross edges
    remainder_tree: int  # one copy tree, three copy matchings, three cross remainders
    final_tree: int  # three copy trees, one full cross matching, two selected edges


def even_extension_tree_sizes(sub_k: int) -> EvenStepSizes:
    """Closed-form tree sizes for the step Q_{2*sub_k} -> Q_{2*sub_k + 2}.

    All three must equal 2^(2*sub_k + 2) - 1, the spanning-tree size of the
    extended cube.
    """
    q = 1 << (2 * sub_k)  # vertices per copy
    return EvenStepSizes(
        joined_trees=4 * (q - 1) + 3,
        remainder_tree=(q - 1) + 3 * (q - sub_k) + 3 * sub_k,
        final_tree=3 * (q - 1) + q + 2,
    )


@dataclass(frozen=True)
class CopyDecomposition:
    """A smaller cube's decomposition embedded as one copy of a larger cube.

    trees[j-1] holds the global edge ids of the copy's tree j; independents
    are the copy's leftover edges in global coordinates, ordered by local
    edge id (the order that pairs them with cross-matching selections).
    """

    copy_bits: int
    trees: tuple[np.ndarray, ...]
    independents: tuple[Edge, ...]


def embed_copy(sub: Decomposition, copy_bits: int, n_out: int) -> CopyDecomposition:
    """Embed sub as the copy selected by copy_bits inside the n_out-cube."""
    m = sub.n
    half = 1 << (m - 1)
    out_half = 1 << (n_out - 1)

    def to_global(local_ids: np.ndarray) -> np.ndarray:
        d, s = np.divmod(local_ids, half)
        return d * out_half + copy_bits * half + s

    trees = tuple(to_global(sub.tree_edge_ids(j)) for j in range(1, sub.k + 1))
    ids = sub.leftover_edge_ids()
    u, _ = edge_endpoints(ids, m)
    d = (ids >> (m - 1)).tolist()
    independents = tuple(
        Edge(embed(int(ul), copy_bits, m), int(dl)) for ul, dl in zip(u.tolist(), d)
    )
    return CopyDecomposition(copy_bits=copy_bits, trees=trees, independents=independents)


@dataclass(frozen=True)
class CrossMatching:
    """Perfect matching between two adjacent copies, plus the selected edges.

    all_ids are the 2^m cross edges; chosen_ids[j-1] is the selected edge
    for the copies' j-th leftover edge (the cross edge at its numerically
    smaller endpoint).
    """

    dim: int
    all_ids: np.ndarray
    chosen_ids: np.ndarray


def cross_matching(
    sub: Decomposition, bits_a: int, bits_b: int, n_out: int
) -> CrossMatching:
    """Cross matching between the copies at bits_a and bits_b of the n_out-cube."""
    m = sub.n
    diff = bits_a ^ bits_b
    if diff.bit_count() != 1:
        raise ValueError(f"copies {bits_a:#b} and {bits_b:#b} are not adjacent")
    dim = m + diff.bit_length() - 1
    low_bits = bits_a if not bits_a & diff else bits_b  # side with the edge bit clear
    all_ids = np.fromiter(
        (edge_id(Edge(embed(u, low_bits, m), dim), n_out) for u in range(1 << m)),
        dtype=np.int64,
        count=1 << m,
    )
    chosen = _leftover_lower_endpoints(sub.labels, m)
    chosen_ids = np.fromiter(
        (edge_id(Edge(embed(int(u), low_bits, m), dim), n_out) for u in chosen),
        dtype=np.int64,
        count=chosen.size,
    )
    return CrossMatching(dim=dim, all_ids=all_ids, chosen_ids=chosen_ids)
