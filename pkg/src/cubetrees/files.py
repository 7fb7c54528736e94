"""Bit-exact decomposition files and text export formats.

Binary layout (little-endian), designed so identical decompositions produce
identical bytes:

    offset 0   magic     b"QDEC"
    offset 4   version   u16, currently 1
    offset 6   n         u8
    offset 7   k         u8, must equal floor(n/2)
    offset 8   kind      u8, 0 = even, 1 = odd, must match the parity of n
    offset 9   labels    n * 2^(n-1) bytes, one label per edge in dense
                         edge-id order, each value <= k

Export formats render the same labeling as DOT (edge attribute tree=j, with
tree=0 marking leftover edges), a plain "u v label" edge list, or a JSON
document mirroring the binary fields with explicit endpoints.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .construct import EVEN, ODD, Decomposition
from .hypercube import DEFAULT_DIMENSION_CAP, edge_endpoints, num_edges

MAGIC = b"QDEC"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sHBBB")

_KIND_CODES = {EVEN: 0, ODD: 1}
_KIND_NAMES = {0: EVEN, 1: ODD}

EXPORT_FORMATS = ("dot", "edgelist", "json-doc")


class DecompositionParseError(ValueError):
    """The bytes do not form a valid decomposition file."""


def decomposition_to_bytes(dec: Decomposition) -> bytes:
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, dec.n, dec.k, _KIND_CODES[dec.kind])
    return header + dec.labels.tobytes()


def decomposition_from_bytes(
    data: bytes, cap: int = DEFAULT_DIMENSION_CAP
) -> Decomposition:
    if len(data) < _HEADER.size:
        raise DecompositionParseError(
            f"file too short: {len(data)} bytes, header needs {_HEADER.size}"
        )
    magic, version, n, k, kind_code = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise DecompositionParseError(f"bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise DecompositionParseError(f"unsupported format version {version}")
    if n < 1 or n > cap:
        raise DecompositionParseError(f"dimension {n} outside [1, {cap}]")
    if k != n // 2:
        raise DecompositionParseError(f"k={k} inconsistent with n={n}")
    if kind_code not in _KIND_NAMES:
        raise DecompositionParseError(f"unknown kind code {kind_code}")
    kind = _KIND_NAMES[kind_code]
    if kind != (EVEN if n % 2 == 0 else ODD):
        raise DecompositionParseError(f"kind {kind!r} inconsistent with n={n}")
    body = data[_HEADER.size :]
    expected = num_edges(n)
    if len(body) != expected:
        raise DecompositionParseError(
            f"label payload has {len(body)} bytes, expected {expected}"
        )
    labels = np.frombuffer(body, dtype=np.uint8).copy()
    if labels.size and int(labels.max()) > k:
        raise DecompositionParseError(
            f"label {int(labels.max())} exceeds tree count k={k}"
        )
    return Decomposition(n=n, k=k, kind=kind, labels=labels)


def write_decomposition(dec: Decomposition, path: str | Path) -> None:
    Path(path).write_bytes(decomposition_to_bytes(dec))


def read_decomposition(path: str | Path, cap: int = DEFAULT_DIMENSION_CAP) -> Decomposition:
    return decomposition_from_bytes(Path(path).read_bytes(), cap)


def export_dot(dec: Decomposition) -> str:
    """DOT graph with a tree=<label> attribute per edge (0 = leftover)."""
    u, v = edge_endpoints(np.arange(dec.num_edges), dec.n)
    lines = [f"graph q{dec.n} {{"]
    for a, b, label in zip(u.tolist(), v.tolist(), dec.labels.tolist()):
        lines.append(f"  {a} -- {b} [tree={label}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_edgelist(dec: Decomposition) -> str:
    """One "u v label" line per edge, dense edge-id order."""
    u, v = edge_endpoints(np.arange(dec.num_edges), dec.n)
    lines = [
        f"{a} {b} {label}"
        for a, b, label in zip(u.tolist(), v.tolist(), dec.labels.tolist())
    ]
    return "\n".join(lines) + "\n"


def export_json_doc(dec: Decomposition) -> str:
    """JSON document mirroring the binary fields, with explicit endpoints."""
    u, v = edge_endpoints(np.arange(dec.num_edges), dec.n)
    doc = {
        "format_version": FORMAT_VERSION,
        "n": dec.n,
        "k": dec.k,
        "kind": dec.kind,
        "edges": [
            {"u": a, "v": b, "label": label}
            for a, b, label in zip(u.tolist(), v.tolist(), dec.labels.tolist())
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def export_decomposition(dec: Decomposition, fmt: str) -> str:
    if fmt == "dot":
        return export_dot(dec)
    if fmt == "edgelist":
        return export_edgelist(dec)
    if fmt == "json-doc":
        return export_json_doc(dec)
    raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")
