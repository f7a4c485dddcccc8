"""Core graph and partition data model.

The toolkit works on directed multigraphs stored as flat edge arrays.
Vertex ids are opaque unsigned 64-bit labels: they need not be contiguous
or start at zero, and hash rules operate on the raw id.  Degree is total
(in + out) slot count, so a self-loop adds 2 to its vertex's degree.
Isolated vertices cannot be represented; every vertex is an endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyGraphError, LengthMismatchError, SpreadTooLargeError

__all__ = [
    "EdgeListGraph",
    "PartitionAssignment",
    "PartitionerSpec",
    "STRATEGIES",
    "build_graph",
    "partition_sizes",
]

STRATEGIES = ("random", "source", "edge2d", "dbh", "dbhx")


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class EdgeListGraph:
    """Immutable directed multigraph: an edge array plus a degree table.

    Attributes
    ----------
    src, dst : uint64 arrays, shape (E,)
        Edge endpoints in input order.  (a,b) and (b,a) are distinct edges;
        duplicates and self-loops are kept.
    vertex_ids : uint64 array, shape (V,)
        Sorted distinct endpoint labels.
    degrees : int64 array, shape (V,)
        Slot count per vertex, aligned with ``vertex_ids``; sums to 2E.
    src_index, dst_index : int64 arrays, shape (E,)
        Dense positions of src/dst in ``vertex_ids``.
    """

    __slots__ = ("src", "dst", "vertex_ids", "degrees", "src_index", "dst_index")

    def __init__(self, src: np.ndarray, dst: np.ndarray):
        if len(src) == 0:
            raise EmptyGraphError("a graph needs at least one edge")
        self.src = _frozen(np.ascontiguousarray(src, dtype=np.uint64))
        self.dst = _frozen(np.ascontiguousarray(dst, dtype=np.uint64))
        self.vertex_ids = _frozen(np.unique(np.concatenate([self.src, self.dst])))
        self.src_index = _frozen(np.searchsorted(self.vertex_ids, self.src).astype(np.int64))
        self.dst_index = _frozen(np.searchsorted(self.vertex_ids, self.dst).astype(np.int64))
        self.degrees = _frozen(
            np.bincount(
                np.concatenate([self.src_index, self.dst_index]),
                minlength=len(self.vertex_ids),
            ).astype(np.int64)
        )

    @property
    def num_edges(self) -> int:
        return len(self.src)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_ids)

    def degree_of(self, vertex_id: int) -> int:
        i = int(np.searchsorted(self.vertex_ids, np.uint64(vertex_id)))
        if i >= self.num_vertices or self.vertex_ids[i] != np.uint64(vertex_id):
            raise KeyError(vertex_id)
        return int(self.degrees[i])

    def degree_table(self) -> dict[int, int]:
        return {int(v): int(d) for v, d in zip(self.vertex_ids, self.degrees)}

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.src.tolist(), self.dst.tolist()))

    def edge_degrees(self) -> tuple[np.ndarray, np.ndarray]:
        """Per-edge (degree of src, degree of dst) as int64 arrays."""
        return self.degrees[self.src_index], self.degrees[self.dst_index]

    def __repr__(self) -> str:
        return f"EdgeListGraph(|V|={self.num_vertices}, |E|={self.num_edges})"


def build_graph(edges) -> EdgeListGraph:
    """Build a graph from a sequence of (src, dst) pairs, preserving edge order.

    Accepts any iterable of pairs or an (E, 2) array.  Raises EmptyGraphError
    when no edges are given.  To build directly from two flat endpoint arrays
    use ``EdgeListGraph(src, dst)``.
    """
    arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges))
    if arr.size == 0:
        raise EmptyGraphError("a graph needs at least one edge")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be (src, dst) pairs")
    if np.issubdtype(arr.dtype, np.signedinteger) and arr.min() < 0:
        raise ValueError("vertex ids must be nonnegative")
    return EdgeListGraph(arr[:, 0].astype(np.uint64), arr[:, 1].astype(np.uint64))


@dataclass(frozen=True)
class PartitionAssignment:
    """Per-edge partition id, aligned index-for-index with the source graph."""

    num_parts: int
    parts: np.ndarray

    def __post_init__(self):
        if self.num_parts < 1:
            raise ValueError("num_parts must be >= 1")
        parts = np.ascontiguousarray(self.parts, dtype=np.int64)
        if len(parts) and (parts.min() < 0 or parts.max() >= self.num_parts):
            raise ValueError("partition ids must lie in [0, num_parts)")
        object.__setattr__(self, "parts", _frozen(parts))

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class PartitionerSpec:
    """Configuration selecting a partitioning strategy and its parameters.

    tau and spread apply to dbhx only; seed applies to random only.  With
    ``mix=True`` the per-vertex hash multiplies the id by a large odd
    constant (mod 2^64) before taking the remainder; useful when sequential
    ids alias with grid structure.  Default is the plain ``id mod m`` hash.
    """

    strategy: str
    num_parts: int
    tau: int | None = None
    spread: int = 1
    seed: int = 0
    mix: bool = False

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}")
        if self.num_parts < 1:
            raise ValueError("num_parts must be >= 1")
        if self.spread < 1:
            raise ValueError("spread must be >= 1")
        if self.spread > self.num_parts:
            raise SpreadTooLargeError(
                f"spread {self.spread} exceeds num_parts {self.num_parts}"
            )
        if self.tau is not None and self.tau < 0:
            raise ValueError("tau must be >= 0")
        if self.strategy == "dbhx" and self.tau is None:
            raise ValueError("dbhx requires tau")


def partition_sizes(g: EdgeListGraph, a: PartitionAssignment) -> np.ndarray:
    """Edge count per partition; empty partitions report 0; sums to |E|."""
    if len(a) != g.num_edges:
        raise LengthMismatchError(
            f"assignment covers {len(a)} edges but graph has {g.num_edges}"
        )
    return np.bincount(a.parts, minlength=a.num_parts).astype(np.int64)
