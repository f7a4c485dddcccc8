"""Vectorized numpy implementations of the hot per-edge kernels.

This module is the fallback backend used when the compiled extension
(``edgecut._kernels``) is unavailable.  Both backends implement the same
functions with pure integer arithmetic and must return bit-identical
arrays; ``tests/test_backends.py`` enforces this.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

# Odd multiplier for the optional mixing hash (splitmix64 finalizer constant).
MIX_CONSTANT = np.uint64(0x9E3779B97F4A7C15)


def _hashed(v: np.ndarray, mix: bool) -> np.ndarray:
    return v * MIX_CONSTANT if mix else v


def mod_parts(v: np.ndarray, m: int, mix: bool = False) -> np.ndarray:
    """Partition id per edge: hash(v) mod m."""
    return (_hashed(v, mix) % np.uint64(m)).astype(np.int64)


def edge2d_parts(src: np.ndarray, dst: np.ndarray, m: int, mix: bool = False) -> np.ndarray:
    """Grid cell (src mod r, dst mod r) with r = ceil(sqrt(m)); overflow cells
    (only possible when m is not a perfect square) fold back via cell mod m."""
    r = 1
    while r * r < m:
        r += 1
    ru = np.uint64(r)
    cell = (_hashed(src, mix) % ru) * ru + (_hashed(dst, mix) % ru)
    return np.where(cell < np.uint64(m), cell, cell % np.uint64(m)).astype(np.int64)


def dbh_choose_src(src: np.ndarray, dst: np.ndarray,
                   dsrc: np.ndarray, ddst: np.ndarray) -> np.ndarray:
    """Degree-based hashing choice: the edge is hashed by src's id iff
    deg(src) < deg(dst); ties go to dst."""
    return (dsrc < ddst).astype(np.uint8)


def dbh_parts(src: np.ndarray, dst: np.ndarray, dsrc: np.ndarray, ddst: np.ndarray,
              m: int, mix: bool = False) -> np.ndarray:
    chosen = np.where(dsrc < ddst, src, dst)
    return (_hashed(chosen, mix) % np.uint64(m)).astype(np.int64)


def dbhx_choose_src(src: np.ndarray, dst: np.ndarray,
                    dsrc: np.ndarray, ddst: np.ndarray, tau: int) -> np.ndarray:
    """Thresholded choice: above the degree threshold hash the lower-degree
    endpoint (ties to src); below it hash the lower vertex id."""
    high = (dsrc > tau) | (ddst > tau)
    return np.where(high, dsrc <= ddst, src <= dst).astype(np.uint8)


def dbhx_parts(src: np.ndarray, dst: np.ndarray, dsrc: np.ndarray, ddst: np.ndarray,
               m: int, tau: int, spread: int, mix: bool = False) -> np.ndarray:
    """Two-level rule: an edge first picks a partition set via
    (src + dst) mod spread, then hashes its chosen endpoint within the set.

    Partitions are split into ``spread`` contiguous sets of floor(m/spread)
    partitions; the first m mod spread sets own one extra partition.
    """
    spread_u = np.uint64(spread)
    s = (src % spread_u + dst % spread_u) % spread_u  # overflow-safe (src + dst) mod spread
    pis = np.uint64(m // spread)
    rem = np.uint64(m % spread)
    base = s * pis + np.minimum(s, rem)
    size = pis + (s < rem).astype(np.uint64)
    chosen = np.where(dbhx_choose_src(src, dst, dsrc, ddst, tau) == 1, src, dst)
    return (base + _hashed(chosen, mix) % size).astype(np.int64)


def partition_stats(src_index: np.ndarray, dst_index: np.ndarray, parts: np.ndarray,
                    num_parts: int, num_vertices: int):
    """Per-partition accumulation over the 2E endpoint slots.

    Returns (sizes, vertex_counts, sum_inner_sq, rho):
      sizes[j]         edge count of partition j
      vertex_counts[j] distinct vertices incident to partition j's edges
      sum_inner_sq[j]  sum over those vertices of (inner degree)^2
      rho[v]           number of distinct partitions containing vertex v
    """
    m = int(num_parts)
    slot_v = np.concatenate([src_index, dst_index]).astype(np.int64)
    slot_p = np.concatenate([parts, parts]).astype(np.int64)
    keys = np.sort(slot_v * m + slot_p)
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    counts = np.diff(np.r_[starts, len(keys)]).astype(np.int64)
    uniq = keys[starts]
    part_of = (uniq % m).astype(np.int64)
    vert_of = (uniq // m).astype(np.int64)

    sizes = np.bincount(parts, minlength=m).astype(np.int64)
    vertex_counts = np.bincount(part_of, minlength=m).astype(np.int64)
    sum_inner_sq = np.zeros(m, dtype=np.int64)
    np.add.at(sum_inner_sq, part_of, counts * counts)
    rho = np.bincount(vert_of, minlength=num_vertices).astype(np.int64)
    return sizes, vertex_counts, sum_inner_sq, rho


def decentral_counts(choose_src: np.ndarray, src_index: np.ndarray,
                     dst_index: np.ndarray, num_vertices: int) -> np.ndarray:
    """h[v]: edges incident to v hashed by the other endpoint's id.

    Each edge is decentral for exactly one endpoint slot (for a self-loop
    both slots are the same vertex, which still gains exactly 1), so the
    result sums to |E|.
    """
    other = np.where(choose_src == 1, dst_index, src_index)
    return np.bincount(other, minlength=num_vertices).astype(np.int64)
