"""Exhaustive enumeration of labeled trees and connected graphs.

Two flavours live here. The generators yield :class:`Graph` objects one at a
time and are meant for small ``n`` and for use as an oracle. The ``*_batch``
functions decode a contiguous rank range into numpy edge arrays so that the
verifier can scan millions of graphs; a rank range is the unit of parallel
work.
"""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Iterator

import numba
import numpy as np

from .graph import Graph, GraphError

TREE_GUARD = 9
GRAPH_GUARD = 7


class GuardError(GraphError):
    """Requested size is outside the enumeration guard."""


def check_tree_guard(n: int, limit: int = TREE_GUARD) -> None:
    if n < 2:
        raise GuardError(f"labeled trees need n >= 2, got {n}")
    if n > limit:
        raise GuardError(f"n={n} exceeds the tree enumeration guard ({limit})")


def check_graph_guard(n: int, limit: int = GRAPH_GUARD) -> None:
    if n < 2:
        raise GuardError(f"connected graph enumeration needs n >= 2, got {n}")
    if n > limit:
        raise GuardError(f"n={n} exceeds the connected-graph enumeration guard ({limit})")


def tree_count(n: int) -> int:
    return n ** (n - 2)


def prufer_decode(seq: tuple[int, ...] | list[int], n: int) -> Graph:
    """Tree on ``n`` vertices whose Prüfer sequence is ``seq``."""
    if len(seq) != n - 2:
        raise GraphError(f"a Prüfer sequence for n={n} has length {n - 2}")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def enumerate_labeled_trees(n: int, limit: int = TREE_GUARD) -> Iterator[Graph]:
    """All ``n**(n-2)`` labeled trees, in Prüfer-sequence order."""
    check_tree_guard(n, limit)
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> np.ndarray:
    """All pairs ``(i, j)``, ``i < j``, in lexicographic order; bit k of a mask is pair k."""
    return np.array([(i, j) for i in range(n) for j in range(i + 1, n)], dtype=np.int64).reshape(-1, 2)


def enumerate_connected_graphs(n: int, limit: int = GRAPH_GUARD) -> Iterator[Graph]:
    """All connected labeled simple graphs on ``n`` vertices, by edge-subset mask."""
    check_graph_guard(n, limit)
    pairs = [tuple(p) for p in vertex_pairs(n).tolist()]
    total = 1 << len(pairs)
    step = 1 << 14
    for start in range(0, total, step):
        masks, _ = connected_batch(n, start, min(total, start + step))
        for mask in masks.tolist():
            yield Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


@numba.njit(cache=True)
def _prufer_kernel(n, start, stop, edges):
    seq = np.empty(max(n - 2, 0), dtype=np.int64)
    deg = np.empty(n, dtype=np.int64)
    for g in range(stop - start):
        r = start + g
        for i in range(n - 3, -1, -1):
            seq[i] = r % n
            r //= n
        deg[:] = 1
        for i in range(n - 2):
            deg[seq[i]] += 1
        for i in range(n - 2):
            leaf = 0
            while deg[leaf] != 1:
                leaf += 1
            x = seq[i]
            edges[g, i, 0] = min(leaf, x)
            edges[g, i, 1] = max(leaf, x)
            deg[leaf] -= 1
            deg[x] -= 1
        first = 0
        while deg[first] != 1:
            first += 1
        last = n - 1
        while deg[last] != 1:
            last -= 1
        edges[g, n - 2, 0] = first
        edges[g, n - 2, 1] = last
        # insertion sort by (lo, hi)
        for i in range(1, n - 1):
            a = edges[g, i, 0]
            b = edges[g, i, 1]
            k = i - 1
            while k >= 0 and (edges[g, k, 0] > a or (edges[g, k, 0] == a and edges[g, k, 1] > b)):
                edges[g, k + 1, 0] = edges[g, k, 0]
                edges[g, k + 1, 1] = edges[g, k, 1]
                k -= 1
            edges[g, k + 1, 0] = a
            edges[g, k + 1, 1] = b


def prufer_batch(n: int, start: int, stop: int) -> np.ndarray:
    """Edges of the trees with Prüfer ranks ``start..stop-1``.

    Rank order is the lexicographic order of Prüfer sequences, matching
    :func:`enumerate_labeled_trees`. Returns an int64 array of shape
    ``(B, n-1, 2)`` whose rows are sorted edge lists.
    """
    edges = np.empty((stop - start, n - 1, 2), dtype=np.int64)
    _prufer_kernel(n, start, stop, edges)
    return edges


@numba.njit(cache=True)
def _connected_kernel(n, pairs, start, stop, keep):
    adj = np.zeros(n, dtype=np.int64)
    full = (np.int64(1) << n) - 1
    count = 0
    for mask in range(start, stop):
        adj[:] = 0
        for k in range(pairs.shape[0]):
            if (mask >> k) & 1:
                adj[pairs[k, 0]] |= np.int64(1) << pairs[k, 1]
                adj[pairs[k, 1]] |= np.int64(1) << pairs[k, 0]
        reach = np.int64(1)
        frontier = np.int64(1)
        while frontier:
            grown = reach
            for v in range(n):
                if (frontier >> v) & 1:
                    grown |= adj[v]
            frontier = grown & ~reach
            reach = grown
        if reach == full:
            keep[count] = mask
            count += 1
    return count


def connected_batch(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """Connected graphs among edge masks ``start..stop-1``.

    Returns ``(masks, bits)``: the surviving masks and their ``(B, n(n-1)/2)``
    boolean edge-indicator rows aligned with :func:`vertex_pairs`.
    """
    pairs = vertex_pairs(n)
    keep = np.empty(stop - start, dtype=np.int64)
    count = _connected_kernel(n, pairs, start, stop, keep)
    masks = keep[:count]
    bits = ((masks[:, None] >> np.arange(len(pairs), dtype=np.int64)) & 1).astype(bool)
    return masks, bits
