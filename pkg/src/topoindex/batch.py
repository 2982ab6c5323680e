"""Compiled index computation over many graphs with a common vertex count.

A batch is ``edges`` of shape ``(B, m, 2)`` plus a ``valid`` mask of shape
``(B, m)``; rows may pad with invalid edges so graphs with different edge
counts share one array. Neighbourhoods are held as per-vertex bitmasks.
ev/ve-degrees are counted from closed-neighbourhood membership, not from
the tree shortcuts the verifier is checking.
"""

from __future__ import annotations

import numba
import numpy as np

INVARIANT_NAMES: tuple[str, ...] = (
    "m1",
    "m2",
    "forgotten",
    "s_ev",
    "s_alpha",
    "s_beta",
    "s_mu",
    "t_ev",
    "t_ve",
    "triangles",
    "ve_is_neighbour_degree_sum",
)


@numba.njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@numba.njit(cache=True)
def _invariants_kernel(n, edges, valid, out):
    B, m = valid.shape
    adj = np.zeros(n, dtype=np.int64)
    closed = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    cv = np.zeros(n, dtype=np.int64)
    nds = np.zeros(n, dtype=np.int64)
    for g in range(B):
        adj[:] = 0
        for j in range(m):
            if valid[g, j]:
                a = edges[g, j, 0]
                b = edges[g, j, 1]
                adj[a] |= np.int64(1) << b
                adj[b] |= np.int64(1) << a
        m1 = 0
        f = 0
        for v in range(n):
            closed[v] = adj[v] | (np.int64(1) << v)
            deg[v] = _popcount(adj[v])
            m1 += deg[v] * deg[v]
            f += deg[v] * deg[v] * deg[v]
        # ve-degree: edges with at least one endpoint in N[v]
        for v in range(n):
            c = 0
            for j in range(m):
                if valid[g, j]:
                    if (closed[v] >> edges[g, j, 0]) & 1 or (closed[v] >> edges[g, j, 1]) & 1:
                        c += 1
            cv[v] = c
            nds[v] = 0
        m2 = 0
        s_ev = 0
        s_beta = 0
        s_mu = 0
        t_ev = 0
        common = 0
        for j in range(m):
            if valid[g, j]:
                a = edges[g, j, 0]
                b = edges[g, j, 1]
                ce = _popcount(closed[a] | closed[b])
                s_ev += ce * ce
                t_ev += ce
                common += _popcount(adj[a] & adj[b])
                m2 += deg[a] * deg[b]
                s_beta += cv[a] + cv[b]
                s_mu += cv[a] * cv[b]
                nds[a] += deg[b]
                nds[b] += deg[a]
        s_alpha = 0
        t_ve = 0
        nds_ok = 1
        for v in range(n):
            s_alpha += cv[v] * cv[v]
            t_ve += cv[v]
            if cv[v] != nds[v]:
                nds_ok = 0
        out[g, 0] = m1
        out[g, 1] = m2
        out[g, 2] = f
        out[g, 3] = s_ev
        out[g, 4] = s_alpha
        out[g, 5] = s_beta
        out[g, 6] = s_mu
        out[g, 7] = t_ev
        out[g, 8] = t_ve
        out[g, 9] = common // 3
        out[g, 10] = nds_ok


def batch_invariants(n: int, edges: np.ndarray, valid: np.ndarray) -> dict[str, np.ndarray]:
    """Per-graph invariants keyed by :data:`INVARIANT_NAMES`."""
    edges = np.ascontiguousarray(edges, dtype=np.int64)
    valid = np.ascontiguousarray(valid, dtype=np.bool_)
    out = np.empty((valid.shape[0], len(INVARIANT_NAMES)), dtype=np.int64)
    _invariants_kernel(n, edges, valid, out)
    result = {name: out[:, k] for k, name in enumerate(INVARIANT_NAMES)}
    result["ve_is_neighbour_degree_sum"] = result["ve_is_neighbour_degree_sum"].astype(bool)
    return result


def sorted_edge_keys(n: int, edges: np.ndarray, valid: np.ndarray) -> np.ndarray:
    """Row-wise sorted edge codes ``u*n+v``, padded with -1 at the end.

    Lexicographic order on these rows equals lexicographic order on sorted
    edge lists (a proper prefix sorts first).
    """
    big = n * n
    codes = np.where(valid, edges[..., 0] * n + edges[..., 1], big)
    codes = np.sort(codes, axis=1)
    return np.where(codes == big, -1, codes)


def lexmin_row(keys: np.ndarray) -> int:
    """Index of the lexicographically smallest row."""
    order = np.lexsort(keys.T[::-1])
    return int(order[0])


def decode_key(n: int, key) -> list[tuple[int, int]]:
    return [(int(c) // n, int(c) % n) for c in key if c >= 0]
