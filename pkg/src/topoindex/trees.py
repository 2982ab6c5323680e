"""Tree centroids and AHU-style canonical strings."""

from __future__ import annotations

from .graph import Graph, GraphError, is_tree


def centroids(g: Graph) -> list[int]:
    """The one or two vertices minimising the largest remaining component."""
    if not is_tree(g):
        raise GraphError("centroids are defined here for trees only")
    n = g.n
    order, parent = _dfs_order(g, 0)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best = n
    found: list[int] = []
    for v in range(n):
        heaviest = n - size[v]
        for w in g.neighbors(v):
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, found = heaviest, [v]
        elif heaviest == best:
            found.append(v)
    return found


def _dfs_order(g: Graph, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * g.n
    order = []
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        order.append(v)
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    return order, parent


def rooted_forms(g: Graph, root: int) -> tuple[list[str], list[int], list[int]]:
    """Canonical string of every subtree when ``g`` hangs from ``root``.

    Returns ``(forms, heights, parent)`` indexed by vertex.
    """
    order, parent = _dfs_order(g, root)
    forms = [""] * g.n
    heights = [0] * g.n
    for v in reversed(order):
        kids = [w for w in g.neighbors(v) if w != parent[v]]
        forms[v] = "(" + "".join(sorted(forms[w] for w in kids)) + ")"
        heights[v] = 1 + max((heights[w] for w in kids), default=-1)
    return forms, heights, parent


def tree_canonical_form(g: Graph) -> str:
    """String equal for two trees exactly when they are isomorphic."""
    return min(rooted_forms(g, c)[0][c] for c in centroids(g))


def are_isomorphic_trees(a: Graph, b: Graph) -> bool:
    return a.n == b.n and tree_canonical_form(a) == tree_canonical_form(b)
