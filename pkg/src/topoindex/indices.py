"""Classical and ev/ve-degree topological indices.

Integer-valued indices are returned as Python ints. The two Randić-type
indices are floats summed sequentially over ``g.edges`` (sorted), so results
are bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass, fields

from .graph import (
    Graph,
    all_pairs_distance,
    degrees,
    ev_degrees,
    require_connected,
    triangle_count,
    ve_degrees,
)

__all__ = [
    "INDEX_NAMES",
    "INDEX_LABELS",
    "IndexVector",
    "wiener",
    "first_zagreb",
    "second_zagreb",
    "forgotten",
    "randic",
    "ev_zagreb",
    "ve_zagreb_alpha",
    "ve_zagreb_beta",
    "ve_zagreb_mu",
    "ve_randic",
    "total_ev_degree",
    "total_ve_degree",
    "index_vector",
]


def wiener(g: Graph) -> int:
    dist = all_pairs_distance(g)
    return sum(sum(row) for row in dist) // 2


def first_zagreb(g: Graph) -> int:
    require_connected(g)
    return sum(d * d for d in degrees(g))


def second_zagreb(g: Graph) -> int:
    require_connected(g)
    deg = degrees(g)
    return sum(deg[u] * deg[v] for u, v in g.edges)


def forgotten(g: Graph) -> int:
    require_connected(g)
    return sum(d**3 for d in degrees(g))


def randic(g: Graph) -> float:
    require_connected(g)
    deg = degrees(g)
    return _inv_sqrt_sum(g, deg)


def ev_zagreb(g: Graph) -> int:
    """Sum of squared ev-degrees over edges (the index S)."""
    require_connected(g)
    return sum(c * c for c in ev_degrees(g))


def ve_zagreb_alpha(g: Graph) -> int:
    require_connected(g)
    return sum(c * c for c in ve_degrees(g))


def ve_zagreb_beta(g: Graph) -> int:
    require_connected(g)
    cv = ve_degrees(g)
    return sum(cv[u] + cv[v] for u, v in g.edges)


def ve_zagreb_mu(g: Graph) -> int:
    require_connected(g)
    cv = ve_degrees(g)
    return sum(cv[u] * cv[v] for u, v in g.edges)


def ve_randic(g: Graph) -> float:
    require_connected(g)
    return _inv_sqrt_sum(g, ve_degrees(g))


def total_ev_degree(g: Graph) -> int:
    """Total ev-degree, checked against the total ve-degree."""
    require_connected(g)
    te = sum(ev_degrees(g))
    tv = sum(ve_degrees(g))
    if te != tv:
        raise AssertionError(f"total ev-degree {te} != total ve-degree {tv}")
    return te


def total_ve_degree(g: Graph) -> int:
    require_connected(g)
    return sum(ve_degrees(g))


def _inv_sqrt_sum(g: Graph, weight: list[int]) -> float:
    total = 0.0
    for u, v in g.edges:
        total += 1.0 / math.sqrt(weight[u] * weight[v])
    return total


@dataclass(frozen=True)
class IndexVector:
    """All index values of one connected graph."""

    wiener: int
    m1: int
    m2: int
    randic: float
    forgotten: int
    s_ev: int
    s_alpha: int
    s_beta: int
    s_mu: int
    r_ve: float
    t_total: int

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def as_tuple(self) -> tuple:
        return astuple(self)

    def __getitem__(self, name: str):
        key = INDEX_ALIASES.get(name, name)
        if key not in INDEX_NAMES:
            raise KeyError(name)
        return getattr(self, key)


INDEX_NAMES: tuple[str, ...] = tuple(f.name for f in fields(IndexVector))

# short labels used in tables and CLI output
INDEX_LABELS: dict[str, str] = {
    "wiener": "W",
    "m1": "M1",
    "m2": "M2",
    "randic": "R",
    "forgotten": "F",
    "s_ev": "S",
    "s_alpha": "Salpha",
    "s_beta": "Sbeta",
    "s_mu": "Smu",
    "r_ve": "Ralpha",
    "t_total": "Te",
}
INDEX_ALIASES: dict[str, str] = {label: name for name, label in INDEX_LABELS.items()}


def index_vector(g: Graph) -> IndexVector:
    """Compute every index; ve-degrees are computed once and shared."""
    dist = all_pairs_distance(g)  # also rejects disconnected input
    deg = degrees(g)
    cv = ve_degrees(g)
    ce = ev_degrees(g)
    m1 = sum(d * d for d in deg)
    t_total = sum(ce)
    if t_total != sum(cv):
        raise AssertionError("total ev-degree differs from total ve-degree")
    if t_total != m1 - 3 * triangle_count(g):
        raise AssertionError("total ev-degree differs from M1 - 3 * triangles")
    return IndexVector(
        wiener=sum(sum(row) for row in dist) // 2,
        m1=m1,
        m2=sum(deg[u] * deg[v] for u, v in g.edges),
        randic=_inv_sqrt_sum(g, deg),
        forgotten=sum(d**3 for d in deg),
        s_ev=sum(c * c for c in ce),
        s_alpha=sum(c * c for c in cv),
        s_beta=sum(cv[u] + cv[v] for u, v in g.edges),
        s_mu=sum(cv[u] * cv[v] for u, v in g.edges),
        r_ve=_inv_sqrt_sum(g, cv),
        t_total=t_total,
    )
