import math

import networkx as nx
import pytest
from hypothesis import given, settings

from topoindex.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph, triangle_count
from topoindex.indices import (
    INDEX_ALIASES,
    INDEX_LABELS,
    INDEX_NAMES,
    IndexVector,
    ev_zagreb,
    first_zagreb,
    forgotten,
    index_vector,
    randic,
    second_zagreb,
    total_ev_degree,
    total_ve_degree,
    ve_randic,
    ve_zagreb_alpha,
    ve_zagreb_beta,
    ve_zagreb_mu,
    wiener,
)

from test_graph import graphs


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _ve_brute(g):
    # count edges touching N[v] straight from the definition
    out = []
    for v in range(g.n):
        ball = {v, *g.neighbors(v)}
        out.append(sum(1 for a, b in g.edges if a in ball or b in ball))
    return out


def test_octane_path(p8):
    v = index_vector(p8)
    assert (v.wiener, v.m1, v.m2, v.s_ev, v.s_alpha, v.s_beta, v.s_mu, v.forgotten) == (
        84, 26, 24, 98, 90, 48, 84, 50,
    )
    assert v.randic == pytest.approx(3.914, abs=5e-4)
    assert v.r_ve == pytest.approx(2.144, abs=5e-4)
    assert v.t_total == 26


def test_star8(star8):
    v = index_vector(star8)
    assert (v.m1, v.m2, v.forgotten, v.s_ev, v.s_alpha, v.s_beta, v.s_mu) == (56, 49, 350, 448, 392, 98, 343)
    assert v.r_ve == pytest.approx(1.0)
    assert v.wiener == 49


def test_worked_example(g9):
    assert ev_zagreb(g9) == 175
    assert ve_zagreb_alpha(g9) == 183
    assert ve_zagreb_mu(g9) == 202
    assert second_zagreb(g9) == 46
    assert first_zagreb(g9) == 42
    assert total_ev_degree(g9) == total_ve_degree(g9) == 39
    # definitional values; the printed ones (84 and 13.425) do not follow from the definitions
    assert ve_zagreb_beta(g9) == 85
    assert ve_randic(g9) == pytest.approx(2.009, abs=1e-3)


@pytest.mark.parametrize("n", range(5, 13))
def test_path_closed_forms(n):
    p = path_graph(n)
    assert ev_zagreb(p) == 16 * n - 30
    assert ve_zagreb_alpha(p) == 16 * n - 38
    assert ve_zagreb_beta(p) == 8 * n - 16
    assert ve_zagreb_mu(p) == 16 * n - 44
    assert wiener(p) == (n**3 - n) // 6


@pytest.mark.parametrize("n", range(3, 13))
def test_star_closed_forms(n):
    s = star_graph(n)
    assert ev_zagreb(s) == n * n * (n - 1)
    assert ve_zagreb_alpha(s) == n * (n - 1) ** 2
    assert ve_zagreb_beta(s) == 2 * (n - 1) ** 2
    assert ve_zagreb_mu(s) == (n - 1) ** 3
    assert wiener(s) == (n - 1) ** 2


@pytest.mark.parametrize("n", range(3, 13))
def test_complete_closed_forms(n):
    k = complete_graph(n)
    assert ev_zagreb(k) == n**3 * (n - 1) // 2
    assert ve_zagreb_alpha(k) == n**3 * (n - 1) ** 2 // 4
    assert ve_zagreb_beta(k) == n**2 * (n - 1) ** 2 // 2
    assert ve_zagreb_mu(k) == n**3 * (n - 1) ** 3 // 8
    assert randic(k) == pytest.approx(n / 2)


def test_cycle():
    c = cycle_graph(6)
    assert ev_zagreb(c) == 6 * 16
    assert ve_zagreb_alpha(c) == 6 * 16
    assert index_vector(c).t_total == 24


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_against_networkx_and_brute_force(g):
    h = _nx(g)
    if not nx.is_connected(h):
        return
    ve = _ve_brute(g)
    assert first_zagreb(g) == sum(d * d for _, d in h.degree())
    assert forgotten(g) == sum(d**3 for _, d in h.degree())
    assert second_zagreb(g) == sum(h.degree(a) * h.degree(b) for a, b in h.edges)
    assert triangle_count(g) == sum(nx.triangles(h).values()) // 3
    assert ve_zagreb_alpha(g) == sum(x * x for x in ve)
    assert ve_zagreb_beta(g) == sum(ve[a] + ve[b] for a, b in g.edges)
    assert ve_zagreb_mu(g) == sum(ve[a] * ve[b] for a, b in g.edges)
    ev = [len({a, b, *h[a], *h[b]}) for a, b in g.edges]
    assert ev_zagreb(g) == sum(x * x for x in ev)
    assert wiener(g) == nx.wiener_index(h)
    assert ve_randic(g) == pytest.approx(math.fsum((ve[a] * ve[b]) ** -0.5 for a, b in g.edges))


def test_index_vector_access(p8):
    v = index_vector(p8)
    assert isinstance(v, IndexVector)
    assert v["Salpha"] == v["s_alpha"] == 90
    assert tuple(v.as_dict()) == INDEX_NAMES
    assert len(v.as_tuple()) == len(INDEX_NAMES)
    with pytest.raises(KeyError):
        v["nope"]
    assert {INDEX_ALIASES[label] for label in INDEX_LABELS.values()} == set(INDEX_NAMES)


@pytest.mark.parametrize("fn", [wiener, first_zagreb, ev_zagreb, ve_zagreb_beta, ve_randic, index_vector])
def test_indices_need_connected(fn):
    with pytest.raises(ValueError):
        fn(Graph(3, [(0, 1)]))
