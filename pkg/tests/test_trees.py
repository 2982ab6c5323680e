import itertools
import random

import networkx as nx

from topoindex.enumeration import enumerate_labeled_trees
from topoindex.graph import Graph, path_graph, star_graph
from topoindex.trees import are_isomorphic_trees, centroids, tree_canonical_form


def test_centroids():
    assert centroids(path_graph(5)) == [2]
    assert sorted(centroids(path_graph(6))) == [2, 3]
    assert centroids(star_graph(7)) == [0]


def test_canonical_form_counts_unlabeled_trees():
    # OEIS A000055: 1, 1, 1, 2, 3, 6, 11, 23
    for n, expected in [(4, 2), (5, 3), (6, 6), (7, 11)]:
        forms = {tree_canonical_form(t) for t in enumerate_labeled_trees(n)}
        assert len(forms) == expected


def test_agrees_with_networkx():
    rng = random.Random(7)
    trees = list(enumerate_labeled_trees(7))
    for a, b in (rng.sample(trees, 2) for _ in range(300)):
        na, nb = nx.Graph(list(a.edges)), nx.Graph(list(b.edges))
        assert are_isomorphic_trees(a, b) == nx.is_isomorphic(na, nb)


def test_invariant_under_relabeling():
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6)])
    base = tree_canonical_form(g)
    for perm in itertools.islice(itertools.permutations(range(7)), 0, 5040, 101):
        h = Graph(7, [(perm[a], perm[b]) for a, b in g.edges])
        assert tree_canonical_form(h) == base
