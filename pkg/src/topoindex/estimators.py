"""scikit-learn transformer that turns molecular graphs into index features."""

from __future__ import annotations

from typing import Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import Graph
from .indices import INDEX_ALIASES, INDEX_LABELS, INDEX_NAMES, index_vector
from .smiles import parse_alkane


def check_graphs(X) -> list[Graph]:
    """Coerce ``X`` into a list of graphs.

    Accepts an iterable whose items are :class:`Graph` objects, alkane SMILES
    strings, or ``(n, edge_pairs)`` tuples. A 2-D array with a single column
    (as produced inside a ``ColumnTransformer``) is flattened first.
    """
    if isinstance(X, (Graph, str)):
        raise TypeError("expected a collection of graphs, got a single item")
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        elif X.ndim != 1:
            raise ValueError(f"expected a 1-D collection of graphs, got shape {X.shape}")
    graphs = []
    for i, item in enumerate(X):
        if isinstance(item, Graph):
            graphs.append(item)
        elif isinstance(item, str):
            graphs.append(parse_alkane(item))
        elif isinstance(item, tuple) and len(item) == 2:
            graphs.append(Graph(item[0], item[1]))
        else:
            raise TypeError(f"sample {i}: cannot interpret {type(item).__name__} as a graph")
    if not graphs:
        raise ValueError("found 0 samples; at least one graph is required")
    return graphs


def resolve_indices(indices: Iterable[str] | None) -> tuple[str, ...]:
    """Map labels ("S", "Salpha", ...) or field names to field names."""
    if indices is None:
        return INDEX_NAMES
    out = []
    for name in indices:
        field = INDEX_ALIASES.get(name, name)
        if field not in INDEX_NAMES:
            raise ValueError(f"unknown index {name!r}; choose from {sorted(INDEX_LABELS.values())}")
        out.append(field)
    return tuple(out)


class TopologicalIndexTransformer(TransformerMixin, BaseEstimator):
    """Compute topological indices for each input graph.

    Parameters
    ----------
    indices : sequence of str, optional
        Which indices to emit, by field name (``"s_alpha"``) or label
        (``"Salpha"``). Defaults to all eleven.

    Attributes
    ----------
    indices_ : tuple of str
        Resolved field names, in output column order.
    """

    def __init__(self, indices=None):
        self.indices = indices

    def fit(self, X, y=None):
        check_graphs(X)
        self.indices_ = resolve_indices(self.indices)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "indices_")
        rows = []
        for g in check_graphs(X):
            vec = index_vector(g)
            rows.append([float(getattr(vec, name)) for name in self.indices_])
        return np.asarray(rows, dtype=float)

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "indices_")
        return np.asarray([INDEX_LABELS[name] for name in self.indices_], dtype=object)

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        tags.input_tags.string = True
        tags.requires_fit = True
        return tags
